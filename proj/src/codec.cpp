#include "bckcode/codec.hpp"

#include "bckcode/error.hpp"

#include <map>
#include <numeric>
#include <set>

namespace bckcode {

BckFunction::BckFunction(CayleyAlgebra algebra, std::vector<std::string> domain,
                         std::vector<Element> values)
    : algebra_(std::move(algebra)), domain_(std::move(domain)), values_(std::move(values)) {
    if (domain_.empty()) throw InputError("BCK-function domain must be nonempty");
    if (domain_.size() != values_.size())
        throw InputError("BCK-function has " + std::to_string(domain_.size()) + " labels but " +
                         std::to_string(values_.size()) + " values");
    std::set<std::string> seen;
    for (const auto& label : domain_)
        if (!seen.insert(label).second) throw InputError("duplicate domain label '" + label + "'");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] >= algebra_.order())
            throw InputError("value of '" + domain_[i] + "' is out of range");
}

BckFunction BckFunction::identity(const CayleyAlgebra& algebra) {
    std::vector<Element> all(algebra.order());
    std::iota(all.begin(), all.end(), Element{0});
    return inclusion(algebra, std::move(all));
}

BckFunction BckFunction::inclusion(const CayleyAlgebra& algebra, std::vector<Element> elements) {
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (auto e : elements) {
        if (e >= algebra.order()) throw InputError("inclusion: element out of range");
        labels.push_back(algebra.name(e));
    }
    return BckFunction(algebra, std::move(labels), std::move(elements));
}

Codeword cut_function(const BckFunction& f, Element r) {
    const auto& alg = f.algebra();
    if (r >= alg.order()) throw InputError("cut: element " + std::to_string(r) + " out of range");
    std::vector<std::uint8_t> bits(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) bits[i] = alg.op(r, f.values()[i]) == 0;
    return Codeword(std::move(bits));
}

std::vector<std::string> cut_subset(const BckFunction& f, Element r) {
    const auto cut = cut_function(f, r);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (cut[i]) out.push_back(f.domain()[i]);
    return out;
}

EquivalenceClasses equivalence_classes(const BckFunction& f) {
    EquivalenceClasses out;
    const auto n = static_cast<Element>(f.algebra().order());
    out.class_of.resize(n);
    std::map<Codeword, std::size_t> index;
    for (Element r = 0; r < n; ++r) {
        auto cut = cut_function(f, r);
        auto [it, inserted] = index.try_emplace(cut, out.classes.size());
        if (inserted) out.classes.push_back({r, {}, std::move(cut)});
        out.classes[it->second].members.push_back(r);
        out.class_of[r] = it->second;
    }
    return out;
}

namespace detail {

BlockCode generate_code_unchecked(const BckFunction& f) {
    auto classes = equivalence_classes(f);
    std::vector<Codeword> words;
    words.reserve(classes.classes.size());
    for (auto& c : classes.classes) words.push_back(std::move(c.cut));
    return lex_sort_desc(BlockCode(std::move(words)));
}

}  // namespace detail

BlockCode generate_code(const BckFunction& f) {
    require_bck(f.algebra(), "generate_code");
    return detail::generate_code_unchecked(f);
}

BlockCode canonical_code(const CayleyAlgebra& alg) {
    return generate_code(BckFunction::identity(alg));
}

bool code_similar(const CayleyAlgebra& a1, const CayleyAlgebra& a2) {
    return canonical_code(a1) == canonical_code(a2);
}

}  // namespace bckcode
