#include "bckcode/construct.hpp"

#include "bckcode/error.hpp"

#include <numeric>

namespace bckcode {

CayleyAlgebra algebra_from_poset(const Poset& p, std::vector<std::string> names) {
    const auto n = static_cast<Element>(p.order());
    const auto min = p.minimum() ? p.minimum() : Poset::find_minimum(n, p.relation());
    if (!min) throw InputError("algebra_from_poset: poset has no minimum element");
    if (!names.empty() && names.size() != n)
        throw InputError("algebra_from_poset: wrong number of names");

    // perm maps poset elements to algebra elements; only 0 and the minimum move.
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    std::swap(perm[0], perm[*min]);

    std::vector<Element> table(std::size_t{n} * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            table[perm[x] * n + perm[y]] = p.leq(x, y) ? 0 : perm[x];
    if (!names.empty()) std::swap(names[0], names[*min]);
    return CayleyAlgebra(n, std::move(table), std::move(names));
}

Poset codeword_poset(const BlockCode& code) {
    const std::size_t n = code.size();
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = preceq(code[i], code[j]);
    return Poset(n, std::move(leq), Poset::find_minimum(n, leq));
}

ConstructionResult construct_from_code(const BlockCode& code) {
    if (auto m = is_cn_member(code); !m.member)
        throw InputError("construct_from_code: " + m.reason);
    auto sorted = lex_sort_desc(code);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < sorted.size(); ++k) names.push_back("w" + std::to_string(k + 1));
    auto alg = algebra_from_poset(codeword_poset(sorted), std::move(names));
    if (!check_axioms(alg).is_bck)
        throw InternalError("construct_from_code: star algebra failed the BCK axioms");
    auto f = BckFunction::identity(alg);
    return {std::move(alg), std::move(sorted), std::move(f)};
}

bool is_self_describing(const BlockCode& code) {
    const auto sorted = lex_sort_desc(code);
    if (sorted.size() != sorted.length()) return false;
    for (std::size_t k = 0; k < sorted.size(); ++k)
        for (std::size_t j = 0; j < sorted.size(); ++j)
            if (sorted[k][j] != preceq(sorted[k], sorted[j])) return false;
    return true;
}

RoundTripReport verify_roundtrip(const BlockCode& code) {
    auto built = construct_from_code(code);
    const auto& alg = built.algebra;
    std::vector<RoundTripMismatch> mismatches;
    for (Element k = 0; k < alg.order(); ++k) {
        auto produced = cut_function(built.function, k);
        if (produced != built.source_code[k])
            mismatches.push_back({k, built.source_code[k], std::move(produced)});
    }
    auto regenerated = detail::generate_code_unchecked(built.function);
    const bool exact = regenerated == built.source_code;
    const bool self_describing = is_self_describing(built.source_code);
    if (exact != mismatches.empty())
        throw InternalError("verify_roundtrip: exactness disagrees with per-element comparison");
    return {std::move(built.source_code), std::move(regenerated), exact, std::move(mismatches),
            self_describing};
}

}  // namespace bckcode
