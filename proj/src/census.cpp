#include "bckcode/census.hpp"

#include "bckcode/codec.hpp"
#include "bckcode/error.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>

namespace bckcode {

namespace {

constexpr int kUnknown = -1;

class TableSearch {
public:
    explicit TableSearch(unsigned n) : n_(static_cast<int>(n)), t_(n * n, kUnknown) {
        for (int x = 0; x < n_; ++x) {
            at(0, x) = 0;
            at(x, x) = 0;
            at(x, 0) = x;
        }
        for (int x = 1; x < n_; ++x)
            for (int y = 1; y < n_; ++y)
                if (x != y) free_.push_back(x * n_ + y);
    }

    std::size_t free_cells() const { return free_.size(); }

    /// Runs the search with the first free cell fixed to `first` (ignored when
    /// there are no free cells).
    std::vector<CayleyAlgebra> run_partition(int first) {
        out_.clear();
        if (free_.empty()) {
            emit();
        } else {
            t_[free_[0]] = first;
            if (consistent()) descend(1);
            t_[free_[0]] = kUnknown;
        }
        return std::move(out_);
    }

private:
    int& at(int x, int y) { return t_[x * n_ + y]; }
    int get(int x, int y) const { return x < 0 || y < 0 ? kUnknown : t_[x * n_ + y]; }

    // False if any axiom instance whose cells are all known is violated.
    bool consistent() const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                const int xy = get(x, y);
                if (xy == kUnknown) continue;
                if (x != y && xy == 0 && get(y, x) == 0) return false;
                const int v2 = get(get(x, xy), y);
                if (v2 != kUnknown && v2 != 0) return false;
                for (int z = 0; z < n_; ++z) {
                    const int v1 = get(get(xy, get(x, z)), get(z, y));
                    if (v1 != kUnknown && v1 != 0) return false;
                }
            }
        return true;
    }

    void descend(std::size_t i) {
        if (i == free_.size()) {
            emit();
            return;
        }
        for (int v = 0; v < n_; ++v) {
            t_[free_[i]] = v;
            if (consistent()) descend(i + 1);
        }
        t_[free_[i]] = kUnknown;
    }

    void emit() {
        std::vector<Element> table(t_.begin(), t_.end());
        CayleyAlgebra alg(static_cast<std::size_t>(n_), std::move(table));
        if (!check_axioms(alg).is_bck)
            throw InternalError("enumerate_bck: search produced a table failing the BCK axioms");
        out_.push_back(std::move(alg));
    }

    int n_;
    std::vector<int> t_;
    std::vector<int> free_;
    std::vector<CayleyAlgebra> out_;
};

}  // namespace

std::vector<CayleyAlgebra> enumerate_bck(unsigned n, const EnumerateOptions& options) {
    if (n == 0) throw InputError("enumerate_bck: n must be positive");
    const unsigned bound = options.allow_order_six ? 6 : kDefaultCensusBound;
    if (n > bound)
        throw InputError("enumerate_bck: n = " + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound) +
                         (n == 6 ? " (order 6 must be enabled explicitly)" : ""));

    const int partitions = TableSearch(n).free_cells() == 0 ? 1 : static_cast<int>(n);
    std::vector<std::vector<CayleyAlgebra>> parts(partitions);
    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        for (int p = 0; p < partitions; ++p) parts[p] = TableSearch(n).run_partition(p);
    } else {
        for (int start = 0; start < partitions; start += static_cast<int>(workers)) {
            std::vector<std::future<std::vector<CayleyAlgebra>>> batch;
            for (int p = start; p < std::min(partitions, start + static_cast<int>(workers)); ++p)
                batch.push_back(std::async(std::launch::async,
                                           [n, p] { return TableSearch(n).run_partition(p); }));
            for (std::size_t i = 0; i < batch.size(); ++i) parts[start + i] = batch[i].get();
        }
    }

    std::vector<CayleyAlgebra> out;
    for (auto& part : parts) std::ranges::move(part, std::back_inserter(out));
    return out;
}

BlockCode label_invariant_code(const CayleyAlgebra& alg) {
    const auto n = static_cast<Element>(alg.order());
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    std::optional<std::vector<Codeword>> best;
    do {
        // Row perm[x], column perm[y] of the relabeled incidence matrix.
        std::vector<std::vector<std::uint8_t>> rows(n, std::vector<std::uint8_t>(n));
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) rows[perm[x]][perm[y]] = alg.op(x, y) == 0;
        std::vector<Codeword> words;
        words.reserve(n);
        for (auto& r : rows) words.emplace_back(std::move(r));
        std::ranges::sort(words, std::greater<>{});
        if (!best || words > *best) best = std::move(words);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    // Distinct rows: BCK cut functions are the rows of a partial-order incidence matrix.
    return BlockCode(std::move(*best));
}

namespace {

// Cheap isomorphism invariant used to bucket candidates before the search.
std::vector<std::uint32_t> degree_signature(const CayleyAlgebra& alg) {
    const auto n = static_cast<Element>(alg.order());
    std::vector<std::uint32_t> sig;
    for (Element x = 0; x < n; ++x) {
        std::uint32_t below = 0, above = 0, fixed = 0;
        for (Element y = 0; y < n; ++y) {
            below += alg.op(x, y) == 0;
            above += alg.op(y, x) == 0;
            fixed += alg.op(x, y) == x;
        }
        sig.push_back(below << 16 | above << 8 | fixed);
    }
    std::ranges::sort(sig);
    return sig;
}

}  // namespace

CensusReport census(unsigned n, const EnumerateOptions& options) {
    const auto algebras = enumerate_bck(n, options);

    CensusReport rep;
    rep.order = n;
    rep.total_tables = algebras.size();

    std::map<std::pair<std::vector<std::uint32_t>, std::vector<Codeword>>, std::vector<std::size_t>>
        buckets;
    std::set<std::vector<Codeword>> raw_codes;
    std::set<std::vector<Codeword>> invariant_codes;

    for (const auto& alg : algebras) {
        auto code = canonical_code(alg);
        raw_codes.insert(code.words());
        auto invariant = label_invariant_code(alg);
        invariant_codes.insert(invariant.words());

        auto& candidates = buckets[{degree_signature(alg), invariant.words()}];
        bool placed = false;
        for (auto idx : candidates) {
            auto& cls = rep.class_inventory[idx];
            if (are_isomorphic(cls.representative, alg)) {
                ++cls.tables;
                if (!(cls.canonical_code == code)) rep.isomorphic_tables_with_distinct_codes = true;
                placed = true;
                break;
            }
        }
        if (!placed) {
            candidates.push_back(rep.class_inventory.size());
            rep.class_inventory.push_back({alg, std::move(code), 1});
        }
    }

    rep.iso_classes = rep.class_inventory.size();
    rep.similarity_classes = raw_codes.size();
    rep.invariant_similarity_classes = invariant_codes.size();
    rep.lower_bound = cn_count(n);
    rep.bound_check = rep.iso_classes >= rep.lower_bound;
    if (rep.invariant_similarity_classes > rep.iso_classes || rep.iso_classes > rep.total_tables)
        throw InternalError("census: class counts violate invariant <= iso <= total");
    return rep;
}

std::vector<QuotientClass> quotient_classes(const std::vector<CayleyAlgebra>& algebras) {
    std::vector<QuotientClass> out;
    if (algebras.empty()) return out;
    const std::size_t n = algebras.front().order();
    std::vector<BlockCode> codes;
    for (std::size_t i = 0; i < algebras.size(); ++i) {
        if (algebras[i].order() != n)
            throw InputError("quotient_classes: algebras have mixed orders");
        codes.push_back(canonical_code(algebras[i]));
    }
    std::map<std::vector<Codeword>, std::vector<std::size_t>, std::greater<>> groups;
    for (std::size_t i = 0; i < codes.size(); ++i) groups[codes[i].words()].push_back(i);
    for (auto& [words, members] : groups) out.push_back({BlockCode(words), std::move(members)});
    return out;
}

}  // namespace bckcode
