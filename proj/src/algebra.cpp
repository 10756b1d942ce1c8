#include "bckcode/algebra.hpp"

#include "bckcode/error.hpp"

#include <algorithm>
#include <string>

namespace bckcode {

CayleyAlgebra::CayleyAlgebra(std::size_t order, std::vector<Element> table,
                             std::vector<std::string> names)
    : order_(order), names_(std::move(names)) {
    if (order == 0) throw InputError("algebra order must be positive");
    if (table.size() != order * order)
        throw InputError("table has " + std::to_string(table.size()) + " entries, expected " +
                         std::to_string(order * order));
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= order)
            throw InputError("table entry (" + std::to_string(i / order) + "," +
                             std::to_string(i % order) + ") = " + std::to_string(table[i]) +
                             " is out of range for order " + std::to_string(order));
    }
    if (!names_.empty() && names_.size() != order)
        throw InputError("expected " + std::to_string(order) + " element names, got " +
                         std::to_string(names_.size()));
    table_ = std::make_shared<const std::vector<Element>>(std::move(table));
}

CayleyAlgebra CayleyAlgebra::from_rows(const std::vector<std::vector<Element>>& rows,
                                       std::vector<std::string> names) {
    const std::size_t n = rows.size();
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        if (rows[x].size() != n)
            throw InputError("row " + std::to_string(x) + " has " +
                             std::to_string(rows[x].size()) + " entries, expected " +
                             std::to_string(n));
        flat.insert(flat.end(), rows[x].begin(), rows[x].end());
    }
    return CayleyAlgebra(n, std::move(flat), std::move(names));
}

std::string CayleyAlgebra::name(Element x) const {
    if (x < names_.size()) return names_[x];
    return std::to_string(x);
}

CayleyAlgebra CayleyAlgebra::relabeled(std::span<const Element> perm) const {
    if (perm.size() != order_) throw InputError("permutation size does not match algebra order");
    std::vector<Element> table(order_ * order_);
    for (Element x = 0; x < order_; ++x)
        for (Element y = 0; y < order_; ++y)
            table[perm[x] * order_ + perm[y]] = perm[op(x, y)];
    std::vector<std::string> names;
    if (!names_.empty()) {
        names.resize(order_);
        for (Element x = 0; x < order_; ++x) names[perm[x]] = names_[x];
    }
    return CayleyAlgebra(order_, std::move(table), std::move(names));
}

bool operator==(const CayleyAlgebra& a, const CayleyAlgebra& b) noexcept {
    return a.order_ == b.order_ && std::ranges::equal(a.table(), b.table());
}

AxiomReport check_axioms(const CayleyAlgebra& alg) {
    AxiomReport rep;
    const Element n = static_cast<Element>(alg.order());
    auto fail = [](AxiomCheck& c, std::vector<Element> w, Element eval) {
        c.holds = false;
        c.witness = std::move(w);
        c.evaluation = eval;
    };

    auto& a1 = rep.axioms[0];
    for (Element x = 0; x < n && a1.holds; ++x)
        for (Element y = 0; y < n && a1.holds; ++y) {
            const Element xy = alg.op(x, y);
            for (Element z = 0; z < n; ++z) {
                const Element v = alg.op(alg.op(xy, alg.op(x, z)), alg.op(z, y));
                if (v != 0) {
                    fail(a1, {x, y, z}, v);
                    break;
                }
            }
        }

    auto& a2 = rep.axioms[1];
    for (Element x = 0; x < n && a2.holds; ++x)
        for (Element y = 0; y < n; ++y) {
            const Element v = alg.op(alg.op(x, alg.op(x, y)), y);
            if (v != 0) {
                fail(a2, {x, y}, v);
                break;
            }
        }

    auto& a3 = rep.axioms[2];
    for (Element x = 0; x < n; ++x) {
        if (const Element v = alg.op(x, x); v != 0) {
            fail(a3, {x}, v);
            break;
        }
    }

    auto& a4 = rep.axioms[3];
    for (Element x = 0; x < n && a4.holds; ++x)
        for (Element y = 0; y < n; ++y) {
            if (x != y && alg.op(x, y) == 0 && alg.op(y, x) == 0) {
                fail(a4, {x, y}, y);
                break;
            }
        }

    auto& a5 = rep.axioms[4];
    for (Element x = 0; x < n; ++x) {
        if (const Element v = alg.op(0, x); v != 0) {
            fail(a5, {x}, v);
            break;
        }
    }

    rep.is_bci = a1.holds && a2.holds && a3.holds && a4.holds;
    rep.is_bck = rep.is_bci && a5.holds;
    return rep;
}

void require_bck(const CayleyAlgebra& alg, const char* context) {
    const auto rep = check_axioms(alg);
    if (rep.is_bck) return;
    for (std::size_t i = 0; i < rep.axioms.size(); ++i) {
        if (!rep.axioms[i].holds)
            throw PreconditionError(std::string(context) + ": not a BCK-algebra (axiom " +
                                    std::to_string(i + 1) + " fails)");
    }
}

namespace {

template <class Identity>
IdentityCheck check_identity(const CayleyAlgebra& alg, const char* context, Identity&& id) {
    require_bck(alg, context);
    const Element n = static_cast<Element>(alg.order());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (!id(x, y)) return {false, std::pair{x, y}};
    return {};
}

}  // namespace

IdentityCheck is_commutative(const CayleyAlgebra& alg) {
    return check_identity(alg, "is_commutative", [&](Element x, Element y) {
        return alg.op(x, alg.op(x, y)) == alg.op(y, alg.op(y, x));
    });
}

IdentityCheck is_implicative(const CayleyAlgebra& alg) {
    return check_identity(alg, "is_implicative",
                          [&](Element x, Element y) { return alg.op(x, alg.op(y, x)) == x; });
}

Poset::Poset(std::size_t order, std::vector<std::uint8_t> leq, std::optional<Element> minimum)
    : order_(order), leq_(std::move(leq)), minimum_(minimum) {
    if (order_ == 0) throw InputError("poset order must be positive");
    if (leq_.size() != order_ * order_) throw InputError("relation matrix has wrong size");
    const Element n = static_cast<Element>(order_);
    for (Element x = 0; x < n; ++x) {
        if (!this->leq(x, x))
            throw InputError("relation is not reflexive at " + std::to_string(x));
        for (Element y = x + 1; y < n; ++y)
            if (this->leq(x, y) && this->leq(y, x))
                throw InputError("relation is not antisymmetric at (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (!this->leq(x, y)) continue;
            for (Element z = 0; z < n; ++z)
                if (this->leq(y, z) && !this->leq(x, z))
                    throw InputError("relation is not transitive at (" + std::to_string(x) + "," +
                                     std::to_string(y) + "," + std::to_string(z) + ")");
        }
    if (minimum_) {
        if (*minimum_ >= n) throw InputError("minimum out of range");
        for (Element x = 0; x < n; ++x)
            if (!this->leq(*minimum_, x))
                throw InputError("element " + std::to_string(*minimum_) +
                                 " is not below every element");
    } else {
        minimum_ = find_minimum(order_, leq_);
    }
}

std::optional<Element> Poset::find_minimum(std::size_t order, std::span<const std::uint8_t> leq) {
    for (Element m = 0; m < order; ++m) {
        bool below_all = true;
        for (Element x = 0; x < order && below_all; ++x) below_all = leq[m * order + x] != 0;
        if (below_all) return m;
    }
    return std::nullopt;
}

Poset induced_order(const CayleyAlgebra& alg) {
    require_bck(alg, "induced_order");
    const std::size_t n = alg.order();
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t i = 0; i < leq.size(); ++i) leq[i] = alg.table()[i] == 0;
    try {
        return Poset(n, std::move(leq), Element{0});
    } catch (const InputError& e) {
        throw InternalError(std::string("induced order of a BCK-algebra is not a partial order: ") +
                            e.what());
    }
}

namespace {

class IsoSearch {
public:
    IsoSearch(const CayleyAlgebra& a, const CayleyAlgebra& b)
        : a_(a), b_(b), n_(static_cast<Element>(a.order())), h_(n_, kUnset), used_(n_, false) {}

    std::optional<std::vector<Element>> run() {
        h_[0] = 0;
        used_[0] = true;
        if (!consistent(0)) return std::nullopt;
        if (extend(1)) return h_;
        return std::nullopt;
    }

private:
    static constexpr Element kUnset = ~Element{0};

    // Every fully mapped triple (u, v, u*v) with max(u, v) == x must commute with h.
    bool consistent(Element x) const {
        for (Element u = 0; u <= x; ++u) {
            for (const auto& [p, q] : {std::pair{u, x}, std::pair{x, u}}) {
                const Element w = a_.op(p, q);
                if (h_[w] == kUnset) continue;
                if (h_[w] != b_.op(h_[p], h_[q])) return false;
            }
        }
        // Triples whose product was unmapped when they were first seen.
        for (Element u = 0; u < x; ++u)
            for (Element v = 0; v < x; ++v)
                if (a_.op(u, v) == x && h_[x] != b_.op(h_[u], h_[v])) return false;
        return true;
    }

    bool extend(Element x) {
        if (x == n_) return true;
        for (Element img = 1; img < n_; ++img) {
            if (used_[img]) continue;
            h_[x] = img;
            used_[img] = true;
            if (consistent(x) && extend(x + 1)) return true;
            used_[img] = false;
        }
        h_[x] = kUnset;
        return false;
    }

    const CayleyAlgebra& a_;
    const CayleyAlgebra& b_;
    Element n_;
    std::vector<Element> h_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> are_isomorphic(const CayleyAlgebra& a, const CayleyAlgebra& b) {
    if (a.order() != b.order()) return std::nullopt;
    return IsoSearch(a, b).run();
}

CayleyAlgebra pointwise_function_algebra(unsigned k, unsigned bound) {
    if (k == 0) throw InputError("pointwise_function_algebra: k must be positive");
    if (k > bound)
        throw InputError("pointwise_function_algebra: k = " + std::to_string(k) +
                         " exceeds bound " + std::to_string(bound));
    const std::size_t n = std::size_t{1} << k;
    std::vector<Element> table(n * n);
    std::vector<std::string> names(n);
    for (Element f = 0; f < n; ++f) {
        for (Element g = 0; g < n; ++g) table[f * n + g] = f & ~g;
        std::string s(k, '0');
        for (unsigned bit = 0; bit < k; ++bit)
            if (f >> (k - 1 - bit) & 1u) s[bit] = '1';
        names[f] = std::move(s);
    }
    return CayleyAlgebra(n, std::move(table), std::move(names));
}

}  // namespace bckcode
