#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bckcode {

using Element = std::uint32_t;

/// A finite algebra of type (2,0) given by its Cayley table.
///
/// The carrier is {0, ..., order-1} and the distinguished zero is always
/// element 0. Construction only validates that every entry is in range;
/// whether the table is a BCK-algebra is decided by check_axioms().
///
/// The table is shared between copies, so passing algebras by value is cheap.
class CayleyAlgebra {
public:
    /// `table` is row-major: table[x * order + y] = x * y.
    CayleyAlgebra(std::size_t order, std::vector<Element> table,
                  std::vector<std::string> names = {});

    /// Builds from nested rows; every row must have rows.size() entries.
    static CayleyAlgebra from_rows(const std::vector<std::vector<Element>>& rows,
                                   std::vector<std::string> names = {});

    std::size_t order() const noexcept { return order_; }
    static constexpr Element zero() noexcept { return 0; }

    Element op(Element x, Element y) const noexcept { return (*table_)[x * order_ + y]; }
    std::span<const Element> row(Element x) const noexcept {
        return {table_->data() + x * order_, order_};
    }
    std::span<const Element> table() const noexcept { return *table_; }

    /// Display label for x; falls back to the decimal index.
    std::string name(Element x) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// The same algebra with element x renamed to perm[x].
    CayleyAlgebra relabeled(std::span<const Element> perm) const;

    friend bool operator==(const CayleyAlgebra& a, const CayleyAlgebra& b) noexcept;

private:
    std::size_t order_;
    std::shared_ptr<const std::vector<Element>> table_;
    std::vector<std::string> names_;
};

/// Verdict for one axiom. When `holds` is false, `witness` holds the
/// lexicographically first violating tuple and `evaluation` the value that
/// should have been zero (for axiom 4, the element y that differs from x).
struct AxiomCheck {
    bool holds = true;
    std::vector<Element> witness;
    Element evaluation = 0;
};

struct AxiomReport {
    // axioms[0..4] correspond to the five BCI/BCK axioms in their usual order:
    //   1) ((x*y)*(x*z))*(z*y) = 0
    //   2) (x*(x*y))*y = 0
    //   3) x*x = 0
    //   4) x*y = 0 and y*x = 0 imply x = y
    //   5) 0*x = 0
    std::array<AxiomCheck, 5> axioms;
    bool is_bci = false;
    bool is_bck = false;
};

AxiomReport check_axioms(const CayleyAlgebra& alg);

/// Throws PreconditionError naming the first failed axiom unless alg is BCK.
void require_bck(const CayleyAlgebra& alg, const char* context);

struct IdentityCheck {
    bool holds = true;
    std::optional<std::pair<Element, Element>> witness;
};

/// x*(x*y) = y*(y*x) for all x, y. Requires a BCK-algebra.
IdentityCheck is_commutative(const CayleyAlgebra& alg);
/// x*(y*x) = x for all x, y. Requires a BCK-algebra.
IdentityCheck is_implicative(const CayleyAlgebra& alg);

/// A finite partial order, stored as a dense relation matrix.
class Poset {
public:
    /// Validates reflexivity, antisymmetry and transitivity, and that
    /// `minimum` (when given) lies below every element. Throws InputError.
    /// Without `minimum` the least element is looked up.
    Poset(std::size_t order, std::vector<std::uint8_t> leq,
          std::optional<Element> minimum = std::nullopt);

    /// The least element, if one exists.
    static std::optional<Element> find_minimum(std::size_t order,
                                               std::span<const std::uint8_t> leq);

    std::size_t order() const noexcept { return order_; }
    bool leq(Element x, Element y) const noexcept { return leq_[x * order_ + y] != 0; }
    bool less(Element x, Element y) const noexcept { return x != y && leq(x, y); }
    bool comparable(Element x, Element y) const noexcept { return leq(x, y) || leq(y, x); }
    std::optional<Element> minimum() const noexcept { return minimum_; }
    std::span<const std::uint8_t> relation() const noexcept { return leq_; }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::size_t order_;
    std::vector<std::uint8_t> leq_;
    std::optional<Element> minimum_;
};

/// x <= y iff x*y = 0. Requires a BCK-algebra; throws InternalError if the
/// relation is not a partial order.
Poset induced_order(const CayleyAlgebra& alg);

/// First zero-preserving bijection h (lexicographic in h(0), h(1), ...)
/// with h(x*y) = h(x) o h(y), or nullopt.
std::optional<std::vector<Element>> are_isomorphic(const CayleyAlgebra& a,
                                                   const CayleyAlgebra& b);

inline constexpr unsigned kDefaultPointwiseBound = 10;

/// All maps {1..k} -> {0,1} under (f o g)(x) = f(x) - min(f(x), g(x)).
/// Element i is the k-bit string of i (leftmost character = most significant bit).
CayleyAlgebra pointwise_function_algebra(unsigned k, unsigned bound = kDefaultPointwiseBound);

}  // namespace bckcode
