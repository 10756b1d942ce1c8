#pragma once

#include "bckcode/algebra.hpp"
#include "bckcode/code.hpp"

#include <string>
#include <vector>

namespace bckcode {

/// A map f: A -> X from an ordered, labeled domain into an algebra's carrier.
/// Domain order fixes the bit positions of every generated codeword.
class BckFunction {
public:
    /// Throws InputError on duplicate labels, size mismatch or out-of-range values.
    BckFunction(CayleyAlgebra algebra, std::vector<std::string> domain, std::vector<Element> values);

    /// A = X in index order, f(x) = x; labels are the algebra's element names.
    static BckFunction identity(const CayleyAlgebra& algebra);
    /// f(x) = x on the given elements, in the given order.
    static BckFunction inclusion(const CayleyAlgebra& algebra, std::vector<Element> elements);

    const CayleyAlgebra& algebra() const noexcept { return algebra_; }
    const std::vector<std::string>& domain() const noexcept { return domain_; }
    const std::vector<Element>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return domain_.size(); }

private:
    CayleyAlgebra algebra_;
    std::vector<std::string> domain_;
    std::vector<Element> values_;
};

/// f_r as a codeword: bit i is 1 iff r * f(a_i) = 0.
Codeword cut_function(const BckFunction& f, Element r);
/// A_r = { a in A : r * f(a) = 0 }, in domain order.
std::vector<std::string> cut_subset(const BckFunction& f, Element r);

struct EquivalenceClass {
    Element representative;        // smallest member
    std::vector<Element> members;  // ascending
    Codeword cut;                  // the shared cut function
};

/// Partition of the carrier by equal cut subsets, ordered by representative.
struct EquivalenceClasses {
    std::vector<EquivalenceClass> classes;
    std::vector<std::size_t> class_of;  // element -> index into classes
};

EquivalenceClasses equivalence_classes(const BckFunction& f);

/// One codeword per equivalence class, lex-descending. Requires a BCK-algebra.
BlockCode generate_code(const BckFunction& f);

/// generate_code with the identity function on the carrier.
BlockCode canonical_code(const CayleyAlgebra& alg);

/// Whether both algebras have the same canonical code (as sets of words).
bool code_similar(const CayleyAlgebra& a1, const CayleyAlgebra& a2);

namespace detail {
// generate_code without the axiom check, for callers that already hold a verified algebra.
BlockCode generate_code_unchecked(const BckFunction& f);
}  // namespace detail

}  // namespace bckcode
