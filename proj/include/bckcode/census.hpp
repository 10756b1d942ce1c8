#pragma once

#include "bckcode/algebra.hpp"
#include "bckcode/code.hpp"

#include <cstdint>
#include <vector>

namespace bckcode {

inline constexpr unsigned kDefaultCensusBound = 5;

struct EnumerateOptions {
    bool allow_order_six = false;  // order 6 takes minutes, so it is opt-in
    unsigned workers = 1;
};

/// Every BCK Cayley table on {0..n-1} with zero 0, in row-major / ascending
/// value order. Cells 0*y, x*x and x*0 are pinned to 0, 0 and x; every other
/// cell is searched with partial axiom checks after each assignment.
/// The result does not depend on `workers`.
std::vector<CayleyAlgebra> enumerate_bck(unsigned n, const EnumerateOptions& options = {});

/// The normalized canonical code minimized over all zero-fixing relabelings
/// (lex-greatest row sequence). Isomorphic algebras share it.
BlockCode label_invariant_code(const CayleyAlgebra& alg);

struct IsoClass {
    CayleyAlgebra representative;  // first table of the class in enumeration order
    BlockCode canonical_code;      // of the representative
    std::size_t tables = 0;        // labeled tables in the class
};

struct CensusReport {
    unsigned order = 0;
    std::uint64_t total_tables = 0;
    std::uint64_t iso_classes = 0;
    // Distinct normalized canonical codes over all labeled tables.
    std::uint64_t similarity_classes = 0;
    // Distinct label_invariant_code values; bounded above by iso_classes.
    std::uint64_t invariant_similarity_classes = 0;
    // Whether some isomorphism class holds tables with different canonical codes.
    bool isomorphic_tables_with_distinct_codes = false;
    std::vector<IsoClass> class_inventory;
    std::uint64_t lower_bound = 0;  // 2^((n-1)(n-2)/2)
    bool bound_check = false;       // iso_classes >= lower_bound
};

CensusReport census(unsigned n, const EnumerateOptions& options = {});

struct QuotientClass {
    BlockCode code;
    std::vector<std::size_t> members;  // indices into the input list, ascending
};

/// Groups BCK algebras of one order by canonical code; classes are ordered
/// lex-greatest code first. Throws InputError on mixed orders.
std::vector<QuotientClass> quotient_classes(const std::vector<CayleyAlgebra>& algebras);

}  // namespace bckcode
