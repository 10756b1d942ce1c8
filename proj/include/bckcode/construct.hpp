#pragma once

#include "bckcode/algebra.hpp"
#include "bckcode/code.hpp"
#include "bckcode/codec.hpp"

#include <vector>

namespace bckcode {

/// The star algebra of a poset with least element θ:
///   x * y = θ   if x <= y
///   x * y = x   otherwise (y < x, or x and y incomparable)
///
/// If the minimum is not element 0 it is swapped with 0, so the result's
/// zero is index 0; `names` (optional) follow the swap. Throws InputError
/// when the poset has no minimum.
CayleyAlgebra algebra_from_poset(const Poset& p, std::vector<std::string> names = {});

/// The ⪯ order of Eq. (1.1) on the words of a code, in the code's own order.
Poset codeword_poset(const BlockCode& code);

struct ConstructionResult {
    CayleyAlgebra algebra;  // element k is the k-th word of source_code; 0 = all-ones
    BlockCode source_code;  // lex-descending
    BckFunction function;   // identity on the algebra
};

/// Star algebra on the code's words ordered by ⪯. Requires is_cn_member(code);
/// otherwise throws InputError carrying the failed hypothesis.
ConstructionResult construct_from_code(const BlockCode& code);

struct RoundTripMismatch {
    Element element;
    Codeword expected;
    Codeword produced;
};

struct RoundTripReport {
    BlockCode input_code;        // lex-descending
    BlockCode regenerated_code;  // canonical code of the constructed algebra
    bool exact = false;
    std::vector<RoundTripMismatch> mismatches;
    /// Bit j of w_k is 1 exactly when w_k ⪯ w_j, for all k, j.
    bool self_describing = false;
};

RoundTripReport verify_roundtrip(const BlockCode& code);

/// Whether the code's matrix is the ⪯-incidence matrix of its own rows.
bool is_self_describing(const BlockCode& code);

}  // namespace bckcode
