#pragma once

#include "bckcode/algebra.hpp"
#include "bckcode/code.hpp"
#include "bckcode/codec.hpp"

#include <vector>

namespace bckcode {

/// Embeds an n×m matrix with lex-descending rows into the (n+m)×(n+m)
/// unit upper-triangular matrix
///
///     [ I_n  A   ]
///     [ 0    I_m ]
///
/// Throws InputError if `a` is empty or its rows are not lex-descending.
CodeMatrix embed_matrix(const CodeMatrix& a);

/// Returns `b` unchanged when its first row is all ones; otherwise borders it
/// with a new all-ones first row and a first column (1, 0, ..., 0).
/// Throws InputError unless `b` is square and unit upper-triangular.
CodeMatrix ensure_all_ones(const CodeMatrix& b);

struct LiftResult {
    BlockCode source_code;           // the input, lex-descending
    CodeMatrix embedded;             // after embed_matrix
    CodeMatrix augmented;            // after ensure_all_ones; its rows are the algebra's elements
    CayleyAlgebra algebra;           // order = augmented.rows()
    std::vector<Element> domain;     // elements standing for the original columns, in column order
    BckFunction function;            // inclusion of `domain`
    BlockCode lifted_code;           // generate_code(function), lex-descending
    std::vector<std::size_t> column_map;  // original column j -> column (= element) of `augmented`
};

/// Embeds an arbitrary duplicate-free code so that the star construction
/// applies, then regenerates a code over the original column positions.
/// Throws InternalError if the result does not contain every input word.
LiftResult lift_code(const BlockCode& v);

inline constexpr unsigned kDefaultFamilyBound = 6;

struct FamilyAlgebra {
    std::vector<BlockCode> members;  // descending ⪰lex; members[0] is omega(n)
    CayleyAlgebra algebra;           // star algebra of (members, <<)
    BlockCode code;                  // canonical code of `algebra`
};

/// The star algebra on all members of length n, ordered by <<.
FamilyAlgebra family_algebra(unsigned n, unsigned bound = kDefaultFamilyBound);

}  // namespace bckcode
