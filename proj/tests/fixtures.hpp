#pragma once

// Tables, codes and matrices transcribed from the worked examples.

#include "bckcode/algebra.hpp"
#include "bckcode/code.hpp"

#include <string>
#include <vector>

namespace fixtures {

using bckcode::BlockCode;
using bckcode::CayleyAlgebra;
using bckcode::CodeMatrix;

// (A, o, θ) with elements θ, a, b, c.
inline CayleyAlgebra commutative_4() {
    return CayleyAlgebra::from_rows({{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 1, 0, 2}, {3, 3, 3, 0}},
                                    {"t", "a", "b", "c"});
}

// (V, *, w1): the star algebra of {1111, 0110, 0010, 0001}.
inline CayleyAlgebra star_4() {
    return CayleyAlgebra::from_rows({{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 2, 0, 2}, {3, 3, 3, 0}},
                                    {"w1", "w2", "w3", "w4"});
}

inline BlockCode code_4() { return BlockCode::parse({"0110", "0010", "1111", "0001"}); }
inline BlockCode code_4_sorted() { return BlockCode::parse({"1111", "0110", "0010", "0001"}); }

// The pointwise function algebra on 3-bit strings, entry by entry.
inline const std::vector<std::vector<std::string>>& pointwise_3_table() {
    static const std::vector<std::vector<std::string>> t = {
        {"000", "000", "000", "000", "000", "000", "000", "000"},
        {"001", "000", "001", "000", "001", "000", "001", "000"},
        {"010", "010", "000", "000", "010", "010", "000", "000"},
        {"011", "010", "001", "000", "011", "010", "001", "000"},
        {"100", "100", "100", "100", "000", "000", "000", "000"},
        {"101", "100", "101", "100", "001", "000", "001", "000"},
        {"110", "110", "100", "100", "010", "010", "000", "000"},
        {"111", "110", "101", "100", "011", "010", "001", "000"},
    };
    return t;
}

inline BlockCode pointwise_3_code() {
    return BlockCode::parse({"11111111", "01010101", "00110011", "00010001", "00001111", "00000101",
                             "00000011", "00000001"});
}

inline BlockCode code_3_3() { return BlockCode::parse({"11110", "10010", "10011", "00000"}); }
inline BlockCode code_3_3_sorted() { return BlockCode::parse({"11110", "10011", "10010", "00000"}); }

inline CodeMatrix matrix_3_3() {
    return CodeMatrix::from_rows({"11110", "10011", "10010", "00000"});
}

inline CodeMatrix embedded_3_3() {
    return CodeMatrix::from_rows({"100011110", "010010011", "001010010", "000100000", "000010000",
                                  "000001000", "000000100", "000000010", "000000001"});
}

inline CodeMatrix augmented_3_3() {
    return CodeMatrix::from_rows({"1111111111", "0100011110", "0010010011", "0001010010",
                                  "0000100000", "0000010000", "0000001000", "0000000100",
                                  "0000000010", "0000000001"});
}

inline BlockCode lifted_3_3() {
    return BlockCode::parse({"11111", "11110", "10011", "10010", "00000", "10000", "01000", "00100",
                             "00010", "00001"});
}

// Satisfies the square / all-ones / unit upper-triangular hypotheses but does
// not survive the round trip: w2 regenerates as 0100.
inline BlockCode non_self_describing_4() {
    return BlockCode::parse({"1111", "0110", "0011", "0001"});
}

}  // namespace fixtures
