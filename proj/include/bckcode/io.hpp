#pragma once

#include "bckcode/algebra.hpp"
#include "bckcode/code.hpp"
#include "bckcode/codec.hpp"
#include "bckcode/error.hpp"

#include <iosfwd>
#include <string>

namespace bckcode {

/// Input error with a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Algebra files:
//
//   # optional comments
//   # names: t a b c        (optional element labels)
//   4
//   0 0 0 0
//   1 0 0 1
//   2 1 0 2
//   3 3 3 0
//
// Row x lists x*0 .. x*(n-1). Element 0 is the zero.
CayleyAlgebra parse_algebra(std::istream& in);
CayleyAlgebra parse_algebra(const std::string& text);
void write_algebra(std::ostream& out, const CayleyAlgebra& alg);

// Code files: one 0/1 string per line, uniform length, no duplicates,
// '#' comments. Input order is kept.
BlockCode parse_code(std::istream& in);
BlockCode parse_code(const std::string& text);
void write_code(std::ostream& out, const BlockCode& code);

// Function files: one "label value" pair per line in domain order; the value
// is an element index of `alg`.
BckFunction parse_function(std::istream& in, const CayleyAlgebra& alg);

}  // namespace bckcode
