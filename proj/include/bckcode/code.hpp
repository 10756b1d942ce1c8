#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bckcode {

/// A fixed-length binary word. Bit 0 is the leftmost character of the
/// written form, so the natural lexicographic comparison of the bit vector is
/// the lexicographic order of the written strings.
class Codeword {
public:
    explicit Codeword(std::vector<std::uint8_t> bits);
    /// Parses a nonempty string of '0'/'1'. Throws InputError.
    static Codeword parse(std::string_view text);
    static Codeword ones(std::size_t length) { return Codeword(std::vector<std::uint8_t>(length, 1)); }
    static Codeword zeros(std::size_t length) { return Codeword(std::vector<std::uint8_t>(length, 0)); }

    std::size_t length() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    bool all_ones() const noexcept;
    std::string str() const;

    friend bool operator==(const Codeword&, const Codeword&) = default;
    friend std::strong_ordering operator<=>(const Codeword&, const Codeword&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// w_x ⪯ w_y iff every bit of w_y is <= the corresponding bit of w_x.
/// The all-ones word is the least element. Throws InputError on length mismatch.
bool preceq(const Codeword& wx, const Codeword& wy);

/// An ordered, duplicate-free collection of equal-length codewords.
/// The constructor keeps the given order; use lex_sort_desc() to normalize.
class BlockCode {
public:
    /// Throws InputError when empty, of mixed length, or containing duplicates.
    explicit BlockCode(std::vector<Codeword> words);
    static BlockCode parse(std::initializer_list<std::string_view> words);

    std::size_t size() const noexcept { return words_.size(); }
    std::size_t length() const noexcept { return words_.front().length(); }
    const Codeword& operator[](std::size_t i) const noexcept { return words_[i]; }
    const std::vector<Codeword>& words() const noexcept { return words_; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool contains(const Codeword& w) const;
    /// True when every word of `other` is also in this code.
    bool contains_all(const BlockCode& other) const;
    /// Equality as sets of words (order ignored).
    bool same_words(const BlockCode& other) const;

    friend bool operator==(const BlockCode&, const BlockCode&) = default;

private:
    std::vector<Codeword> words_;
};

/// Dense 0/1 matrix; row i is the i-th word of the code it was built from.
class CodeMatrix {
public:
    CodeMatrix(std::size_t rows, std::size_t cols);
    /// Throws InputError on ragged input.
    static CodeMatrix from_rows(const std::vector<std::string>& rows);
    static CodeMatrix of(const BlockCode& code);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint8_t at(std::size_t i, std::size_t j) const noexcept { return cells_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, bool v) noexcept { cells_[i * cols_ + j] = v ? 1 : 0; }
    Codeword row(std::size_t i) const;
    std::vector<Codeword> row_words() const;

    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_upper_triangular() const noexcept;
    bool has_unit_diagonal() const noexcept;
    /// True if `sub` occurs at rows [row0, row0+sub.rows()), cols [col0, col0+sub.cols()).
    bool contains_block(const CodeMatrix& sub, std::size_t row0, std::size_t col0) const noexcept;

    std::string str() const;

    friend bool operator==(const CodeMatrix&, const CodeMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> cells_;
};

/// Reorders so that w1 >=lex w2 >=lex ... (all-ones first).
BlockCode lex_sort_desc(const BlockCode& code);
bool is_lex_desc(std::span<const Codeword> words);

struct Membership {
    bool member = false;
    std::string reason;  // empty when member
};

/// Whether `code` satisfies the square / all-ones / unit upper-triangular
/// hypotheses of the code-to-algebra construction. `reason` names the first
/// failed condition: "empty code", "not square", "missing all-ones codeword",
/// "not upper triangular" or "diagonal entry is not 1".
Membership is_cn_member(const BlockCode& code);

inline constexpr unsigned kDefaultCnBound = 7;

/// 2^((n-1)(n-2)/2), the number of members of length n.
std::uint64_t cn_count(unsigned n);

/// Calls `visit` on every member of length n. Free bits (rows 2..n-1, right
/// of the diagonal, read row-major) run through 0..2^k-1 in ascending order;
/// the first free bit is the most significant.
void for_each_cn(unsigned n, const std::function<void(const BlockCode&)>& visit,
                 unsigned bound = kDefaultCnBound);
std::vector<BlockCode> enumerate_cn(unsigned n, unsigned bound = kDefaultCnBound);

/// Total order on members of the same n: rows compared at the first row where
/// the sorted matrices differ, by string lexicographic order.
std::strong_ordering code_compare_lex(const BlockCode& v1, const BlockCode& v2);

enum class PartialOrdering { less, equal, greater, incomparable };
std::string_view to_string(PartialOrdering o);

/// v1 << v2 iff at the first differing row i, row_i(v1) ⪯ row_i(v2).
PartialOrdering code_compare_ll(const BlockCode& v1, const BlockCode& v2);

/// The member whose matrix has ones on and above the diagonal.
BlockCode omega(unsigned n);

namespace detail {
// Both sides must be lex-descending row sequences of equal shape.
std::strong_ordering compare_rows_lex(std::span<const Codeword> a, std::span<const Codeword> b);
PartialOrdering compare_rows_ll(std::span<const Codeword> a, std::span<const Codeword> b);
}  // namespace detail

}  // namespace bckcode
