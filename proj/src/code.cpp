#include "bckcode/code.hpp"

#include "bckcode/error.hpp"

#include <algorithm>
#include <set>

namespace bckcode {

Codeword::Codeword(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw InputError("codeword must have positive length");
    for (auto& b : bits_)
        if (b > 1) throw InputError("codeword bits must be 0 or 1");
}

Codeword Codeword::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            throw InputError("invalid character '" + std::string(1, c) + "' at position " +
                             std::to_string(i + 1) + " of codeword");
        bits.push_back(c == '1');
    }
    return Codeword(std::move(bits));
}

bool Codeword::all_ones() const noexcept {
    return std::ranges::all_of(bits_, [](auto b) { return b == 1; });
}

std::string Codeword::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

bool preceq(const Codeword& wx, const Codeword& wy) {
    if (wx.length() != wy.length())
        throw InputError("preceq: codeword lengths differ (" + std::to_string(wx.length()) +
                         " vs " + std::to_string(wy.length()) + ")");
    for (std::size_t i = 0; i < wx.length(); ++i)
        if (wy[i] && !wx[i]) return false;
    return true;
}

BlockCode::BlockCode(std::vector<Codeword> words) : words_(std::move(words)) {
    if (words_.empty()) throw InputError("block code must contain at least one codeword");
    const std::size_t len = words_.front().length();
    std::set<Codeword> seen;
    for (const auto& w : words_) {
        if (w.length() != len)
            throw InputError("codeword " + w.str() + " has length " + std::to_string(w.length()) +
                             ", expected " + std::to_string(len));
        if (!seen.insert(w).second) throw InputError("duplicate codeword " + w.str());
    }
}

BlockCode BlockCode::parse(std::initializer_list<std::string_view> words) {
    std::vector<Codeword> out;
    for (auto w : words) out.push_back(Codeword::parse(w));
    return BlockCode(std::move(out));
}

bool BlockCode::contains(const Codeword& w) const {
    return std::ranges::find(words_, w) != words_.end();
}

bool BlockCode::contains_all(const BlockCode& other) const {
    return std::ranges::all_of(other.words_, [&](const Codeword& w) { return contains(w); });
}

bool BlockCode::same_words(const BlockCode& other) const {
    return size() == other.size() && contains_all(other);
}

CodeMatrix::CodeMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

CodeMatrix CodeMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return CodeMatrix(0, 0);
    CodeMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InputError("ragged matrix row " + std::to_string(i));
        const auto w = Codeword::parse(rows[i]);
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, w[j]);
    }
    return m;
}

CodeMatrix CodeMatrix::of(const BlockCode& code) {
    CodeMatrix m(code.size(), code.length());
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, code[i][j]);
    return m;
}

Codeword CodeMatrix::row(std::size_t i) const {
    return Codeword(std::vector<std::uint8_t>(cells_.begin() + i * cols_,
                                              cells_.begin() + (i + 1) * cols_));
}

std::vector<Codeword> CodeMatrix::row_words() const {
    std::vector<Codeword> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

bool CodeMatrix::is_upper_triangular() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < std::min(i, cols_); ++j)
            if (at(i, j)) return false;
    return true;
}

bool CodeMatrix::has_unit_diagonal() const noexcept {
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        if (!at(i, i)) return false;
    return true;
}

bool CodeMatrix::contains_block(const CodeMatrix& sub, std::size_t row0,
                                std::size_t col0) const noexcept {
    if (row0 + sub.rows_ > rows_ || col0 + sub.cols_ > cols_) return false;
    for (std::size_t i = 0; i < sub.rows_; ++i)
        for (std::size_t j = 0; j < sub.cols_; ++j)
            if (at(row0 + i, col0 + j) != sub.at(i, j)) return false;
    return true;
}

std::string CodeMatrix::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s.push_back(at(i, j) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

BlockCode lex_sort_desc(const BlockCode& code) {
    auto words = code.words();
    std::ranges::sort(words, std::greater<>{});
    return BlockCode(std::move(words));
}

bool is_lex_desc(std::span<const Codeword> words) {
    return std::ranges::is_sorted(words, std::greater<>{});
}

Membership is_cn_member(const BlockCode& code) {
    if (code.size() != code.length()) return {false, "not square"};
    const auto sorted = lex_sort_desc(code);
    if (!sorted[0].all_ones()) return {false, "missing all-ones codeword"};
    const auto m = CodeMatrix::of(sorted);
    if (!m.is_upper_triangular()) return {false, "not upper triangular"};
    if (!m.has_unit_diagonal()) return {false, "diagonal entry is not 1"};
    return {true, {}};
}

std::uint64_t cn_count(unsigned n) {
    if (n < 2) return 1;
    return std::uint64_t{1} << ((n - 1) * (n - 2) / 2);
}

void for_each_cn(unsigned n, const std::function<void(const BlockCode&)>& visit, unsigned bound) {
    if (n == 0) throw InputError("enumerate_cn: n must be positive");
    if (n > bound)
        throw InputError("enumerate_cn: n = " + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound));
    const unsigned free_bits = n < 2 ? 0 : (n - 1) * (n - 2) / 2;
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
        std::vector<Codeword> rows;
        rows.reserve(n);
        unsigned consumed = 0;
        for (unsigned i = 0; i < n; ++i) {
            std::vector<std::uint8_t> bits(n, 0);
            bits[i] = 1;
            for (unsigned j = i + 1; j < n; ++j) {
                if (i == 0) {
                    bits[j] = 1;
                } else {
                    bits[j] = pattern >> (free_bits - 1 - consumed) & 1u;
                    ++consumed;
                }
            }
            rows.emplace_back(std::move(bits));
        }
        visit(BlockCode(std::move(rows)));
    }
}

std::vector<BlockCode> enumerate_cn(unsigned n, unsigned bound) {
    std::vector<BlockCode> out;
    out.reserve(n <= bound ? cn_count(n) : 0);
    for_each_cn(n, [&](const BlockCode& c) { out.push_back(c); }, bound);
    return out;
}

namespace {

BlockCode checked_member(const BlockCode& v, const char* context) {
    if (auto m = is_cn_member(v); !m.member)
        throw PreconditionError(std::string(context) + ": code is not a member (" + m.reason + ")");
    return lex_sort_desc(v);
}

std::pair<BlockCode, BlockCode> checked_pair(const BlockCode& v1, const BlockCode& v2,
                                             const char* context) {
    if (v1.size() != v2.size() || v1.length() != v2.length())
        throw InputError(std::string(context) + ": codes have different n");
    return {checked_member(v1, context), checked_member(v2, context)};
}

}  // namespace

namespace detail {

std::strong_ordering compare_rows_lex(std::span<const Codeword> a, std::span<const Codeword> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

PartialOrdering compare_rows_ll(std::span<const Codeword> a, std::span<const Codeword> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        if (preceq(a[i], b[i])) return PartialOrdering::less;
        if (preceq(b[i], a[i])) return PartialOrdering::greater;
        return PartialOrdering::incomparable;
    }
    return PartialOrdering::equal;
}

}  // namespace detail

std::strong_ordering code_compare_lex(const BlockCode& v1, const BlockCode& v2) {
    const auto [a, b] = checked_pair(v1, v2, "code_compare_lex");
    return detail::compare_rows_lex(a.words(), b.words());
}

PartialOrdering code_compare_ll(const BlockCode& v1, const BlockCode& v2) {
    const auto [a, b] = checked_pair(v1, v2, "code_compare_ll");
    return detail::compare_rows_ll(a.words(), b.words());
}

std::string_view to_string(PartialOrdering o) {
    switch (o) {
        case PartialOrdering::less: return "less";
        case PartialOrdering::equal: return "equal";
        case PartialOrdering::greater: return "greater";
        case PartialOrdering::incomparable: return "incomparable";
    }
    return "?";
}

BlockCode omega(unsigned n) {
    if (n == 0) throw InputError("omega: n must be positive");
    std::vector<Codeword> rows;
    for (unsigned k = 0; k < n; ++k) {
        std::vector<std::uint8_t> bits(n, 0);
        std::fill(bits.begin() + k, bits.end(), 1);
        rows.emplace_back(std::move(bits));
    }
    return BlockCode(std::move(rows));
}

}  // namespace bckcode
