#include "bckcode/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace bckcode {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Token> split(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

// Reads data lines, skipping blanks and '#' comments. Comment lines of the
// form "# <key>: <values>" are collected into `meta`.
struct Source {
    std::vector<Line> data;
    std::vector<std::pair<std::string, Line>> meta;
    std::size_t last_line = 0;
};

Source read_source(std::istream& in) {
    Source src;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto tokens = split(raw);
        if (tokens.empty()) continue;
        if (tokens.front().text.starts_with('#')) {
            const auto& first = tokens.front().text;
            std::size_t key_at = first.size() > 1 ? 0 : 1;
            if (key_at < tokens.size()) {
                std::string key = key_at == 0 ? first.substr(1) : tokens[key_at].text;
                if (key.size() > 1 && key.back() == ':') {
                    key.pop_back();
                    Line values{number, {tokens.begin() + key_at + 1, tokens.end()}};
                    src.meta.emplace_back(std::move(key), std::move(values));
                }
            }
            continue;
        }
        src.data.push_back({number, std::move(tokens)});
    }
    src.last_line = number;
    return src;
}

std::size_t parse_index(const Token& tok, std::size_t line) {
    std::size_t value = 0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, tok.column, "expected a non-negative integer, got '" + tok.text + "'");
    return value;
}

}  // namespace

CayleyAlgebra parse_algebra(std::istream& in) {
    const auto src = read_source(in);
    if (src.data.empty()) throw ParseError(src.last_line + 1, 1, "missing order line");
    const auto& header = src.data.front();
    if (header.tokens.size() != 1)
        throw ParseError(header.number, header.tokens[1].column, "order line must hold one integer");
    const std::size_t n = parse_index(header.tokens[0], header.number);
    if (n == 0) throw ParseError(header.number, header.tokens[0].column, "order must be positive");

    std::vector<Element> table;
    table.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        if (x + 1 >= src.data.size())
            throw ParseError(src.last_line + 1, 1,
                             "expected " + std::to_string(n) + " table rows, got " +
                                 std::to_string(x));
        const auto& row = src.data[x + 1];
        if (row.tokens.size() != n) {
            const std::size_t col = row.tokens.size() > n ? row.tokens[n].column
                                                          : row.tokens.back().column +
                                                                row.tokens.back().text.size();
            throw ParseError(row.number, col,
                             "row has " + std::to_string(row.tokens.size()) + " entries, expected " +
                                 std::to_string(n));
        }
        for (const auto& tok : row.tokens) {
            const std::size_t v = parse_index(tok, row.number);
            if (v >= n)
                throw ParseError(row.number, tok.column,
                                 "entry " + tok.text + " is out of range for order " +
                                     std::to_string(n));
            table.push_back(static_cast<Element>(v));
        }
    }
    if (src.data.size() > n + 1)
        throw ParseError(src.data[n + 1].number, 1, "unexpected data after the table");

    std::vector<std::string> names;
    for (const auto& [key, line] : src.meta) {
        if (key != "names") continue;
        if (line.tokens.size() != n)
            throw ParseError(line.number, 1,
                             "names line lists " + std::to_string(line.tokens.size()) +
                                 " labels, expected " + std::to_string(n));
        names.clear();
        for (const auto& t : line.tokens) names.push_back(t.text);
    }
    return CayleyAlgebra(n, std::move(table), std::move(names));
}

CayleyAlgebra parse_algebra(const std::string& text) {
    std::istringstream in(text);
    return parse_algebra(in);
}

void write_algebra(std::ostream& out, const CayleyAlgebra& alg) {
    if (!alg.names().empty()) {
        out << "# names:";
        for (const auto& name : alg.names()) out << ' ' << name;
        out << '\n';
    }
    out << alg.order() << '\n';
    for (Element x = 0; x < alg.order(); ++x) {
        const auto row = alg.row(x);
        for (std::size_t y = 0; y < row.size(); ++y) out << (y ? " " : "") << row[y];
        out << '\n';
    }
}

BlockCode parse_code(std::istream& in) {
    const auto src = read_source(in);
    if (src.data.empty()) throw ParseError(src.last_line + 1, 1, "code file holds no codewords");
    std::vector<Codeword> words;
    std::set<std::string> seen;
    std::size_t length = 0;
    for (const auto& line : src.data) {
        if (line.tokens.size() != 1)
            throw ParseError(line.number, line.tokens[1].column, "one codeword per line expected");
        const auto& tok = line.tokens.front();
        for (std::size_t i = 0; i < tok.text.size(); ++i)
            if (tok.text[i] != '0' && tok.text[i] != '1')
                throw ParseError(line.number, tok.column + i,
                                 "invalid character '" + std::string(1, tok.text[i]) + "'");
        if (words.empty()) length = tok.text.size();
        if (tok.text.size() != length)
            throw ParseError(line.number, tok.column,
                             "codeword has length " + std::to_string(tok.text.size()) +
                                 ", expected " + std::to_string(length));
        if (!seen.insert(tok.text).second)
            throw ParseError(line.number, tok.column, "duplicate codeword " + tok.text);
        words.push_back(Codeword::parse(tok.text));
    }
    return BlockCode(std::move(words));
}

BlockCode parse_code(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

void write_code(std::ostream& out, const BlockCode& code) {
    for (const auto& w : code) out << w.str() << '\n';
}

BckFunction parse_function(std::istream& in, const CayleyAlgebra& alg) {
    const auto src = read_source(in);
    if (src.data.empty()) throw ParseError(src.last_line + 1, 1, "function file is empty");
    std::vector<std::string> labels;
    std::vector<Element> values;
    std::set<std::string> seen;
    for (const auto& line : src.data) {
        if (line.tokens.size() != 2)
            throw ParseError(line.number, line.tokens.front().column,
                             "expected 'label value' on each line");
        const auto& label = line.tokens[0];
        if (!seen.insert(label.text).second)
            throw ParseError(line.number, label.column, "duplicate label '" + label.text + "'");
        const std::size_t v = parse_index(line.tokens[1], line.number);
        if (v >= alg.order())
            throw ParseError(line.number, line.tokens[1].column,
                             "value " + line.tokens[1].text + " is not an element of the algebra");
        labels.push_back(label.text);
        values.push_back(static_cast<Element>(v));
    }
    return BckFunction(alg, std::move(labels), std::move(values));
}

}  // namespace bckcode
