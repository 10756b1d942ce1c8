#pragma once

// Brute-force reference computations used as independent oracles. None of
// these call into the library's implementation paths; they work on plain
// nested vectors and strings.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline bool is_bck(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x) {
        if (t[x][x] != 0 || t[0][x] != 0) return false;
        for (int y = 0; y < n; ++y) {
            if (t[t[x][t[x][y]]][y] != 0) return false;
            if (x != y && t[x][y] == 0 && t[y][x] == 0) return false;
            for (int z = 0; z < n; ++z)
                if (t[t[t[x][y]][t[x][z]]][t[z][y]] != 0) return false;
        }
    }
    return true;
}

/// Every table over {0..n-1} passing the five axioms, by exhaustive filtering
/// of all n^(n*n) tables (row-major odometer, last cell fastest).
inline std::vector<Table> all_bck_tables_unpruned(int n) {
    std::vector<Table> out;
    const int cells = n * n;
    std::vector<int> digits(cells, 0);
    while (true) {
        Table t(n, std::vector<int>(n));
        for (int i = 0; i < cells; ++i) t[i / n][i % n] = digits[i];
        if (is_bck(t)) out.push_back(t);
        int i = cells - 1;
        while (i >= 0 && ++digits[i] == n) digits[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

/// Same filter, but only over tables with 0*y = 0, x*x = 0 and x*0 = x,
/// which every BCK table satisfies.
inline std::vector<Table> all_bck_tables_pinned(int n) {
    std::vector<std::pair<int, int>> free;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            if (x != y) free.emplace_back(x, y);
    Table t(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x) t[x][0] = x;
    std::vector<Table> out;
    std::vector<int> digits(free.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free.size(); ++i) t[free[i].first][free[i].second] = digits[i];
        if (is_bck(t)) out.push_back(t);
        int i = static_cast<int>(free.size()) - 1;
        while (i >= 0 && ++digits[i] == n) digits[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

using Relation = std::vector<std::vector<bool>>;

/// All partial orders on {0..n-1} in which 0 is the least element.
inline std::vector<Relation> posets_with_minimum(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            if (x != y) pairs.emplace_back(x, y);
    std::vector<Relation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Relation r(n, std::vector<bool>(n, false));
        for (int x = 0; x < n; ++x) {
            r[x][x] = true;
            r[0][x] = true;
        }
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) r[pairs[i].first][pairs[i].second] = true;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                if (x != y && r[x][y] && r[y][x]) ok = false;
                for (int z = 0; z < n && ok; ++z)
                    if (r[x][y] && r[y][z] && !r[x][z]) ok = false;
            }
        if (ok) out.push_back(std::move(r));
    }
    return out;
}

/// wx ⪯ wy on written strings: every bit of wy is <= the bit of wx.
inline bool below(const std::string& wx, const std::string& wy) {
    for (std::size_t i = 0; i < wx.size(); ++i)
        if (wy[i] == '1' && wx[i] == '0') return false;
    return true;
}

/// The codeword the star construction regenerates for row k of a sorted
/// square code: bit j is 1 iff row k ⪯ row j.
inline std::string regenerated_row(const std::vector<std::string>& rows, std::size_t k) {
    std::string out;
    for (std::size_t j = 0; j < rows.size(); ++j) out.push_back(below(rows[k], rows[j]) ? '1' : '0');
    return out;
}

/// One bit of f - min(f, g) computed per position of the written strings.
inline std::string pointwise_difference(const std::string& f, const std::string& g) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int a = f[i] - '0';
        const int b = g[i] - '0';
        out.push_back(static_cast<char>('0' + a - std::min(a, b)));
    }
    return out;
}

/// Random duplicate-free code with `rows` words of length `cols`; rows <= 2^cols.
inline std::vector<std::string> random_code(std::mt19937& rng, int rows, int cols) {
    std::set<std::string> seen;
    std::vector<std::string> out;
    std::bernoulli_distribution bit(0.5);
    while (static_cast<int>(out.size()) < rows) {
        std::string w;
        for (int j = 0; j < cols; ++j) w.push_back(bit(rng) ? '1' : '0');
        if (seen.insert(w).second) out.push_back(w);
    }
    return out;
}

/// Square 0/1 matrix given as strings: upper triangular with ones on the diagonal.
inline bool unit_upper_triangular(const std::vector<std::string>& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size() || m[i][i] != '1') return false;
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != '0') return false;
    }
    return true;
}

}  // namespace oracle
