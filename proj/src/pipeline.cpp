#include "bckcode/pipeline.hpp"

#include "bckcode/construct.hpp"
#include "bckcode/error.hpp"

#include <algorithm>

namespace bckcode {

CodeMatrix embed_matrix(const CodeMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw InputError("embed_matrix: empty matrix");
    if (!is_lex_desc(a.row_words()))
        throw InputError("embed_matrix: rows are not in lexicographically descending order");
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    CodeMatrix b(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        b.set(i, i, true);
        for (std::size_t j = 0; j < m; ++j) b.set(i, n + j, a.at(i, j));
    }
    for (std::size_t j = 0; j < m; ++j) b.set(n + j, n + j, true);
    return b;
}

CodeMatrix ensure_all_ones(const CodeMatrix& b) {
    if (b.rows() == 0 || !b.is_square() || !b.is_upper_triangular() || !b.has_unit_diagonal())
        throw InputError("ensure_all_ones: matrix must be square and unit upper-triangular");
    if (b.row(0).all_ones()) return b;
    const std::size_t q = b.rows();
    CodeMatrix out(q + 1, q + 1);
    for (std::size_t j = 0; j <= q; ++j) out.set(0, j, true);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) out.set(i + 1, j + 1, b.at(i, j));
    return out;
}

LiftResult lift_code(const BlockCode& v) {
    auto sorted = lex_sort_desc(v);
    const auto source = CodeMatrix::of(sorted);
    auto embedded = embed_matrix(source);
    auto augmented = ensure_all_ones(embedded);
    const std::size_t shift = augmented.rows() - embedded.rows();

    const BlockCode rows(augmented.row_words());
    auto built = construct_from_code(rows);
    if (!(built.source_code == rows))
        throw InternalError("lift_code: augmented rows were reordered by the construction");

    std::vector<std::size_t> column_map(source.cols());
    std::vector<Element> domain(source.cols());
    for (std::size_t j = 0; j < source.cols(); ++j) {
        column_map[j] = shift + source.rows() + j;
        domain[j] = static_cast<Element>(column_map[j]);
    }
    auto function = BckFunction::inclusion(built.algebra, domain);
    auto lifted = detail::generate_code_unchecked(function);
    if (!lifted.contains_all(sorted))
        throw InternalError("lift_code: lifted code does not contain the input code");

    return {std::move(sorted),    std::move(embedded), std::move(augmented),
            std::move(built.algebra), std::move(domain), std::move(function),
            std::move(lifted),    std::move(column_map)};
}

FamilyAlgebra family_algebra(unsigned n, unsigned bound) {
    if (n == 0) throw InputError("family_algebra: n must be positive");
    if (n > bound)
        throw InputError("family_algebra: n = " + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound));
    auto members = enumerate_cn(n, std::max(bound, n));
    std::ranges::sort(members, [](const BlockCode& a, const BlockCode& b) {
        return detail::compare_rows_lex(a.words(), b.words()) > 0;
    });

    const std::size_t size = members.size();
    std::vector<std::uint8_t> leq(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            const auto o = detail::compare_rows_ll(members[i].words(), members[j].words());
            leq[i * size + j] = o == PartialOrdering::less || o == PartialOrdering::equal;
        }
    const Poset order(size, std::move(leq), Element{0});

    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i) names.push_back("V" + std::to_string(i + 1));
    auto alg = algebra_from_poset(order, std::move(names));
    if (!check_axioms(alg).is_bck)
        throw InternalError("family_algebra: star algebra failed the BCK axioms");
    auto code = detail::generate_code_unchecked(BckFunction::identity(alg));
    return {std::move(members), std::move(alg), std::move(code)};
}

}  // namespace bckcode
