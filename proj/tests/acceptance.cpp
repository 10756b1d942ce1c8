// Acceptance suite: one line per criterion, nonzero exit if any fails or
// exceeds its time limit.

#include "bckcode/census.hpp"
#include "bckcode/codec.hpp"
#include "bckcode/construct.hpp"
#include "bckcode/pipeline.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace bckcode;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

oracle::Table to_table(const CayleyAlgebra& alg) {
    const auto n = alg.order();
    oracle::Table t(n, std::vector<int>(n));
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) t[x][y] = static_cast<int>(alg.op(x, y));
    return t;
}

std::vector<std::string> strings(const CodeMatrix& m) {
    std::vector<std::string> out;
    for (const auto& w : m.row_words()) out.push_back(w.str());
    return out;
}

void example_forward(Outcome& o) {
    const auto code = generate_code(BckFunction::identity(fixtures::commutative_4()));
    o.require(code == fixtures::code_4_sorted(), "generated code is " + CodeMatrix::of(code).str());
}

void example_reverse(Outcome& o) {
    const auto built = construct_from_code(fixtures::code_4());
    o.require(built.algebra == fixtures::star_4(), "star table differs");
    o.require(verify_roundtrip(fixtures::code_4()).exact, "round trip not exact");
    const auto a = fixtures::commutative_4();
    const auto v = built.algebra;
    o.require(code_similar(a, v), "not code-similar");
    o.require(!are_isomorphic(a, v), "unexpectedly isomorphic");
    o.require(is_commutative(a).holds && !is_implicative(a).holds, "(A) identities wrong");
    o.require(!is_commutative(v).holds && !is_implicative(v).holds, "(V) identities wrong");
}

void example_pointwise(Outcome& o) {
    const auto alg = pointwise_function_algebra(3);
    const auto& expected = fixtures::pointwise_3_table();
    for (Element f = 0; f < 8; ++f)
        for (Element g = 0; g < 8; ++g)
            o.require(alg.name(alg.op(f, g)) == expected[f][g], "table entry mismatch");
    const auto code = generate_code(BckFunction::identity(alg));
    o.require(code == fixtures::pointwise_3_code(), "generated code differs");
    o.require(is_implicative(alg).holds, "pointwise algebra not implicative");
    const auto star = construct_from_code(code).algebra;
    o.require(!is_implicative(star).holds, "constructed algebra is implicative");
    o.require(code_similar(alg, star), "not code-similar");
}

void example_lift(Outcome& o) {
    o.require(embed_matrix(fixtures::matrix_3_3()) == fixtures::embedded_3_3(), "B differs");
    o.require(ensure_all_ones(fixtures::embedded_3_3()) == fixtures::augmented_3_3(), "B' differs");
    const auto r = lift_code(fixtures::code_3_3());
    o.require(r.lifted_code.same_words(fixtures::lifted_3_3()), "U differs");
    o.require(r.lifted_code.contains_all(fixtures::code_3_3()), "V not contained in U");
}

void family_counts(Outcome& o) {
    const std::size_t expected[] = {2, 8, 64, 1024};
    for (unsigned n = 3; n <= 6; ++n) {
        std::size_t count = 0;
        bool members = true;
        for_each_cn(n, [&](const BlockCode& c) {
            ++count;
            members = members && is_cn_member(c).member;
        });
        o.require(members, "non-member generated at n=" + std::to_string(n));
        o.require(count == expected[n - 3], "n=" + std::to_string(n) + " count " + std::to_string(count));
    }
}

void poset_star(Outcome& o) {
    std::size_t checked = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& r : oracle::posets_with_minimum(n)) {
            std::vector<std::uint8_t> leq(n * n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) leq[x * n + y] = r[x][y];
            const auto alg = algebra_from_poset(Poset(n, std::move(leq)));
            o.require(oracle::is_bck(to_table(alg)), "star algebra fails an axiom at n=" + std::to_string(n));
            ++checked;
        }
    o.require(checked > 0, "no posets");
    // x*y = y on the incomparable pair {1, 2}.
    const auto literal = CayleyAlgebra::from_rows({{0, 0, 0}, {1, 0, 2}, {2, 1, 0}});
    const auto rep = check_axioms(literal);
    o.require(!rep.axioms[0].holds, "printed rule does not violate axiom 1");
}

void roundtrip_refinement(Outcome& o) {
    for (unsigned n = 1; n <= 5; ++n)
        for_each_cn(n, [&](const BlockCode& c) {
            const auto rt = verify_roundtrip(c);
            o.require(rt.exact == rt.self_describing, "exact != self_describing");
            std::vector<std::string> rows;
            for (const auto& w : rt.input_code) rows.push_back(w.str());
            bool oracle_exact = true;
            for (std::size_t k = 0; k < rows.size(); ++k)
                oracle_exact = oracle_exact && oracle::regenerated_row(rows, k) == rows[k];
            o.require(rt.exact == oracle_exact, "disagrees with string oracle");
        });
    o.require(!verify_roundtrip(fixtures::non_self_describing_4()).exact, "counterexample exact");
    o.require(verify_roundtrip(fixtures::code_4()).exact, "worked code not exact");
    for (unsigned n = 1; n <= 6; ++n) o.require(verify_roundtrip(omega(n)).exact, "omega not exact");
}

void lift_property(Outcome& o) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = dim(rng);
        const int n = std::min(dim(rng), 1 << m);
        const BlockCode v(CodeMatrix::from_rows(oracle::random_code(rng, n, m)).row_words());
        const auto r = lift_code(v);
        const auto tag = " (trial " + std::to_string(trial) + ")";
        o.require(r.lifted_code.contains_all(v), "input not contained" + tag);
        o.require(r.embedded.is_square() && oracle::unit_upper_triangular(strings(r.embedded)),
                  "embedded matrix malformed" + tag);
        const auto aug = strings(r.augmented);
        o.require(oracle::unit_upper_triangular(aug) && aug[0] == std::string(aug.size(), '1'),
                  "augmented matrix malformed" + tag);
        o.require(oracle::is_bck(to_table(r.algebra)), "lift algebra not BCK" + tag);
    }
}

void census_bounds(Outcome& o) {
    const auto c3 = census(3);
    const auto c4 = census(4);
    o.require(c3.iso_classes >= 2, "census(3) iso_classes " + std::to_string(c3.iso_classes));
    o.require(c4.iso_classes >= 8, "census(4) iso_classes " + std::to_string(c4.iso_classes));
    std::set<oracle::Table> pruned;
    for (const auto& a : enumerate_bck(3)) pruned.insert(to_table(a));
    const auto brute = oracle::all_bck_tables_unpruned(3);
    o.require(pruned == std::set<oracle::Table>(brute.begin(), brute.end()), "n=3 sets differ");
}

void family_algebras(Outcome& o) {
    const auto f3 = family_algebra(3);
    o.require(f3.algebra.order() == 2 && oracle::is_bck(to_table(f3.algebra)), "family(3) order");
    o.require(f3.code == BlockCode::parse({"11", "01"}), "family(3) code");
    const auto f4 = family_algebra(4);
    o.require(f4.algebra.order() == 8 && oracle::is_bck(to_table(f4.algebra)), "family(4) not BCK");
    o.require(f4.code.size() == 8 && f4.code.length() == 8, "family(4) code shape");
    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& v : enumerate_cn(n)) {
            const auto c = code_compare_ll(omega(n), v);
            o.require(c == PartialOrdering::less || c == PartialOrdering::equal,
                      "omega not minimum at n=" + std::to_string(n));
        }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked commutative algebra encodes to its code", 1, example_forward},
        {2, "star algebra of that code, round trip, similarity and identities", 1, example_reverse},
        {3, "pointwise function algebra on 3-bit strings", 1, example_pointwise},
        {4, "embedding, augmentation and lift of the 4x5 code", 1, example_lift},
        {5, "square code family sizes 2, 8, 64, 1024", 10, family_counts},
        {6, "star algebras of posets with minimum (n <= 5); printed rule violates axiom 1", 120, poset_star},
        {7, "round trip exact iff self-describing (n <= 5)", 60, roundtrip_refinement},
        {8, "200 random lifts contain their input", 60, lift_property},
        {9, "census lower bounds at orders 3 and 4; pruned = unpruned at 3", 300, census_bounds},
        {10, "family algebras at n = 3, 4; omega is the minimum", 60, family_algebras},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.limit_seconds) {
            o.ok = false;
            o.note = "time limit exceeded";
        }
        failures += !o.ok;
        std::printf("[%s] %2d  %-78s %8.3fs / %gs%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.limit_seconds, o.note.empty() ? "" : "  ", o.note.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
