#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagq/schubert.hpp"
#include "oracles.hpp"

#include <set>

using namespace flagq;

namespace {
Polynomial P(const char* text, int n) { return parse_polynomial(text, n); }
} // namespace

TEST_CASE("staircase monomial") {
    CHECK(staircase_monomial(2) == P("x1", 2));
    CHECK(staircase_monomial(3) == P("x1^2*x2", 3));
    CHECK(staircase_monomial(4) == P("x1^3*x2^2*x3", 4));
}

TEST_CASE("small Schubert polynomials") {
    const SchubertTable table(3);
    CHECK(table.poly(Permutation({2, 1, 3})) == P("x1", 3));
    CHECK(table.poly(Permutation({1, 3, 2})) == P("x1 + x2", 3));
    CHECK(table.poly(Permutation({3, 1, 2})) == P("x1^2", 3));
    CHECK(table.poly(Permutation({2, 3, 1})) == P("x1*x2", 3));
    CHECK(table.poly(Permutation({1, 2, 3})) == P("1", 3));
    CHECK(table.poly(Permutation({3, 2, 1})) == P("x1^2*x2", 3));
}

TEST_CASE("table agrees with the direct divided-difference formula") {
    for (int n : {2, 3, 4}) {
        const SchubertTable table(n);
        for (const Permutation& w : all_permutations(n))
            CHECK(schubert_polynomial(w) == table.poly(w));
    }
}

TEST_CASE("basis ordering and support") {
    const SchubertTable t2(2);
    CHECK(t2.permutations().size() == 2);
    CHECK(t2.poly(t2.permutations()[0]) == P("1", 2));
    CHECK(t2.poly(t2.permutations()[1]) == P("x1", 2));

    const SchubertTable t4(4);
    CHECK(t4.permutations().size() == 24);
    std::set<Permutation> distinct(t4.permutations().begin(), t4.permutations().end());
    CHECK(distinct.size() == 24);
    for (std::size_t i = 0; i + 1 < t4.permutations().size(); ++i)
        CHECK(t4.permutations()[i].length() <= t4.permutations()[i + 1].length());
    for (const Permutation& w : t4.permutations())
        CHECK(supported_on_staircase(t4.poly(w)));
}

TEST_CASE("homogeneity, degree, positivity") {
    for (int n : {2, 3, 4}) {
        const SchubertTable table(n);
        for (const Permutation& w : all_permutations(n)) {
            const Polynomial& s = table.poly(w);
            CHECK(s.is_homogeneous());
            CHECK(s.max_graded_degree() == w.length());
            CHECK(s.is_q_free());
            for (const auto& [e, c] : s.terms())
                CHECK(c > 0);
        }
    }
}

TEST_CASE("divided-difference recursion on the table") {
    for (int n : {3, 4}) {
        const SchubertTable table(n);
        for (const Permutation& w : all_permutations(n))
            for (int i = 1; i < n; ++i) {
                const Permutation ws = w * Permutation::adjacent_transposition(i, n);
                const Polynomial lhs = divided_difference(i, table.poly(w));
                if (ws.length() == w.length() - 1)
                    CHECK(lhs == table.poly(ws));
                else
                    CHECK(lhs.is_zero());
            }
    }
}

TEST_CASE("simple reflections give initial sums of variables") {
    for (int n : {2, 3, 4, 5})
        for (int i = 1; i < n; ++i) {
            Polynomial expected = Polynomial::zero(n);
            for (int t = 1; t <= i; ++t)
                expected += Polynomial::x(t, n);
            CHECK(SchubertTable(n).poly(Permutation::adjacent_transposition(i, n)) == expected);
        }
}
