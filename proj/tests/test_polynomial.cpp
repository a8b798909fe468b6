#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagq/polynomial.hpp"
#include "flagq/schubert.hpp"
#include "oracles.hpp"

#include <random>

using namespace flagq;

namespace {
Polynomial P(const std::string& text, int n) { return parse_polynomial(text, n); }
} // namespace

TEST_CASE("ring arithmetic") {
    const int n = 2;
    CHECK(((P("x1 + x2", n) * Polynomial::zero(n)).is_zero()));
    CHECK(P("x1 + x2", n) * P("x1 + x2", n) == P("x1^2 + 2*x1*x2 + x2^2", n));
    CHECK(P("x1 - x2", n) * P("x1 + x2", n) == P("x1^2 - x2^2", n));
    CHECK_THROWS_AS(P("x1", 2) * P("x1", 3), std::invalid_argument);

    // commutativity / associativity / distributivity spot checks
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        const Polynomial a = oracles::random_polynomial(rng, 3, 4, 4, 1);
        const Polynomial b = oracles::random_polynomial(rng, 3, 4, 4, 1);
        const Polynomial c = oracles::random_polynomial(rng, 3, 4, 4, 1);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("permutation action substitutes x_j -> x_{w(j)}") {
    const int n = 3;
    const Permutation s1 = Permutation::adjacent_transposition(1, n);
    CHECK(apply_perm(s1, P("x1", n)) == P("x2", n));
    CHECK(apply_perm(s1, P("x1 + x2", n)) == P("x1 + x2", n));
    CHECK(apply_perm(Permutation::longest_element(n), P("x1^2*x2", n)) == P("x3^2*x2", n));
    // q part untouched
    CHECK(apply_perm(s1, P("q1*x1 + q2", n)) == P("q1*x2 + q2", n));

    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        const Polynomial f = oracles::random_polynomial(rng, 4, 5, 5, 1);
        std::vector<Permutation> all = all_permutations(4);
        const Permutation& u = all[rng() % all.size()];
        const Permutation& v = all[rng() % all.size()];
        CHECK(apply_perm(u, apply_perm(v, f)) == apply_perm(u * v, f));
    }
}

TEST_CASE("divided differences") {
    const int n = 3;
    CHECK(divided_difference(1, P("x1", n)) == P("1", n));
    CHECK(divided_difference(1, P("x1^2*x2", n)) == P("x1*x2", n));
    CHECK(divided_difference(2, P("x1", n)).is_zero());
    CHECK_THROWS_AS(divided_difference(3, P("x1", n)), std::invalid_argument);

    // the defining quotient identity (x_i - x_{i+1}) d_i f = (1 - s_i) f
    std::mt19937 rng(13);
    for (int t = 0; t < 40; ++t) {
        const Polynomial f = oracles::random_polynomial(rng, 4, 6, 6, 2);
        for (int i = 1; i < 4; ++i) {
            const Polynomial d = divided_difference(i, f);
            const Polynomial si_f = apply_perm(Permutation::adjacent_transposition(i, 4), f);
            CHECK((P("x" + std::to_string(i), 4) - P("x" + std::to_string(i + 1), 4)) * d ==
                  f - si_f);
            CHECK(divided_difference(i, d).is_zero());
        }
    }
}

TEST_CASE("braid relations and Leibniz rule") {
    std::mt19937 rng(17);
    const int n = 4;
    for (int t = 0; t < 25; ++t) {
        const Polynomial f = oracles::random_polynomial(rng, n, 5, 5, 1);
        const Polynomial g = oracles::random_polynomial(rng, n, 4, 4, 1);
        for (int i = 1; i < n; ++i) {
            if (i + 1 < n) {
                CHECK(divided_difference(i, divided_difference(i + 1, divided_difference(i, f))) ==
                      divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, f))));
            }
            for (int j = i + 2; j < n; ++j)
                CHECK(divided_difference(i, divided_difference(j, f)) ==
                      divided_difference(j, divided_difference(i, f)));
            CHECK(divided_difference(i, f * g) ==
                  divided_difference(i, f) * g +
                      apply_perm(Permutation::adjacent_transposition(i, n), f) *
                          divided_difference(i, g));
        }
    }
}

TEST_CASE("composite divided differences along transpositions") {
    const int n = 3;
    // d_{t12} is d_1
    std::mt19937 rng(19);
    for (int t = 0; t < 10; ++t) {
        const Polynomial f = oracles::random_polynomial(rng, n, 5, 5, 1);
        CHECK(divided_difference_t(1, 2, f) == divided_difference(1, f));
    }
    // d_{t13} = d_1 d_2 d_1 applied stepwise
    const Polynomial f = P("x1^2*x2", n);
    const Polynomial stepwise =
        divided_difference(1, divided_difference(2, divided_difference(1, f)));
    CHECK(stepwise == P("1", n));
    CHECK(divided_difference_t(1, 3, f) == stepwise);
    CHECK(divided_difference_t(1, 3, P("x1", n)).is_zero());

    // independence of the reduced word: t13 also has word (2,1,2)
    const Polynomial other =
        divided_difference(2, divided_difference(1, divided_difference(2, f)));
    CHECK(divided_difference_t(1, 3, f) == other);
}

TEST_CASE("term order: total degree, then largest differing index") {
    auto e = [](std::vector<int> x) {
        return Exponent{std::move(x), std::vector<int>(2, 0)};
    };
    CHECK(compare_terms(e({0, 1, 0}), e({1, 0, 0})) > 0);  // x2 > x1
    CHECK(compare_terms(e({2, 0, 0}), e({0, 1, 0})) > 0);  // x1^2 > x2
    CHECK(compare_terms(e({0, 2, 0}), e({1, 1, 0})) > 0);  // x2^2 > x1 x2
    CHECK(compare_terms(e({1, 1, 0}), e({1, 1, 0})) == 0);

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> dist(0, 5);
    for (int t = 0; t < 300; ++t) {
        auto draw = [&]() { return e({dist(rng), dist(rng), dist(rng)}); };
        const Exponent a = draw(), b = draw(), c = draw();
        // total order
        CHECK(compare_terms(a, b) == -compare_terms(b, a));
        // compatible with multiplication
        Exponent ac = a, bc = b;
        for (int i = 0; i < 3; ++i) {
            ac.x[static_cast<std::size_t>(i)] += c.x[static_cast<std::size_t>(i)];
            bc.x[static_cast<std::size_t>(i)] += c.x[static_cast<std::size_t>(i)];
        }
        CHECK(compare_terms(ac, bc) == compare_terms(a, b));
    }
}

TEST_CASE("q specialization") {
    const int n = 2;
    CHECK(specialize_q(P("x1^2 - q1", n), {0}) == P("x1^2", n));
    CHECK(specialize_q(P("x1*x2 + q1", n), {1}) == P("x1*x2 + 1", n));
    CHECK(specialize_q(P("x1 + x2^3", n), {5}) == P("x1 + x2^3", n));
    CHECK(specialize_q(P("q1^2*x1 + q1*x2", n), {2}) == P("4*x1 + 2*x2", n));
    CHECK_THROWS_AS(specialize_q(P("x1", 3), {0}), std::invalid_argument);
}

TEST_CASE("grading assigns degree 1 to x and 2 to q") {
    const Polynomial f = P("q1*x1", 3);
    CHECK(f.max_graded_degree() == 3);
    CHECK(P("q2^2", 3).max_graded_degree() == 4);
    CHECK(P("x1^2*x2", 3).is_homogeneous());
    CHECK(P("x1^2 - q1", 3).is_homogeneous());
    CHECK_FALSE(P("x1^2 + q1*x2", 3).is_homogeneous());
}

TEST_CASE("text format round trips") {
    CHECK(to_string(P("x1^2*x2 + q1*x1", 3)) == "x1^2*x2 + q1*x1");
    CHECK(to_string(P("x1^2 - q1", 3)) == "x1^2 - q1");
    CHECK(to_string(Polynomial::zero(3)) == "0");
    CHECK(to_string(P("-1", 2)) == "-1");
    CHECK(to_string(P("- x1 + 3", 2)) == "-x1 + 3");
    CHECK(P(" x1 ^ 2 * x2+q1* x1 ", 3) == P("x1^2*x2 + q1*x1", 3));
    CHECK(P("2*x1*x1", 2) == P("2*x1^2", 2));
    CHECK(P("7", 2) == Polynomial::constant(2, 7));
    CHECK(P("x1^0", 2) == P("1", 2));

    CHECK_THROWS_AS(P("x4", 3), std::invalid_argument);
    CHECK_THROWS_AS(P("q3", 3), std::invalid_argument);
    CHECK_THROWS_AS(P("x1 +", 3), std::invalid_argument);
    CHECK_THROWS_AS(P("y1", 3), std::invalid_argument);
    CHECK_THROWS_AS(P("x1 x2", 3), std::invalid_argument);

    std::mt19937 rng(29);
    for (int t = 0; t < 60; ++t) {
        const Polynomial f = oracles::random_polynomial(rng, 4, 8, 6, 2);
        CHECK(parse_polynomial(to_string(f), 4) == f);
    }
}
