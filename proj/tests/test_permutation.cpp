#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagq/permutation.hpp"
#include "oracles.hpp"

#include <set>

using namespace flagq;

TEST_CASE("length counts inversions") {
    CHECK(Permutation::identity(3).length() == 0);
    CHECK(Permutation({3, 2, 1}).length() == 3);
    CHECK(Permutation({2, 4, 1, 3}).length() == 3);
    for (const Permutation& w : all_permutations(4))
        CHECK(w.length() == oracles::brute_force_inversions(w.images()));
}

TEST_CASE("reduced words multiply back and have minimal length") {
    CHECK(reduced_word(Permutation::identity(3)).empty());
    CHECK(reduced_word(Permutation({1, 3, 2})) == std::vector<int>{2});

    const auto word = reduced_word(Permutation({3, 2, 1}));
    CHECK(word.size() == 3);
    const bool lex_first = word == std::vector<int>{1, 2, 1};
    const bool lex_second = word == std::vector<int>{2, 1, 2};
    CHECK((lex_first || lex_second));

    for (int n : {2, 3, 4, 5}) {
        for (const Permutation& w : all_permutations(n)) {
            const auto letters = reduced_word(w);
            CHECK(static_cast<int>(letters.size()) == w.length());
            Permutation prod = Permutation::identity(n);
            for (int i : letters)
                prod = prod * Permutation::adjacent_transposition(i, n);
            CHECK(prod == w);
            CHECK(reduced_word(w) == letters); // deterministic
        }
    }
}

TEST_CASE("product composes u after v") {
    const Permutation w({3, 1, 2});
    CHECK(Permutation::identity(3) * w == w);
    CHECK(Permutation({2, 1, 3}) * Permutation({1, 3, 2}) == Permutation({2, 3, 1}));
    const Permutation wo = Permutation::longest_element(4);
    CHECK(wo * wo == Permutation::identity(4));
    // associativity spot check
    const Permutation a({2, 3, 1}), b({3, 1, 2}), c({1, 3, 2});
    CHECK((a * b) * c == a * (b * c));
    CHECK_THROWS_AS(Permutation({2, 1}) * Permutation({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("inverse undoes the permutation") {
    for (const Permutation& w : all_permutations(4)) {
        CHECK(w * w.inverse() == Permutation::identity(4));
        CHECK(w.inverse() * w == Permutation::identity(4));
    }
}

TEST_CASE("right transposition swaps positions and reports the length delta") {
    const auto [a, da] = right_transposition(Permutation::identity(3), 1, 2);
    CHECK(a == Permutation({2, 1, 3}));
    CHECK(da == 1);
    const auto [b, db] = right_transposition(Permutation({2, 1, 3}), 1, 2);
    CHECK(b == Permutation::identity(3));
    CHECK(db == -1);
    const auto [c, dc] = right_transposition(Permutation({2, 1, 3}), 1, 3);
    CHECK(c == Permutation({3, 1, 2}));
    CHECK(dc == 1);
    CHECK_THROWS_AS(right_transposition(Permutation::identity(3), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(right_transposition(Permutation::identity(3), 1, 4), std::invalid_argument);

    // the delta is always odd
    for (const Permutation& w : all_permutations(4))
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                CHECK(right_transposition(w, i, j).second % 2 != 0);
}

TEST_CASE("transposition length") {
    CHECK(transposition_length(1, 2) == 1);
    CHECK(transposition_length(1, 3) == 3);
    CHECK(transposition_length(2, 5) == 5);
    CHECK_THROWS_AS(transposition_length(3, 2), std::invalid_argument);
    for (int n : {3, 4, 5, 6})
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK(transposition_length(i, j) == Permutation::transposition(i, j, n).length());
}

TEST_CASE("longest element reverses") {
    for (int n : {1, 2, 3, 4, 5}) {
        const Permutation wo = Permutation::longest_element(n);
        CHECK(wo.length() == n * (n - 1) / 2);
        for (int i = 1; i <= n; ++i)
            CHECK(wo(i) == n + 1 - i);
    }
}

TEST_CASE("enumeration yields each permutation exactly once") {
    CHECK(all_permutations(1) == std::vector<Permutation>{Permutation::identity(1)});
    CHECK(all_permutations(3).size() == 6);
    const auto s4 = all_permutations(4);
    CHECK(s4.size() == 24);
    std::set<Permutation> seen(s4.begin(), s4.end());
    CHECK(seen.size() == 24);
    // lexicographic order
    CHECK(s4.front() == Permutation::identity(4));
    CHECK(s4.back() == Permutation::longest_element(4));
    for (std::size_t i = 0; i + 1 < s4.size(); ++i)
        CHECK(s4[i] < s4[i + 1]);
}

TEST_CASE("parsing accepts one-line and word forms") {
    CHECK(parse_permutation("2 3 1", 3) == Permutation({2, 3, 1}));
    CHECK(parse_permutation("  3   1 2 ", 3) == Permutation({3, 1, 2}));
    CHECK(parse_permutation("s1*s2", 3) == Permutation({2, 3, 1}));
    CHECK(parse_permutation("s1 * s2 * s1", 3) == Permutation({3, 2, 1}));
    CHECK(parse_permutation("id", 4) == Permutation::identity(4));
    CHECK(to_string(Permutation({2, 3, 1})) == "2 3 1");
    CHECK_THROWS_AS(parse_permutation("1 1 3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1 2", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("s3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("", 3), std::invalid_argument);
}
