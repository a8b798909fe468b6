// Acceptance suite: one line per criterion, wall-clock limits enforced.
// Everything is exact arithmetic, so every comparison is exact equality.

#include "flagq/grobner.hpp"
#include "flagq/quadratic.hpp"
#include "flagq/quantize.hpp"
#include "flagq/schubert.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace flagq;

namespace {

Polynomial P(const std::string& text, int n) { return parse_polynomial(text, n); }

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> body;
};

std::vector<std::vector<int>> degree_vectors_with_sum(int len, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == len - 1) {
            d[static_cast<std::size_t>(pos)] = rest;
            out.push_back(d);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            d[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (len == 0) {
        if (total == 0)
            out.push_back({});
        return out;
    }
    rec(rec, 0, total);
    return out;
}

bool quantum_schubert_table_s3(std::string& why) {
    const QSchubertTable table(3);
    const std::vector<std::pair<std::vector<int>, std::string>> expected = {
        {{1, 2, 3}, "1"},
        {{2, 1, 3}, "x1"},
        {{1, 3, 2}, "x1 + x2"},
        {{2, 3, 1}, "x1*x2 + q1"},
        {{3, 1, 2}, "x1^2 - q1"},
        {{3, 2, 1}, "x1^2*x2 + q1*x1"},
    };
    for (const auto& [images, text] : expected) {
        const Permutation w{images};
        if (!(table.poly(w) == P(text, 3))) {
            why = "mismatch at " + to_string(w);
            return false;
        }
    }
    // the canonical printed form of the top polynomial is pinned
    if (to_string(table.poly(Permutation({3, 2, 1}))) != "x1^2*x2 + q1*x1") {
        why = "canonical text form changed";
        return false;
    }
    return true;
}

bool dunkl_poset_s3(std::string& why) {
    const int n = 3;
    const SchubertTable schub(n);
    const std::vector<std::pair<std::vector<int>, std::string>> expected = {
        {{1, 2, 3}, "1"},
        {{2, 1, 3}, "[1 2] + [1 3]"},
        {{1, 3, 2}, "[1 3] + [2 3]"},
        {{2, 3, 1}, "[1 3][2 3] + [2 3][1 3]"},
        {{3, 1, 2}, "[1 2][1 3] + [1 3][1 2]"},
        {{3, 2, 1}, "[1 2][1 3][2 3] + [1 3][1 2][1 3] + [1 3][2 3][1 3]"},
    };
    for (const auto& [images, text] : expected) {
        const Permutation w{images};
        const NCElement evaluated = dunkl_word_expansion(schub.poly(w), n);
        if (!en_equal(evaluated, parse_word_sum(text, n), n)) {
            why = "Dunkl evaluation mismatch at " + to_string(w);
            return false;
        }
        const auto cert = nonneg_decompose(w, n);
        if (!cert) {
            why = "no nonnegative certificate for " + to_string(w);
            return false;
        }
        NCElement sum(n);
        for (const auto& [word, c] : *cert) {
            if (c < 1) {
                why = "certificate coefficient not positive at " + to_string(w);
                return false;
            }
            sum.add_term(word, c);
        }
        if (!en_equal(sum, evaluated, n)) {
            why = "certificate does not verify at " + to_string(w);
            return false;
        }
    }
    return true;
}

bool oracle_equivalence(std::string& why) {
    bool ok = true;
    for (int n : {3, 4}) {
        const GwContext ctx(n);
        const auto perms = all_permutations(n);
        const Permutation wo = Permutation::longest_element(n);
        const int choose2 = n * (n - 1) / 2;
        const int cap = (n == 3) ? choose2 : 2; // n=3 exhaustive, n=4 within d <= (2,2,2)

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < perms.size(); ++a)
            for (std::size_t b = 0; b < perms.size(); ++b)
                pairs.emplace_back(a, b);

#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(pairs.size()); ++t) {
            const Permutation& u = perms[pairs[static_cast<std::size_t>(t)].first];
            const Permutation& v = perms[pairs[static_cast<std::size_t>(t)].second];
            const GroupAlgebraElement image =
                eval_at_dunkl(ctx.qschubert.poly(u), GroupAlgebraElement::unit(v), true);
            const Polynomial uv = ctx.span.nf_product(ctx.qschubert.poly(u), ctx.qschubert.poly(v));
            for (const Permutation& w : perms) {
                const int excess = u.length() + v.length() + w.length() - choose2;
                if (excess < 0 || excess % 2 != 0 || excess / 2 > cap * (n - 1))
                    continue;
                const Polynomial bracket = ctx.span.bracket_product(uv, ctx.qschubert.poly(w));
                const Polynomial coeff = image.coefficient(wo * w);
                for (const auto& d : degree_vectors_with_sum(n - 1, excess / 2)) {
                    bool in_range = true;
                    for (int di : d)
                        in_range = in_range && di <= cap;
                    if (!in_range)
                        continue;
                    Exponent qmon{std::vector<int>(static_cast<std::size_t>(n), 0), d};
                    if (bracket.coefficient(qmon) != coeff.coefficient(qmon)) {
#pragma omp critical
                        {
                            ok = false;
                            if (why.empty())
                                why = "n=" + std::to_string(n) + " u=" + to_string(u) +
                                      " v=" + to_string(v) + " w=" + to_string(w);
                        }
                    }
                }
            }
        }
    }
    return ok;
}

bool identity_evaluation_s4(std::string& why) {
    const QSchubertTable table(4);
    const GroupAlgebraElement id4 = GroupAlgebraElement::unit(Permutation::identity(4));
    for (const Permutation& w : all_permutations(4)) {
        if (!(eval_at_dunkl(table.poly(w), id4, true) == GroupAlgebraElement::unit(w))) {
            why = "evaluation at identity differs from " + to_string(w);
            return false;
        }
    }
    return true;
}

bool axiom_suite(std::string& why) {
    for (int n : {2, 3, 4}) {
        const GwContext ctx(n);
        const auto perms = all_permutations(n);
        const std::vector<long> zeros(static_cast<std::size_t>(n) - 1, 0);
        for (const Permutation& w : perms) {
            const Polynomial& sq = ctx.qschubert.poly(w);
            if (!sq.is_homogeneous() || sq.max_graded_degree() != w.length()) {
                why = "grading fails at n=" + std::to_string(n) + " w=" + to_string(w);
                return false;
            }
            if (!(specialize_q(sq, zeros) == ctx.schubert().poly(w))) {
                why = "q=0 specialization fails at " + to_string(w);
                return false;
            }
            if (!supported_on_staircase(sq)) {
                why = "staircase support fails at " + to_string(w);
                return false;
            }
        }
        // products expand with componentwise-nonnegative q-polynomials
        for (const Permutation& u : perms)
            for (const Permutation& v : perms) {
                const auto expansion =
                    ctx.expander.expand(ctx.span.nf_product(ctx.qschubert.poly(u), ctx.qschubert.poly(v)));
                for (const auto& [w, cq] : expansion)
                    for (const auto& [e, c] : cq.terms())
                        if (c < 0) {
                            why = "negative structure coefficient at n=" + std::to_string(n) +
                                  " u=" + to_string(u) + " v=" + to_string(v);
                            return false;
                        }
            }
        // cycles s_{k-i+1}...s_k give the quantum elementary functions
        for (int k = 1; k < n; ++k)
            for (int i = 1; i <= k; ++i) {
                Permutation w = Permutation::identity(n);
                for (int t = k - i + 1; t <= k; ++t)
                    w = w * Permutation::adjacent_transposition(t, n);
                if (!(ctx.qschubert.poly(w) == quantum_elementary(i, k, n))) {
                    why = "cycle identity fails at n=" + std::to_string(n) +
                          " (i,k)=" + std::to_string(i) + "," + std::to_string(k);
                    return false;
                }
            }
    }
    return true;
}

bool quantization_consistency(std::string& why) {
    for (int n : {2, 3, 4}) {
        const QSchubertTable table(n);
        Quantizer quantizer(n);
        for (const Permutation& w : all_permutations(n))
            if (!(quantizer.quantize(table.classical().poly(w)) == table.poly(w))) {
                why = "operator and substitution routes differ at " + to_string(w);
                return false;
            }
        for (int i = 1; i <= n; ++i)
            if (!(quantizer.quantize(elementary_symmetric(i, n, n)) == quantum_elementary(i, n, n))) {
                why = "elementary quantization fails at n=" + std::to_string(n) +
                      " i=" + std::to_string(i);
                return false;
            }
        for (int idx = 0; idx < staircase_monomial_count(n); ++idx) {
            const Polynomial m = Polynomial::monomial(n, staircase_monomial_at(idx, n), 1);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    if (!(x_operator(j, x_operator(k, m)) == x_operator(k, x_operator(j, m)))) {
                        why = "X operators fail to commute at n=" + std::to_string(n);
                        return false;
                    }
        }
    }
    return true;
}

bool groebner_sanity(std::string& why) {
    for (int n = 1; n <= 5; ++n) {
        const GroebnerBasis basis(n);
        for (int k = 1; k <= n; ++k) {
            const auto& [e, c] = basis.generator(k).leading_term();
            for (int v = 1; v <= n; ++v)
                if (e.x[static_cast<std::size_t>(v) - 1] != (v == n - k + 1 ? k : 0) || c != 1 ||
                    e.qdeg() != 0) {
                    why = "leading monomial of generator " + std::to_string(k) +
                          " at n=" + std::to_string(n);
                    return false;
                }
        }
    }
    // 1000 random polynomials of degree <= 8 over n = 1..4
    std::mt19937 rng(20250808);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    std::uniform_int_distribution<int> terms_dist(1, 8);
    std::uniform_int_distribution<int> xdeg_dist(0, 8);
    std::uniform_int_distribution<int> qdeg_dist(0, 2);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 4;
        const GroebnerBasis basis(n);
        Polynomial f(n);
        const int terms = terms_dist(rng);
        for (int t = 0; t < terms; ++t) {
            Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
                       std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
            std::uniform_int_distribution<int> slot(0, n - 1);
            for (int total = xdeg_dist(rng); total > 0; --total)
                ++e.x[static_cast<std::size_t>(slot(rng))];
            if (n > 1) {
                std::uniform_int_distribution<int> qslot(0, n - 2);
                for (int total = qdeg_dist(rng); total > 0; --total)
                    ++e.q[static_cast<std::size_t>(qslot(rng))];
            }
            int c = coeff_dist(rng);
            if (c == 0)
                c = 1;
            f.add_term(e, c);
        }
        const Polynomial nf = basis.normal_form(f);
        if (!supported_on_staircase(nf)) {
            why = "normal form escapes the staircase span at trial " + std::to_string(trial);
            return false;
        }
        const Polynomial scheduled = basis.normal_form_scheduled(
            f, [&](std::size_t m) { return static_cast<std::size_t>(rng()) % m; });
        if (!(scheduled == nf)) {
            why = "reduction schedule changed the normal form at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool classical_degeneration(std::string& why) {
    for (int n : {2, 3, 4}) {
        const GwContext ctx(n);
        const GroebnerBasis classical_basis(n, /*classical_limit=*/true);
        const SpanProductTable classical_span(classical_basis);
        const auto perms = all_permutations(n);
        const Permutation wo = Permutation::longest_element(n);
        const std::vector<int> zero_d(static_cast<std::size_t>(n) - 1, 0);
        const Exponent zero_e{std::vector<int>(static_cast<std::size_t>(n), 0), zero_d};
        for (const Permutation& u : perms)
            for (const Permutation& v : perms) {
                const auto classical_exp = ctx.expander.expand_classical(
                    classical_span.nf_product(ctx.schubert().poly(u), ctx.schubert().poly(v)));
                const GroupAlgebraElement bruhat_image =
                    eval_at_dunkl(ctx.schubert().poly(u), GroupAlgebraElement::unit(v), false);
                const Polynomial uv =
                    ctx.span.nf_product(ctx.qschubert.poly(u), ctx.qschubert.poly(v));
                for (const Permutation& w : perms) {
                    if (!gw_dimension_condition(u, v, w, zero_d))
                        continue;
                    const mpz_class via_gw =
                        ctx.span.bracket_product(uv, ctx.qschubert.poly(w)).coefficient(zero_e);
                    mpz_class via_classical = 0;
                    if (auto it = classical_exp.find(wo * w); it != classical_exp.end())
                        via_classical = it->second;
                    const mpz_class via_bruhat =
                        bruhat_image.coefficient(wo * w).coefficient(zero_e);
                    if (via_gw != via_classical || via_gw != via_bruhat) {
                        why = "classical mismatch at n=" + std::to_string(n) + " u=" + to_string(u) +
                              " v=" + to_string(v) + " w=" + to_string(w);
                        return false;
                    }
                }
            }
    }
    // the quantum cohomology of the projective line: <s1,s1,s1>_1 = 1
    const GroebnerBasis g2(2);
    if (!(g2.bracket(P("x1^3", 2)) == P("q1", 2))) {
        why = "bracket of x1^3 at n=2 is not q1";
        return false;
    }
    const GwContext ctx2(2);
    const Permutation s1({2, 1});
    if (gw_invariant({s1, s1, s1}, {1}, ctx2) != 1) {
        why = "projective-line invariant differs from 1";
        return false;
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"S_3 quantum Schubert polynomials (values and canonical text)", 1.0,
         quantum_schubert_table_s3},
        {"S_3 Dunkl evaluations and nonnegative certificates", 10.0, dunkl_poset_s3},
        {"invariant oracle equivalence (Groebner vs quantum Bruhat), n=3 exhaustive, n=4 d<=(2,2,2)",
         300.0, oracle_equivalence},
        {"evaluation at the identity recovers w for all of S_4", 30.0, identity_evaluation_s4},
        {"axioms: grading, q=0 limit, staircase support, positivity, cycle identity (n<=4)", 0.0,
         axiom_suite},
        {"quantization consistency: two routes, elementary functions, X commutation (n<=4)", 0.0,
         quantization_consistency},
        {"Groebner sanity: leading monomials (n<=5), 1000 random normal forms", 0.0,
         groebner_sanity},
        {"classical degeneration at d=0 and the projective-line invariant", 0.0,
         classical_degeneration},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& criterion = criteria[i];
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.body(why);
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = criterion.limit_seconds == 0.0 || elapsed <= criterion.limit_seconds;
        if (ok && !in_time)
            why = "exceeded time limit";
        const bool passed = ok && in_time;
        failures += passed ? 0 : 1;
        std::printf("%s  %zu/%zu  %s (%.2fs%s)%s%s\n", passed ? "PASS" : "FAIL", i + 1,
                    criteria.size(), criterion.name.c_str(), elapsed,
                    criterion.limit_seconds > 0
                        ? (", limit " + std::to_string(static_cast<int>(criterion.limit_seconds)) + "s").c_str()
                        : "",
                    why.empty() ? "" : "  -- ", why.c_str());
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
