#pragma once

#include <functional>
#include <map>
#include <vector>

#include "flagq/permutation.hpp"
#include "flagq/polynomial.hpp"
#include "flagq/quantize.hpp"
#include "flagq/schubert.hpp"

namespace flagq {

// Groebner basis of the ideal generated by the quantum elementary symmetric
// functions E_1^n..E_n^n: the generator g_k is the k x k determinant
// det(E_{j-i+1}^{n-i+1}), with leading monomial x_{n-k+1}^k and leading
// coefficient normalized to +1. Since the leading monomials are pure powers
// of distinct variables, plain division already produces canonical normal
// forms. Construction verifies every leading monomial and aborts otherwise.
// The classical flag specializes q = 0, giving the basis of the classical
// ideal with the same leading terms.
class GroebnerBasis {
public:
    explicit GroebnerBasis(int n, bool classical_limit = false);

    int n() const { return n_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const Polynomial& generator(int k) const { return gens_.at(static_cast<std::size_t>(k) - 1); }

    Polynomial normal_form(const Polynomial& f) const;
    // As normal_form, but the reducible term and the applicable generator are
    // chosen by the supplied picker; used to confirm schedule independence.
    Polynomial normal_form_scheduled(const Polynomial& f,
                                     const std::function<std::size_t(std::size_t)>& pick) const;

    // Coefficient of x^delta in the normal form, as a polynomial in q.
    Polynomial bracket(const Polynomial& f) const;

private:
    int n_;
    std::vector<Polynomial> gens_;
};

// Normal forms of all pairwise products of staircase monomials: the
// structure constants of the quotient in the monomial basis. Turns repeated
// reduction of products of reduced polynomials into table lookups.
class SpanProductTable {
public:
    explicit SpanProductTable(const GroebnerBasis& gb);

    int n() const { return n_; }
    // NF(x^a x^b) for staircase divisor indices
    const Polynomial& product(int i, int j) const;
    // coefficient of x^delta in product(i, j), in q only
    const Polynomial& product_bracket(int i, int j) const;

    // NF(a b) for a, b supported on staircase divisors (q coefficients fine)
    Polynomial nf_product(const Polynomial& a, const Polynomial& b) const;
    // coefficient of x^delta in NF(a b), in q only
    Polynomial bracket_product(const Polynomial& a, const Polynomial& b) const;

private:
    std::size_t slot(int i, int j) const;

    int n_;
    int dim_;
    std::vector<Polynomial> products_; // upper triangle, i <= j
    std::vector<Polynomial> brackets_;
};

// Expansion of arbitrary polynomials (modulo the ideal) in the quantum
// Schubert basis. Coefficients are polynomials in q, asserted integral.
class QSchubertExpander {
public:
    QSchubertExpander(const GroebnerBasis& gb, const QSchubertTable& qs);

    std::map<Permutation, Polynomial> expand(const Polynomial& f) const;

    // Classical expansion of a q-free element of the staircase span in the
    // classical Schubert basis.
    std::map<Permutation, mpz_class> expand_classical(const Polynomial& f) const;

private:
    const GroebnerBasis& gb_;
    const QSchubertTable& qs_;
    // monomial coordinates -> classical Schubert coordinates
    std::vector<std::vector<mpz_class>> schubert_inverse_;
    // q-components of each quantum Schubert polynomial, in monomial coords
    std::vector<std::map<std::vector<int>, std::vector<mpz_class>>> qsw_components_;
};

// Everything needed to evaluate Gromov-Witten invariants at a fixed n.
// Read-only after construction and safe to share across threads.
struct GwContext {
    explicit GwContext(int n);
    // expander keeps references into the sibling members
    GwContext(const GwContext&) = delete;
    GwContext& operator=(const GwContext&) = delete;

    int n;
    QSchubertTable qschubert;
    GroebnerBasis basis;
    QSchubertExpander expander;
    SpanProductTable span;

    const SchubertTable& schubert() const { return qschubert.classical(); }
};

// l(u) + l(v) + l(w) == C(n,2) + 2 sum d
bool gw_dimension_condition(const Permutation& u, const Permutation& v, const Permutation& w,
                            const std::vector<int>& d);

// Coefficient of q^d x^delta in the normal form of the product of the
// quantum Schubert polynomials of ws (k >= 3 permutations). For k = 3 the
// dimension condition is checked first and failures return 0 immediately.
mpz_class gw_invariant(const std::vector<Permutation>& ws, const std::vector<int>& d,
                       const GwContext& ctx);

struct GwResult {
    Permutation u, v, w;
    std::vector<int> d;
    mpz_class value;
};

// All unordered triples u <= v <= w (canonically sorted representatives) and
// degree vectors d <= max_d componentwise that satisfy the dimension
// condition, with exact values, ordered by (u, v, w, d). The parallel kernel
// fans out over (u, v) pairs; the serial variant is the reference
// implementation and produces identical output.
std::vector<GwResult> gw_table(const GwContext& ctx, const std::vector<int>& max_d);
std::vector<GwResult> gw_table_serial(const GwContext& ctx, const std::vector<int>& max_d);

} // namespace flagq
