#pragma once

#include <map>
#include <vector>

#include "flagq/permutation.hpp"
#include "flagq/polynomial.hpp"
#include "flagq/schubert.hpp"

namespace flagq {

// All index sequences (i_1,...,i_{n-1}) with 0 <= i_k <= k, lexicographic.
// There are exactly n! of them.
std::vector<std::vector<int>> standard_indices(int n);

// e_i(x_1..x_k) inside the ring with n variables.
Polynomial elementary_symmetric(int i, int k, int n);

// Quantum elementary symmetric function E_i^k: the lambda^i coefficient of
// det(1 + lambda G_k) for the tridiagonal matrix G_k with diagonal x_1..x_k,
// superdiagonal q_1..q_{k-1} and subdiagonal -1. Homogeneous of degree i;
// reduces to e_i(x_1..x_k) at q = 0.
Polynomial quantum_elementary(int i, int k, int n);

Polynomial standard_monomial(const std::vector<int>& idx, int n);
Polynomial quantum_standard_monomial(const std::vector<int>& idx, int n);

// Indexing of the n! monomials dividing x^delta (mixed radix on the digits
// a_i in 0..n-i).
int staircase_monomial_count(int n);
int staircase_monomial_index(const Exponent& e, int n);
Exponent staircase_monomial_at(int index, int n);

// Expands q-free members of the span of staircase divisors in the standard
// elementary monomial basis, by an exact linear solve with every
// coefficient asserted integral.
class StandardExpander {
public:
    explicit StandardExpander(int n);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& indices() const { return indices_; }
    std::map<std::vector<int>, mpz_class> expand(const Polynomial& f) const;

private:
    int n_;
    std::vector<std::vector<int>> indices_;
    // monomial coordinates -> standard-monomial coordinates
    std::vector<std::vector<mpz_class>> inverse_;
};

// Quantum Schubert polynomials via the substitution route: expand the
// classical polynomial in standard elementary monomials and replace each by
// its quantum analogue. Immutable once constructed.
class QSchubertTable {
public:
    explicit QSchubertTable(int n);

    int n() const { return n_; }
    const Polynomial& poly(const Permutation& w) const;
    const SchubertTable& classical() const { return classical_; }
    const StandardExpander& expander() const { return expander_; }

private:
    int n_;
    SchubertTable classical_;
    StandardExpander expander_;
    std::map<Permutation, Polynomial> table_;
};

// X_k = x_k - sum_{i<k} q_{ik} d_{t_ik} + sum_{j>k} q_{kj} d_{t_kj}, with
// q_{ij} = q_i ... q_{j-1}; raises degree by one on homogeneous input.
Polynomial x_operator(int k, const Polynomial& f);

// The quantization map and quantum multiplication. Holds a memo table of
// X^a(1), so instances are cheap to reuse but not safe to share across
// threads while in use.
class Quantizer {
public:
    explicit Quantizer(int n);

    int n() const { return n_; }

    // The unique G with G(X_1,...,X_n)(1) = g, found by eliminating the
    // leading residual monomial; each step strictly lowers the leading term.
    Polynomial quantize(const Polynomial& g);

    // op(X_1,...,X_n) applied to f.
    Polynomial apply_operator(const Polynomial& op, const Polynomial& f);

    // (F o G)(1) = F(X)(g) where F, G are the quantizations of f, g.
    Polynomial quantum_multiply(const Polynomial& f, const Polynomial& g);

private:
    const Polynomial& x_power_at_one(const std::vector<int>& xexp);

    int n_;
    std::map<std::vector<int>, Polynomial> power_cache_;
};

} // namespace flagq
