#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flagq/permutation.hpp"

namespace flagq {

// Exponent record of a single term: x part of size n, q part of size n-1.
struct Exponent {
    std::vector<int> x;
    std::vector<int> q;

    int xdeg() const;
    int qdeg() const;
    // Grading with deg x_i = 1, deg q_j = 2.
    int graded_degree() const { return xdeg() + 2 * qdeg(); }

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Term order on the x parts only: total degree first, ties broken at the
// largest index where the exponents differ (so x1 < x2 < x3 < ...).
// Returns negative/zero/positive as a </==/> b. The q part is ignored.
int compare_terms(const Exponent& a, const Exponent& b);

// Strict total order used as the term-map key: compare_terms on x, then the
// q exponents lexicographically. Ascending map order, so the leading term
// sits at the back.
struct TermKeyLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse polynomial in x_1..x_n and q_1..q_{n-1} with exact integer
// coefficients. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponent, mpz_class, TermKeyLess>;

    explicit Polynomial(int n);

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, mpz_class c);
    static Polynomial x(int i, int n);
    static Polynomial q(int j, int n);
    static Polynomial monomial(int n, Exponent e, mpz_class c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    mpz_class coefficient(const Exponent& e) const;
    // Largest term in the key order; polynomial must be nonzero.
    const std::pair<const Exponent, mpz_class>& leading_term() const;

    bool is_q_free() const;
    // True when all terms share the same graded degree (or the polynomial is 0).
    bool is_homogeneous() const;
    int max_graded_degree() const; // 0 for the zero polynomial
    int max_xdeg() const;

    void add_term(const Exponent& e, const mpz_class& c);
    // *this += scale * x^shift.x * q^shift.q * g, without temporaries.
    void add_scaled(const Polynomial& g, const Exponent& shift, const mpz_class& scale);
    // Removes and returns the leading term; polynomial must be nonzero.
    std::pair<Exponent, mpz_class> extract_leading();

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const mpz_class& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const mpz_class& c) { return a *= c; }
    friend Polynomial operator*(const mpz_class& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void check_same_ring(const Polynomial& other) const;

    int n_;
    TermMap terms_;
};

// Action of w: substitutes x_j -> x_{w(j)}; q variables untouched.
// Satisfies apply_perm(u, apply_perm(v, f)) == apply_perm(u*v, f).
Polynomial apply_perm(const Permutation& w, const Polynomial& f);

// Divided difference (x_i - x_{i+1})^{-1} (1 - s_i), computed term by term
// with the exact telescoping quotient.
Polynomial divided_difference(int i, const Polynomial& f);

// Composition along a word, rightmost letter applied first.
Polynomial divided_difference_word(const std::vector<int>& word, const Polynomial& f);

// Composite operator along a reduced word of w (resp. of t_{ij}); the result
// does not depend on the chosen word.
Polynomial divided_difference_w(const Permutation& w, const Polynomial& f);
Polynomial divided_difference_t(int i, int j, const Polynomial& f);

// Substitutes q_j = values[j-1]; values must have length n-1.
Polynomial specialize_q(const Polynomial& f, const std::vector<long>& values);

// Grammar: term := [sign][int "*"] factor ("*" factor)* | [sign] int;
// factor := ("x"|"q") index ["^" exp]. Arbitrary whitespace accepted.
Polynomial parse_polynomial(std::string_view text, int n);

// Canonical form: terms in decreasing term order, q factors before x factors.
std::string to_string(const Polynomial& f);

} // namespace flagq
