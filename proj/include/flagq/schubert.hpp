#pragma once

#include <map>
#include <vector>

#include "flagq/permutation.hpp"
#include "flagq/polynomial.hpp"

namespace flagq {

// delta = (n-1, n-2, ..., 1, 0)
Exponent staircase_exponent(int n);
Polynomial staircase_monomial(int n); // x^delta

// True when the x part of e divides x^delta (the q part is ignored).
bool divides_staircase(const Exponent& e, int n);
bool supported_on_staircase(const Polynomial& f);

// All n! Schubert polynomials of S_n, built top-down from x^delta by single
// divided differences along the weak order. Immutable once constructed.
class SchubertTable {
public:
    explicit SchubertTable(int n);

    int n() const { return n_; }
    const Polynomial& poly(const Permutation& w) const;
    // Ordered by (length, one-line lexicographic).
    const std::vector<Permutation>& permutations() const { return order_; }

private:
    int n_;
    std::vector<Permutation> order_;
    std::map<Permutation, Polynomial> table_;
};

// Direct evaluation of the defining divided-difference formula applied to
// the staircase monomial; used as a cross-check against the table route.
Polynomial schubert_polynomial(const Permutation& w);

} // namespace flagq
