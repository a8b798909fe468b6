#include "flagq/quantize.hpp"

#include "flagq/linalg.hpp"

#include <stdexcept>

namespace flagq {

std::vector<std::vector<int>> standard_indices(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<std::size_t>(n) - 1, 0);
    for (;;) {
        out.push_back(idx);
        int k = n - 1;
        while (k >= 1 && idx[static_cast<std::size_t>(k) - 1] == k)
            --k;
        if (k == 0)
            break;
        ++idx[static_cast<std::size_t>(k) - 1];
        for (std::size_t t = static_cast<std::size_t>(k); t < idx.size(); ++t)
            idx[t] = 0;
    }
    return out;
}

Polynomial elementary_symmetric(int i, int k, int n) {
    if (k < 0 || k > n)
        throw std::invalid_argument("elementary_symmetric: k out of range");
    if (i < 0 || i > k)
        throw std::invalid_argument("elementary_symmetric: i out of range");
    if (i == 0)
        return Polynomial::constant(n, 1);
    // subset sums by the column recurrence e_i^k = e_i^{k-1} + x_k e_{i-1}^{k-1}
    std::vector<Polynomial> row(static_cast<std::size_t>(i) + 1, Polynomial::zero(n));
    row[0] = Polynomial::constant(n, 1);
    for (int m = 1; m <= k; ++m) {
        const Polynomial xm = Polynomial::x(m, n);
        for (int d = std::min(i, m); d >= 1; --d)
            row[static_cast<std::size_t>(d)] += xm * row[static_cast<std::size_t>(d) - 1];
    }
    return row[static_cast<std::size_t>(i)];
}

namespace {

Polynomial quantum_elementary_impl(int i, int k, int n) {
    if (i < 0 || i > k)
        return Polynomial::zero(n);
    if (i == 0)
        return Polynomial::constant(n, 1);
    if (k == 0)
        return Polynomial::zero(n);
    // det(1 + lambda G_k) is tridiagonal:
    //   D_k = (1 + lambda x_k) D_{k-1} + lambda^2 q_{k-1} D_{k-2}
    Polynomial out = quantum_elementary_impl(i, k - 1, n);
    out += Polynomial::x(k, n) * quantum_elementary_impl(i - 1, k - 1, n);
    if (k >= 2 && i >= 2)
        out += Polynomial::q(k - 1, n) * quantum_elementary_impl(i - 2, k - 2, n);
    return out;
}

} // namespace

Polynomial quantum_elementary(int i, int k, int n) {
    if (k < 0 || k > n)
        throw std::invalid_argument("quantum_elementary: k out of range");
    if (i < 0 || i > k)
        throw std::invalid_argument("quantum_elementary: i out of range");
    return quantum_elementary_impl(i, k, n);
}

namespace {

void check_standard_index(const std::vector<int>& idx, int n) {
    if (static_cast<int>(idx.size()) != n - 1)
        throw std::invalid_argument("standard index must have length n-1");
    for (int k = 1; k <= n - 1; ++k) {
        const int v = idx[static_cast<std::size_t>(k) - 1];
        if (v < 0 || v > k)
            throw std::invalid_argument("standard index entry out of bounds");
    }
}

} // namespace

Polynomial standard_monomial(const std::vector<int>& idx, int n) {
    check_standard_index(idx, n);
    Polynomial out = Polynomial::constant(n, 1);
    for (int k = 1; k <= n - 1; ++k)
        out = out * elementary_symmetric(idx[static_cast<std::size_t>(k) - 1], k, n);
    return out;
}

Polynomial quantum_standard_monomial(const std::vector<int>& idx, int n) {
    check_standard_index(idx, n);
    Polynomial out = Polynomial::constant(n, 1);
    for (int k = 1; k <= n - 1; ++k)
        out = out * quantum_elementary(idx[static_cast<std::size_t>(k) - 1], k, n);
    return out;
}

int staircase_monomial_count(int n) {
    int c = 1;
    for (int i = 2; i <= n; ++i)
        c *= i;
    return c;
}

int staircase_monomial_index(const Exponent& e, int n) {
    int index = 0;
    for (int i = 1; i <= n; ++i) {
        const int digit = e.x[static_cast<std::size_t>(i) - 1];
        if (digit < 0 || digit > n - i)
            throw std::invalid_argument("monomial does not divide the staircase");
        if (i < n)
            index = index * (n - i + 1) + digit;
    }
    return index;
}

Exponent staircase_monomial_at(int index, int n) {
    Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
    for (int i = n - 1; i >= 1; --i) {
        const int radix = n - i + 1;
        e.x[static_cast<std::size_t>(i) - 1] = index % radix;
        index /= radix;
    }
    if (index != 0)
        throw std::invalid_argument("monomial index out of range");
    return e;
}

StandardExpander::StandardExpander(int n) : n_(n), indices_(standard_indices(n)) {
    const int dim = staircase_monomial_count(n);
    linalg::RationalMatrix m(static_cast<std::size_t>(dim),
                             std::vector<linalg::Rational>(static_cast<std::size_t>(dim), 0));
    for (int col = 0; col < dim; ++col) {
        const Polynomial p = standard_monomial(indices_[static_cast<std::size_t>(col)], n);
        for (const auto& [e, c] : p.terms())
            m[static_cast<std::size_t>(staircase_monomial_index(e, n))][static_cast<std::size_t>(col)] = c;
    }
    inverse_ = linalg::integer_inverse(m);
}

std::map<std::vector<int>, mpz_class> StandardExpander::expand(const Polynomial& f) const {
    if (f.vars() != n_)
        throw std::invalid_argument("polynomial over the wrong ring");
    if (!f.is_q_free())
        throw std::invalid_argument("standard expansion requires a q-free polynomial");
    const int dim = staircase_monomial_count(n_);
    std::vector<mpz_class> coords(static_cast<std::size_t>(dim), 0);
    for (const auto& [e, c] : f.terms()) {
        if (!divides_staircase(e, n_))
            throw std::invalid_argument("polynomial is not supported on staircase divisors");
        coords[static_cast<std::size_t>(staircase_monomial_index(e, n_))] = c;
    }
    std::map<std::vector<int>, mpz_class> out;
    for (int row = 0; row < dim; ++row) {
        mpz_class v = 0;
        for (int col = 0; col < dim; ++col)
            if (coords[static_cast<std::size_t>(col)] != 0)
                v += inverse_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                     coords[static_cast<std::size_t>(col)];
        if (v != 0)
            out.emplace(indices_[static_cast<std::size_t>(row)], std::move(v));
    }
    return out;
}

QSchubertTable::QSchubertTable(int n) : n_(n), classical_(n), expander_(n) {
    std::map<std::vector<int>, Polynomial> quantum_cache;
    for (const Permutation& w : classical_.permutations()) {
        Polynomial sum = Polynomial::zero(n);
        for (const auto& [idx, c] : expander_.expand(classical_.poly(w))) {
            auto it = quantum_cache.find(idx);
            if (it == quantum_cache.end())
                it = quantum_cache.emplace(idx, quantum_standard_monomial(idx, n)).first;
            sum += it->second * c;
        }
        table_.emplace(w, std::move(sum));
    }
}

const Polynomial& QSchubertTable::poly(const Permutation& w) const {
    auto it = table_.find(w);
    if (it == table_.end())
        throw std::invalid_argument("permutation not in this table");
    return it->second;
}

Polynomial x_operator(int k, const Polynomial& f) {
    const int n = f.vars();
    if (k < 1 || k > n)
        throw std::invalid_argument("x_operator index out of range");
    Polynomial out = Polynomial::x(k, n) * f;
    for (int i = 1; i < k; ++i) {
        Polynomial term = divided_difference_t(i, k, f);
        for (int t = i; t < k; ++t)
            term = term * Polynomial::q(t, n);
        out -= term;
    }
    for (int j = k + 1; j <= n; ++j) {
        Polynomial term = divided_difference_t(k, j, f);
        for (int t = k; t < j; ++t)
            term = term * Polynomial::q(t, n);
        out += term;
    }
    return out;
}

Quantizer::Quantizer(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("quantizer requires n >= 1");
    power_cache_.emplace(std::vector<int>(static_cast<std::size_t>(n), 0), Polynomial::constant(n, 1));
}

const Polynomial& Quantizer::x_power_at_one(const std::vector<int>& xexp) {
    auto it = power_cache_.find(xexp);
    if (it != power_cache_.end())
        return it->second;
    std::vector<int> below = xexp;
    int k = 0;
    for (int i = 1; i <= n_; ++i) {
        if (below[static_cast<std::size_t>(i) - 1] > 0) {
            k = i;
            break;
        }
    }
    --below[static_cast<std::size_t>(k) - 1];
    const Polynomial applied = x_operator(k, x_power_at_one(below));
    return power_cache_.emplace(xexp, applied).first->second;
}

Polynomial Quantizer::quantize(const Polynomial& g) {
    if (g.vars() != n_)
        throw std::invalid_argument("polynomial over the wrong ring");
    Polynomial residual = g;
    Polynomial out = Polynomial::zero(n_);
    while (!residual.is_zero()) {
        const auto& [e, c] = residual.leading_term();
        const Exponent lead = e; // copy: residual mutates below
        const mpz_class coeff = c;
        out.add_term(lead, coeff);
        Polynomial correction = x_power_at_one(lead.x);
        if (lead.qdeg() != 0) {
            Exponent qpart{std::vector<int>(static_cast<std::size_t>(n_), 0), lead.q};
            correction = correction * Polynomial::monomial(n_, std::move(qpart), 1);
        }
        residual -= correction * coeff;
        if (!residual.is_zero()) {
            const TermKeyLess less;
            if (!less(residual.leading_term().first, lead))
                throw std::logic_error("quantization residual failed to decrease");
        }
    }
    return out;
}

Polynomial Quantizer::apply_operator(const Polynomial& op, const Polynomial& f) {
    if (op.vars() != n_ || f.vars() != n_)
        throw std::invalid_argument("polynomial over the wrong ring");
    Polynomial out = Polynomial::zero(n_);
    for (const auto& [e, c] : op.terms()) {
        Polynomial piece = f;
        for (int k = 1; k <= n_; ++k)
            for (int t = 0; t < e.x[static_cast<std::size_t>(k) - 1]; ++t)
                piece = x_operator(k, piece);
        if (e.qdeg() != 0) {
            Exponent qpart{std::vector<int>(static_cast<std::size_t>(n_), 0), e.q};
            piece = piece * Polynomial::monomial(n_, std::move(qpart), 1);
        }
        out += piece * c;
    }
    return out;
}

Polynomial Quantizer::quantum_multiply(const Polynomial& f, const Polynomial& g) {
    return apply_operator(quantize(f), g);
}

} // namespace flagq
