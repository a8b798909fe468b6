#include "flagq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace flagq {

int Exponent::xdeg() const {
    return std::accumulate(x.begin(), x.end(), 0);
}

int Exponent::qdeg() const {
    return std::accumulate(q.begin(), q.end(), 0);
}

int compare_terms(const Exponent& a, const Exponent& b) {
    const int da = a.xdeg();
    const int db = b.xdeg();
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = a.x.size(); i-- > 0;) {
        if (a.x[i] != b.x[i])
            return a.x[i] < b.x[i] ? -1 : 1;
    }
    return 0;
}

bool TermKeyLess::operator()(const Exponent& a, const Exponent& b) const {
    const int c = compare_terms(a, b);
    if (c != 0)
        return c < 0;
    return std::lexicographical_compare(a.q.begin(), a.q.end(), b.q.begin(), b.q.end());
}

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("polynomial ring requires n >= 1");
}

Polynomial Polynomial::constant(int n, mpz_class c) {
    Polynomial p(n);
    if (c != 0) {
        Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
                   std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
        p.terms_.emplace(std::move(e), std::move(c));
    }
    return p;
}

Polynomial Polynomial::x(int i, int n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("x index out of range");
    Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
    e.x[static_cast<std::size_t>(i) - 1] = 1;
    return monomial(n, std::move(e), 1);
}

Polynomial Polynomial::q(int j, int n) {
    if (j < 1 || j > n - 1)
        throw std::invalid_argument("q index out of range");
    Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
    e.q[static_cast<std::size_t>(j) - 1] = 1;
    return monomial(n, std::move(e), 1);
}

Polynomial Polynomial::monomial(int n, Exponent e, mpz_class c) {
    if (static_cast<int>(e.x.size()) != n || static_cast<int>(e.q.size()) != n - 1)
        throw std::invalid_argument("exponent record has wrong shape");
    Polynomial p(n);
    if (c != 0)
        p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

mpz_class Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

const std::pair<const Exponent, mpz_class>& Polynomial::leading_term() const {
    if (terms_.empty())
        throw std::logic_error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

bool Polynomial::is_q_free() const {
    for (const auto& [e, c] : terms_)
        if (e.qdeg() != 0)
            return false;
    return true;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const int d = terms_.begin()->first.graded_degree();
    for (const auto& [e, c] : terms_)
        if (e.graded_degree() != d)
            return false;
    return true;
}

int Polynomial::max_graded_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.graded_degree());
    return d;
}

int Polynomial::max_xdeg() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.xdeg());
    return d;
}

void Polynomial::add_term(const Exponent& e, const mpz_class& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::add_scaled(const Polynomial& g, const Exponent& shift, const mpz_class& scale) {
    check_same_ring(g);
    if (scale == 0)
        return;
    Exponent e;
    for (const auto& [ge, gc] : g.terms_) {
        e.x.assign(ge.x.begin(), ge.x.end());
        e.q.assign(ge.q.begin(), ge.q.end());
        for (std::size_t i = 0; i < e.x.size(); ++i)
            e.x[i] += shift.x[i];
        for (std::size_t i = 0; i < e.q.size(); ++i)
            e.q[i] += shift.q[i];
        add_term(e, gc * scale);
    }
}

std::pair<Exponent, mpz_class> Polynomial::extract_leading() {
    if (terms_.empty())
        throw std::logic_error("leading term of the zero polynomial");
    auto it = std::prev(terms_.end());
    std::pair<Exponent, mpz_class> out = *it;
    terms_.erase(it);
    return out;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("polynomials over different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_ring(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_ring(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_)
        c = -c;
    return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial out(a.vars());
    Exponent e;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            e.x.assign(ea.x.begin(), ea.x.end());
            e.q.assign(ea.q.begin(), ea.q.end());
            for (std::size_t i = 0; i < e.x.size(); ++i)
                e.x[i] += eb.x[i];
            for (std::size_t i = 0; i < e.q.size(); ++i)
                e.q[i] += eb.q[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial apply_perm(const Permutation& w, const Polynomial& f) {
    if (w.size() != f.vars())
        throw std::invalid_argument("permutation size does not match ring");
    const Permutation winv = w.inverse();
    Polynomial out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        Exponent moved = e;
        for (int k = 1; k <= f.vars(); ++k)
            moved.x[static_cast<std::size_t>(k) - 1] = e.x[static_cast<std::size_t>(winv(k)) - 1];
        out.add_term(moved, c);
    }
    return out;
}

Polynomial divided_difference(int i, const Polynomial& f) {
    const int n = f.vars();
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("divided difference index out of range");
    // (x^a y^b - x^b y^a) / (x - y) telescopes into a sum of a - b monomials;
    // terms symmetric in (x_i, x_{i+1}) drop out.
    Polynomial out(n);
    const std::size_t p = static_cast<std::size_t>(i) - 1;
    for (const auto& [e, c] : f.terms()) {
        const int a = e.x[p];
        const int b = e.x[p + 1];
        if (a == b)
            continue;
        Exponent t = e;
        if (a > b) {
            for (int k = 0; k < a - b; ++k) {
                t.x[p] = b + k;
                t.x[p + 1] = a - 1 - k;
                out.add_term(t, c);
            }
        } else {
            for (int k = 0; k < b - a; ++k) {
                t.x[p] = a + k;
                t.x[p + 1] = b - 1 - k;
                out.add_term(t, -c);
            }
        }
    }
    return out;
}

Polynomial divided_difference_word(const std::vector<int>& word, const Polynomial& f) {
    Polynomial out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = divided_difference(*it, out);
    return out;
}

Polynomial divided_difference_w(const Permutation& w, const Polynomial& f) {
    return divided_difference_word(reduced_word(w), f);
}

Polynomial divided_difference_t(int i, int j, const Polynomial& f) {
    if (i >= j)
        throw std::invalid_argument("divided_difference_t requires i < j");
    return divided_difference_w(Permutation::transposition(i, j, f.vars()), f);
}

Polynomial specialize_q(const Polynomial& f, const std::vector<long>& values) {
    if (static_cast<int>(values.size()) != f.vars() - 1)
        throw std::invalid_argument("specialize_q needs n-1 values");
    Polynomial out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        mpz_class scaled = c;
        for (std::size_t j = 0; j < e.q.size(); ++j) {
            for (int k = 0; k < e.q[j]; ++k)
                scaled *= values[j];
            if (scaled == 0)
                break;
        }
        if (scaled == 0)
            continue;
        Exponent t = e;
        std::fill(t.q.begin(), t.q.end(), 0);
        out.add_term(t, scaled);
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }
    mpz_class integer() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty())
            fail("expected integer");
        return mpz_class(digits);
    }
    int small_integer() {
        const mpz_class v = integer();
        if (!v.fits_sint_p())
            fail("index or exponent too large");
        return static_cast<int>(v.get_si());
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, int n) {
    Polynomial out(n);
    Cursor cur{text};
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.accept('+')) {
            sign = 1;
        } else if (cur.accept('-')) {
            sign = -1;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;

        mpz_class coeff = 1;
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.integer();
            if (!cur.accept('*')) {
                // bare integer term
                Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
                           std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
                out.add_term(e, sign * coeff);
                continue;
            }
        }
        Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
                   std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
        for (;;) {
            const char kind = cur.peek();
            if (kind != 'x' && kind != 'q')
                cur.fail("expected factor 'x<i>' or 'q<j>'");
            ++cur.pos;
            const int index = cur.small_integer();
            int exp = 1;
            if (cur.accept('^'))
                exp = cur.small_integer();
            if (exp < 0)
                cur.fail("negative exponent");
            if (kind == 'x') {
                if (index < 1 || index > n)
                    cur.fail("x index out of range");
                e.x[static_cast<std::size_t>(index) - 1] += exp;
            } else {
                if (index < 1 || index > n - 1)
                    cur.fail("q index out of range");
                e.q[static_cast<std::size_t>(index) - 1] += exp;
            }
            saw_factor = true;
            if (!cur.accept('*'))
                break;
        }
        if (!saw_factor)
            cur.fail("empty term");
        out.add_term(e, sign * coeff);
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative)
                out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const mpz_class mag = abs(c);
        std::string factors;
        for (std::size_t j = 0; j < e.q.size(); ++j) {
            if (e.q[j] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += 'q' + std::to_string(j + 1);
            if (e.q[j] > 1)
                factors += '^' + std::to_string(e.q[j]);
        }
        for (std::size_t i = 0; i < e.x.size(); ++i) {
            if (e.x[i] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += 'x' + std::to_string(i + 1);
            if (e.x[i] > 1)
                factors += '^' + std::to_string(e.x[i]);
        }
        if (factors.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += factors;
        } else {
            out += mag.get_str() + '*' + factors;
        }
    }
    return out;
}

} // namespace flagq
