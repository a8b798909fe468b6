#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagq/linalg.hpp"
#include "flagq/permutation.hpp"
#include "flagq/polynomial.hpp"
#include "flagq/quantize.hpp"

namespace flagq {

// Generator [i j] of the quadratic algebra, stored with i < j; an input
// [j i] is normalized to -[i j] by the callers that need it.
struct Generator {
    int i = 0;
    int j = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

// Integer combination of words in the generators: an element of the free
// cover of the quadratic algebra.
class NCElement {
public:
    explicit NCElement(int n);

    static NCElement unit(int n); // the empty word
    // [a b] with arbitrary order of a, b; [b a] enters as -[a b].
    static NCElement generator(int a, int b, int n);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, mpz_class>& terms() const { return terms_; }

    void add_term(const Word& w, const mpz_class& c);

    NCElement& operator+=(const NCElement& other);
    NCElement& operator-=(const NCElement& other);
    NCElement& operator*=(const mpz_class& c);

    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    friend NCElement operator*(NCElement a, const mpz_class& c) { return a *= c; }
    friend NCElement operator*(const NCElement& a, const NCElement& b); // word concatenation

    friend bool operator==(const NCElement&, const NCElement&) = default;

private:
    int n_;
    std::map<Word, mpz_class> terms_;
};

// theta_j = -sum_{i<j} [i j] + sum_{j<k} [j k] in the free cover.
NCElement dunkl_element(int j, int n);

// f(theta_1,...,theta_n) expanded in the free cover; f must be q-free.
NCElement dunkl_word_expansion(const Polynomial& f, int n);

// Finite formal sum of permutations with coefficients in Z[q]; the carrier
// of the (quantum) Bruhat representation.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n);
    static GroupAlgebraElement unit(const Permutation& w);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, Polynomial>& terms() const { return terms_; }

    Polynomial coefficient(const Permutation& w) const;
    void add_term(const Permutation& w, const Polynomial& coeff); // coeff in q only

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a += b;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a -= b;
    }
    GroupAlgebraElement scaled(const Polynomial& qpoly) const;

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    int n_;
    std::map<Permutation, Polynomial> terms_;
};

// Quantum Bruhat operator: w s_{ij} when the length rises by one,
// q_i...q_{j-1} w s_{ij} when it drops by exactly length(t_{ij}), else 0.
GroupAlgebraElement qbruhat_apply(const Generator& g, const GroupAlgebraElement& a);

// Classical Bruhat operator: only the length-raising case survives.
GroupAlgebraElement bruhat_apply(const Generator& g, const GroupAlgebraElement& a);

GroupAlgebraElement dunkl_apply(int j, const GroupAlgebraElement& a, bool quantum = true);

// f(theta_1,...,theta_n) applied to a, monomial by monomial; coefficients of
// f may involve q.
GroupAlgebraElement eval_at_dunkl(const Polynomial& f, const GroupAlgebraElement& a,
                                  bool quantum = true);

// Coefficient of q^d at the permutation w_o w in S^q_u(theta) v. Agrees with
// the Groebner-route invariant on every query.
mpz_class gw_via_bruhat(const Permutation& u, const Permutation& v, const Permutation& w,
                        const std::vector<int>& d, const QSchubertTable& qs);

struct EnLimits {
    std::size_t max_words = 50000;
    std::size_t max_rows = 400000;
};

// One graded component of the classical quadratic algebra: the span of the
// two-sided relation products inside the degree-deg words, held as a reduced
// echelon so that elements reduce to canonical coordinates.
class EnComponent {
public:
    EnComponent(int n, int degree, EnLimits limits = {});

    int n() const { return n_; }
    int degree() const { return degree_; }
    int dimension() const;
    const std::vector<Word>& words() const { return words_; }

    // canonical coordinates modulo the relation span (sparse, by word index)
    std::map<int, linalg::Rational> reduce(const NCElement& v) const;
    bool equal(const NCElement& a, const NCElement& b) const;

private:
    int n_;
    int degree_;
    std::vector<Word> words_;
    std::map<Word, int> index_;
    linalg::SparseEchelon relations_;
};

// Per-degree equality in the classical quadratic algebra; the difference is
// split into graded components.
bool en_equal(const NCElement& a, const NCElement& b, int n, EnLimits limits = {});

struct NonnegOptions {
    long coefficient_bound = 3;
    int max_support = 6;
    EnLimits limits;
};

// Searches for nonnegative integers c_m with sum c_m m = S_w(theta) in the
// classical quadratic algebra, over words m of length l(w) in the i < j
// generators, scanning supports of increasing size. Exhaustive within the
// bounds; a nullopt result does not refute existence of a certificate.
std::optional<std::map<Word, long>> nonneg_decompose(const Permutation& w, int n,
                                                     NonnegOptions options = {});

struct RelationReport {
    bool ok = true;
    std::string counterexample;
};

// Verifies, on every basis permutation, that the (quantum) Bruhat operators
// satisfy the defining relations, with [i,i+1]^2 acting as q_i in the
// quantum case and all squares vanishing classically.
RelationReport check_representation_relations(int n, bool quantum);

// Word/certificate text format: "[1 2][1 3] + 2*[2 3]".
NCElement parse_word_sum(std::string_view text, int n);
std::string to_string(const NCElement& v);
std::string to_string(const GroupAlgebraElement& a);

} // namespace flagq
