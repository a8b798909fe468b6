#include "flagq/grobner.hpp"

#include "flagq/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flagq {

namespace {

Polynomial minor_determinant(const std::vector<std::vector<Polynomial>>& m,
                             const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols, int n) {
    if (rows.empty())
        return Polynomial::constant(n, 1);
    // Laplace expansion along the first remaining row.
    Polynomial out = Polynomial::zero(n);
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const Polynomial& entry = m[rows[0]][cols[t]];
        if (entry.is_zero())
            continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t s = 0; s < cols.size(); ++s)
            if (s != t)
                sub_cols.push_back(cols[s]);
        Polynomial piece = entry * minor_determinant(m, sub_rows, sub_cols, n);
        if (t % 2 == 0)
            out += piece;
        else
            out -= piece;
    }
    return out;
}

} // namespace

GroebnerBasis::GroebnerBasis(int n, bool classical_limit) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("Groebner basis requires n >= 1");
    // entries E_{j-i+1}^{n-i+1}, zero outside 0 <= i <= m
    std::vector<std::vector<Polynomial>> entries(
        static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial::zero(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int deg = j - i + 1;
            const int m = n - i + 1;
            if (deg >= 0 && deg <= m)
                entries[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
                    quantum_elementary(deg, m, n);
        }
    }
    gens_.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k));
        for (std::size_t t = 0; t < idx.size(); ++t)
            idx[t] = t;
        Polynomial g = minor_determinant(entries, idx, idx, n);
        if (classical_limit)
            g = specialize_q(g, std::vector<long>(static_cast<std::size_t>(n) - 1, 0));

        Exponent expected{std::vector<int>(static_cast<std::size_t>(n), 0),
                          std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
        expected.x[static_cast<std::size_t>(n - k + 1) - 1] = k;
        if (g.is_zero())
            throw std::logic_error("Groebner generator vanished");
        const auto& [lead, coeff] = g.leading_term();
        if (lead.x != expected.x || lead.qdeg() != 0 || (coeff != 1 && coeff != -1))
            throw std::logic_error("Groebner generator has unexpected leading term (term-order bug?)");
        if (coeff == -1)
            g = -std::move(g);
        gens_.push_back(std::move(g));
    }
}

namespace {

// Index of a generator whose leading monomial divides e, or 0 when e is
// already supported on staircase divisors. Returns the smallest such k.
int reducible_by(const Exponent& e, int n) {
    for (int v = n; v >= 1; --v) {
        const int k = n - v + 1;
        if (e.x[static_cast<std::size_t>(v) - 1] >= k)
            return k;
    }
    return 0;
}

} // namespace

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    if (f.vars() != n_)
        throw std::invalid_argument("polynomial over the wrong ring");
    Polynomial work = f;
    Polynomial reduced = Polynomial::zero(n_);
    while (!work.is_zero()) {
        auto [e, c] = work.extract_leading();
        const int k = reducible_by(e, n_);
        if (k == 0) {
            reduced.add_term(e, c);
            continue;
        }
        // replace the extracted term by -c x^quotient (g_k - lead g_k)
        const std::size_t v = static_cast<std::size_t>(n_ - k + 1) - 1;
        Exponent quotient = std::move(e);
        quotient.x[v] -= k;
        work.add_scaled(gens_[static_cast<std::size_t>(k) - 1], quotient, -c);
        quotient.x[v] += k;
        work.add_term(quotient, c);
    }
    return reduced;
}

Polynomial GroebnerBasis::normal_form_scheduled(
    const Polynomial& f, const std::function<std::size_t(std::size_t)>& pick) const {
    if (f.vars() != n_)
        throw std::invalid_argument("polynomial over the wrong ring");
    Polynomial work = f;
    for (;;) {
        // collect every (term, applicable k) pair
        std::vector<std::pair<Exponent, int>> moves;
        for (const auto& [e, c] : work.terms()) {
            for (int v = 1; v <= n_; ++v) {
                const int k = n_ - v + 1;
                if (e.x[static_cast<std::size_t>(v) - 1] >= k)
                    moves.emplace_back(e, k);
            }
        }
        if (moves.empty())
            return work;
        const auto& [e, k] = moves[pick(moves.size()) % moves.size()];
        const mpz_class c = work.coefficient(e);
        Exponent quotient = e;
        quotient.x[static_cast<std::size_t>(n_ - k + 1) - 1] -= k;
        work -= Polynomial::monomial(n_, std::move(quotient), c) * gens_[static_cast<std::size_t>(k) - 1];
    }
}

Polynomial GroebnerBasis::bracket(const Polynomial& f) const {
    const Polynomial nf = normal_form(f);
    const Exponent delta = staircase_exponent(n_);
    Polynomial out = Polynomial::zero(n_);
    for (const auto& [e, c] : nf.terms()) {
        if (e.x != delta.x)
            continue;
        Exponent qonly{std::vector<int>(static_cast<std::size_t>(n_), 0), e.q};
        out.add_term(qonly, c);
    }
    return out;
}

SpanProductTable::SpanProductTable(const GroebnerBasis& gb)
    : n_(gb.n()), dim_(staircase_monomial_count(gb.n())) {
    products_.resize(static_cast<std::size_t>(dim_) * (static_cast<std::size_t>(dim_) + 1) / 2,
                     Polynomial::zero(n_));
    brackets_.resize(products_.size(), Polynomial::zero(n_));

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(products_.size());
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            pairs.emplace_back(i, j);

    const Exponent delta = staircase_exponent(n_);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(pairs.size()); ++t) {
        const auto [i, j] = pairs[static_cast<std::size_t>(t)];
        Exponent e = staircase_monomial_at(i, n_);
        const Exponent ej = staircase_monomial_at(j, n_);
        for (std::size_t v = 0; v < e.x.size(); ++v)
            e.x[v] += ej.x[v];
        Polynomial nf = gb.normal_form(Polynomial::monomial(n_, std::move(e), 1));
        Polynomial br = Polynomial::zero(n_);
        for (const auto& [me, mc] : nf.terms())
            if (me.x == delta.x)
                br.add_term(Exponent{std::vector<int>(static_cast<std::size_t>(n_), 0), me.q}, mc);
        products_[slot(i, j)] = std::move(nf);
        brackets_[slot(i, j)] = std::move(br);
    }
}

std::size_t SpanProductTable::slot(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    // row-major upper triangle
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) -
           static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) - 1) / 2 +
           static_cast<std::size_t>(j - i);
}

const Polynomial& SpanProductTable::product(int i, int j) const {
    return products_[slot(i, j)];
}

const Polynomial& SpanProductTable::product_bracket(int i, int j) const {
    return brackets_[slot(i, j)];
}

Polynomial SpanProductTable::nf_product(const Polynomial& a, const Polynomial& b) const {
    if (a.vars() != n_ || b.vars() != n_)
        throw std::invalid_argument("polynomial over the wrong ring");
    Polynomial out = Polynomial::zero(n_);
    Exponent shift{std::vector<int>(static_cast<std::size_t>(n_), 0),
                   std::vector<int>(static_cast<std::size_t>(n_) - 1, 0)};
    for (const auto& [ea, ca] : a.terms()) {
        const int ia = staircase_monomial_index(ea, n_);
        for (const auto& [eb, cb] : b.terms()) {
            const int ib = staircase_monomial_index(eb, n_);
            for (std::size_t t = 0; t < shift.q.size(); ++t)
                shift.q[t] = ea.q[t] + eb.q[t];
            out.add_scaled(products_[slot(ia, ib)], shift, ca * cb);
        }
    }
    return out;
}

Polynomial SpanProductTable::bracket_product(const Polynomial& a, const Polynomial& b) const {
    if (a.vars() != n_ || b.vars() != n_)
        throw std::invalid_argument("polynomial over the wrong ring");
    Polynomial out = Polynomial::zero(n_);
    Exponent shift{std::vector<int>(static_cast<std::size_t>(n_), 0),
                   std::vector<int>(static_cast<std::size_t>(n_) - 1, 0)};
    for (const auto& [ea, ca] : a.terms()) {
        const int ia = staircase_monomial_index(ea, n_);
        for (const auto& [eb, cb] : b.terms()) {
            const Polynomial& br = brackets_[slot(ia, staircase_monomial_index(eb, n_))];
            if (br.is_zero())
                continue;
            for (std::size_t t = 0; t < shift.q.size(); ++t)
                shift.q[t] = ea.q[t] + eb.q[t];
            out.add_scaled(br, shift, ca * cb);
        }
    }
    return out;
}

QSchubertExpander::QSchubertExpander(const GroebnerBasis& gb, const QSchubertTable& qs)
    : gb_(gb), qs_(qs) {
    const int n = qs.n();
    const int dim = staircase_monomial_count(n);
    const auto& perms = qs.classical().permutations();

    linalg::RationalMatrix m(static_cast<std::size_t>(dim),
                             std::vector<linalg::Rational>(static_cast<std::size_t>(dim), 0));
    for (int col = 0; col < dim; ++col) {
        const Polynomial& p = qs.classical().poly(perms[static_cast<std::size_t>(col)]);
        for (const auto& [e, c] : p.terms())
            m[static_cast<std::size_t>(staircase_monomial_index(e, n))][static_cast<std::size_t>(col)] = c;
    }
    schubert_inverse_ = linalg::integer_inverse(m);

    qsw_components_.resize(static_cast<std::size_t>(dim));
    for (int col = 0; col < dim; ++col) {
        const Polynomial& p = qs.poly(perms[static_cast<std::size_t>(col)]);
        auto& comps = qsw_components_[static_cast<std::size_t>(col)];
        for (const auto& [e, c] : p.terms()) {
            auto [it, ignore] = comps.try_emplace(e.q, std::vector<mpz_class>(static_cast<std::size_t>(dim), 0));
            it->second[static_cast<std::size_t>(staircase_monomial_index(e, n))] = c;
        }
    }
}

std::map<Permutation, mpz_class> QSchubertExpander::expand_classical(const Polynomial& f) const {
    const int n = qs_.n();
    if (f.vars() != n)
        throw std::invalid_argument("polynomial over the wrong ring");
    if (!f.is_q_free() || !supported_on_staircase(f))
        throw std::invalid_argument("classical expansion requires a q-free staircase-supported input");
    const int dim = staircase_monomial_count(n);
    std::vector<mpz_class> coords(static_cast<std::size_t>(dim), 0);
    for (const auto& [e, c] : f.terms())
        coords[static_cast<std::size_t>(staircase_monomial_index(e, n))] = c;

    const auto& perms = qs_.classical().permutations();
    std::map<Permutation, mpz_class> out;
    for (int row = 0; row < dim; ++row) {
        mpz_class v = 0;
        for (int col = 0; col < dim; ++col)
            if (coords[static_cast<std::size_t>(col)] != 0)
                v += schubert_inverse_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                     coords[static_cast<std::size_t>(col)];
        if (v != 0)
            out.emplace(perms[static_cast<std::size_t>(row)], std::move(v));
    }
    return out;
}

std::map<Permutation, Polynomial> QSchubertExpander::expand(const Polynomial& f) const {
    const int n = qs_.n();
    if (f.vars() != n)
        throw std::invalid_argument("polynomial over the wrong ring");
    const int dim = staircase_monomial_count(n);
    const auto& perms = qs_.classical().permutations();
    const Polynomial nf = gb_.normal_form(f);

    // residual monomial coordinates per q-exponent
    std::map<std::vector<int>, std::vector<mpz_class>> pending;
    for (const auto& [e, c] : nf.terms()) {
        auto [it, ignore] = pending.try_emplace(e.q, std::vector<mpz_class>(static_cast<std::size_t>(dim), 0));
        it->second[static_cast<std::size_t>(staircase_monomial_index(e, n))] = c;
    }

    auto next_key = [&]() -> const std::vector<int>* {
        const std::vector<int>* best = nullptr;
        int best_total = 0;
        for (const auto& [key, coords] : pending) {
            const int total = std::accumulate(key.begin(), key.end(), 0);
            if (best == nullptr || total < best_total || (total == best_total && key < *best)) {
                best = &key;
                best_total = total;
            }
        }
        return best;
    };

    std::map<Permutation, Polynomial> result;
    while (const std::vector<int>* key = next_key()) {
        const std::vector<int> e = *key;
        const std::vector<mpz_class> coords = std::move(pending.at(e));
        pending.erase(e);

        // classical expansion of this component fixes the q^e coefficients
        std::vector<mpz_class> gamma(static_cast<std::size_t>(dim), 0);
        bool any = false;
        for (int row = 0; row < dim; ++row) {
            mpz_class v = 0;
            for (int col = 0; col < dim; ++col)
                if (coords[static_cast<std::size_t>(col)] != 0)
                    v += schubert_inverse_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                         coords[static_cast<std::size_t>(col)];
            if (v != 0)
                any = true;
            gamma[static_cast<std::size_t>(row)] = std::move(v);
        }
        if (!any)
            continue;

        for (int row = 0; row < dim; ++row) {
            const mpz_class& g = gamma[static_cast<std::size_t>(row)];
            if (g == 0)
                continue;
            const Permutation& w = perms[static_cast<std::size_t>(row)];
            auto [it, ignore] = result.try_emplace(w, Polynomial::zero(n));
            Exponent qmon{std::vector<int>(static_cast<std::size_t>(n), 0), e};
            it->second.add_term(qmon, g);

            // push the q-corrections of S^q_w into later components
            for (const auto& [qexp, comp] : qsw_components_[static_cast<std::size_t>(row)]) {
                if (std::all_of(qexp.begin(), qexp.end(), [](int v) { return v == 0; }))
                    continue;
                std::vector<int> shifted(qexp.size());
                for (std::size_t t = 0; t < qexp.size(); ++t)
                    shifted[t] = qexp[t] + e[t];
                auto [slot, ignore2] =
                    pending.try_emplace(shifted, std::vector<mpz_class>(static_cast<std::size_t>(dim), 0));
                for (int col = 0; col < dim; ++col)
                    slot->second[static_cast<std::size_t>(col)] -= g * comp[static_cast<std::size_t>(col)];
            }
        }
        // drop components that cancelled to zero
        for (auto it = pending.begin(); it != pending.end();) {
            const bool zero = std::all_of(it->second.begin(), it->second.end(),
                                          [](const mpz_class& v) { return v == 0; });
            it = zero ? pending.erase(it) : std::next(it);
        }
    }

    // exact reconstruction check
    Polynomial back = Polynomial::zero(n);
    for (const auto& [w, cw] : result)
        back += cw * qs_.poly(w);
    if (!(back == nf))
        throw std::logic_error("quantum Schubert expansion failed to reconstruct the input");
    return result;
}

GwContext::GwContext(int n_in)
    : n(n_in), qschubert(n_in), basis(n_in), expander(basis, qschubert), span(basis) {}

bool gw_dimension_condition(const Permutation& u, const Permutation& v, const Permutation& w,
                            const std::vector<int>& d) {
    const int n = u.size();
    int total = 0;
    for (int di : d) {
        if (di < 0)
            return false;
        total += di;
    }
    return u.length() + v.length() + w.length() == n * (n - 1) / 2 + 2 * total;
}

mpz_class gw_invariant(const std::vector<Permutation>& ws, const std::vector<int>& d,
                       const GwContext& ctx) {
    if (ws.size() < 3)
        throw std::invalid_argument("gw_invariant needs at least three permutations");
    if (static_cast<int>(d.size()) != ctx.n - 1)
        throw std::invalid_argument("degree vector must have n-1 entries");
    for (const Permutation& w : ws)
        if (w.size() != ctx.n)
            throw std::invalid_argument("permutation size does not match context");
    if (ws.size() == 3 && !gw_dimension_condition(ws[0], ws[1], ws[2], d))
        return 0;

    Polynomial product = ctx.qschubert.poly(ws[0]);
    for (std::size_t t = 1; t + 1 < ws.size(); ++t)
        product = ctx.span.nf_product(product, ctx.qschubert.poly(ws[t]));
    const Polynomial b = ctx.span.bracket_product(product, ctx.qschubert.poly(ws.back()));
    Exponent qmon{std::vector<int>(static_cast<std::size_t>(ctx.n), 0), d};
    return b.coefficient(qmon);
}

namespace {

std::vector<std::vector<int>> degrees_up_to(const std::vector<int>& max_d) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(max_d.size(), 0);
    for (;;) {
        out.push_back(d);
        std::size_t pos = max_d.size();
        while (pos > 0) {
            --pos;
            if (d[pos] < max_d[pos]) {
                ++d[pos];
                std::fill(d.begin() + static_cast<std::ptrdiff_t>(pos) + 1, d.end(), 0);
                break;
            }
            if (pos == 0)
                return out;
        }
        if (max_d.empty())
            return out;
    }
}

// results for one (u, v) pair, over all w >= v and all admissible d
void gw_pair_worker(const GwContext& ctx, const std::vector<Permutation>& perms, std::size_t iu,
                    std::size_t iv, const std::vector<std::vector<int>>& degrees,
                    std::vector<GwResult>& sink) {
    const Polynomial uv = ctx.span.nf_product(ctx.qschubert.poly(perms[iu]), ctx.qschubert.poly(perms[iv]));
    for (std::size_t iw = iv; iw < perms.size(); ++iw) {
        bool any = false;
        for (const auto& d : degrees)
            if (gw_dimension_condition(perms[iu], perms[iv], perms[iw], d)) {
                any = true;
                break;
            }
        if (!any)
            continue;
        const Polynomial b = ctx.span.bracket_product(uv, ctx.qschubert.poly(perms[iw]));
        for (const auto& d : degrees) {
            if (!gw_dimension_condition(perms[iu], perms[iv], perms[iw], d))
                continue;
            Exponent qmon{std::vector<int>(static_cast<std::size_t>(ctx.n), 0), d};
            sink.push_back(GwResult{perms[iu], perms[iv], perms[iw], d, b.coefficient(qmon)});
        }
    }
}

} // namespace

std::vector<GwResult> gw_table_serial(const GwContext& ctx, const std::vector<int>& max_d) {
    if (static_cast<int>(max_d.size()) != ctx.n - 1)
        throw std::invalid_argument("max_d must have n-1 entries");
    const std::vector<Permutation> perms = all_permutations(ctx.n);
    const auto degrees = degrees_up_to(max_d);
    std::vector<GwResult> out;
    for (std::size_t iu = 0; iu < perms.size(); ++iu)
        for (std::size_t iv = iu; iv < perms.size(); ++iv)
            gw_pair_worker(ctx, perms, iu, iv, degrees, out);
    return out;
}

std::vector<GwResult> gw_table(const GwContext& ctx, const std::vector<int>& max_d) {
    if (static_cast<int>(max_d.size()) != ctx.n - 1)
        throw std::invalid_argument("max_d must have n-1 entries");
    const std::vector<Permutation> perms = all_permutations(ctx.n);
    const auto degrees = degrees_up_to(max_d);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t iu = 0; iu < perms.size(); ++iu)
        for (std::size_t iv = iu; iv < perms.size(); ++iv)
            pairs.emplace_back(iu, iv);

    std::vector<std::vector<GwResult>> buckets(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(pairs.size()); ++t) {
        const auto [iu, iv] = pairs[static_cast<std::size_t>(t)];
        gw_pair_worker(ctx, perms, iu, iv, degrees, buckets[static_cast<std::size_t>(t)]);
    }

    std::vector<GwResult> out;
    for (auto& bucket : buckets)
        for (auto& r : bucket)
            out.push_back(std::move(r));
    return out;
}

} // namespace flagq
