#include "flagq/quadratic.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagq {

NCElement::NCElement(int n) : n_(n) {
    if (n < 2)
        throw std::invalid_argument("quadratic algebra requires n >= 2");
}

NCElement NCElement::unit(int n) {
    NCElement e(n);
    e.terms_.emplace(Word{}, 1);
    return e;
}

NCElement NCElement::generator(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw std::invalid_argument("generator indices must be distinct and within 1..n");
    NCElement e(n);
    if (a < b)
        e.terms_.emplace(Word{Generator{a, b}}, 1);
    else
        e.terms_.emplace(Word{Generator{b, a}}, -1);
    return e;
}

void NCElement::add_term(const Word& w, const mpz_class& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

NCElement& NCElement::operator+=(const NCElement& other) {
    if (n_ != other.n_)
        throw std::invalid_argument("mixed quadratic algebras");
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& other) {
    if (n_ != other.n_)
        throw std::invalid_argument("mixed quadratic algebras");
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

NCElement& NCElement::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

NCElement operator*(const NCElement& a, const NCElement& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("mixed quadratic algebras");
    NCElement out(a.n_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

NCElement dunkl_element(int j, int n) {
    if (j < 1 || j > n)
        throw std::invalid_argument("dunkl index out of range");
    NCElement out(n);
    for (int i = 1; i < j; ++i)
        out.add_term(Word{Generator{i, j}}, -1);
    for (int k = j + 1; k <= n; ++k)
        out.add_term(Word{Generator{j, k}}, 1);
    return out;
}

NCElement dunkl_word_expansion(const Polynomial& f, int n) {
    if (f.vars() != n)
        throw std::invalid_argument("polynomial over the wrong ring");
    if (!f.is_q_free())
        throw std::invalid_argument("word expansion requires a q-free polynomial");
    NCElement out(n);
    for (const auto& [e, c] : f.terms()) {
        NCElement piece = NCElement::unit(n);
        piece *= c;
        for (int j = 1; j <= n; ++j)
            for (int t = 0; t < e.x[static_cast<std::size_t>(j) - 1]; ++t)
                piece = piece * dunkl_element(j, n);
        out += piece;
    }
    return out;
}

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("group algebra requires n >= 1");
}

GroupAlgebraElement GroupAlgebraElement::unit(const Permutation& w) {
    GroupAlgebraElement a(w.size());
    a.terms_.emplace(w, Polynomial::constant(w.size(), 1));
    return a;
}

Polynomial GroupAlgebraElement::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Polynomial::zero(n_) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& w, const Polynomial& coeff) {
    if (w.size() != n_ || coeff.vars() != n_)
        throw std::invalid_argument("size mismatch in group algebra term");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
    if (n_ != other.n_)
        throw std::invalid_argument("mixed group algebras");
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
    if (n_ != other.n_)
        throw std::invalid_argument("mixed group algebras");
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Polynomial& qpoly) const {
    GroupAlgebraElement out(n_);
    if (qpoly.is_zero())
        return out;
    for (const auto& [w, c] : terms_)
        out.add_term(w, c * qpoly);
    return out;
}

namespace {

Polynomial q_interval(int i, int j, int n) {
    // q_{ij} = q_i q_{i+1} ... q_{j-1}
    Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
    for (int t = i; t < j; ++t)
        e.q[static_cast<std::size_t>(t) - 1] = 1;
    return Polynomial::monomial(n, std::move(e), 1);
}

} // namespace

GroupAlgebraElement qbruhat_apply(const Generator& g, const GroupAlgebraElement& a) {
    const int n = a.n();
    if (g.i < 1 || g.j <= g.i || g.j > n)
        throw std::invalid_argument("generator indices out of range");
    GroupAlgebraElement out(n);
    for (const auto& [w, c] : a.terms()) {
        auto [moved, delta] = right_transposition(w, g.i, g.j);
        if (delta == 1)
            out.add_term(moved, c);
        else if (delta == -transposition_length(g.i, g.j))
            out.add_term(moved, c * q_interval(g.i, g.j, n));
    }
    return out;
}

GroupAlgebraElement bruhat_apply(const Generator& g, const GroupAlgebraElement& a) {
    const int n = a.n();
    if (g.i < 1 || g.j <= g.i || g.j > n)
        throw std::invalid_argument("generator indices out of range");
    GroupAlgebraElement out(n);
    for (const auto& [w, c] : a.terms()) {
        auto [moved, delta] = right_transposition(w, g.i, g.j);
        if (delta == 1)
            out.add_term(moved, c);
    }
    return out;
}

GroupAlgebraElement dunkl_apply(int j, const GroupAlgebraElement& a, bool quantum) {
    const int n = a.n();
    if (j < 1 || j > n)
        throw std::invalid_argument("dunkl index out of range");
    GroupAlgebraElement out(n);
    for (int i = 1; i < j; ++i) {
        const Generator g{i, j};
        out -= quantum ? qbruhat_apply(g, a) : bruhat_apply(g, a);
    }
    for (int k = j + 1; k <= n; ++k) {
        const Generator g{j, k};
        out += quantum ? qbruhat_apply(g, a) : bruhat_apply(g, a);
    }
    return out;
}

GroupAlgebraElement eval_at_dunkl(const Polynomial& f, const GroupAlgebraElement& a, bool quantum) {
    const int n = a.n();
    if (f.vars() != n)
        throw std::invalid_argument("polynomial over the wrong ring");
    GroupAlgebraElement out(n);
    for (const auto& [e, c] : f.terms()) {
        GroupAlgebraElement piece = a;
        for (int j = n; j >= 1; --j)
            for (int t = 0; t < e.x[static_cast<std::size_t>(j) - 1]; ++t)
                piece = dunkl_apply(j, piece, quantum);
        Exponent qmon{std::vector<int>(static_cast<std::size_t>(n), 0), e.q};
        out += piece.scaled(Polynomial::monomial(n, std::move(qmon), c));
    }
    return out;
}

mpz_class gw_via_bruhat(const Permutation& u, const Permutation& v, const Permutation& w,
                        const std::vector<int>& d, const QSchubertTable& qs) {
    const int n = qs.n();
    if (u.size() != n || v.size() != n || w.size() != n)
        throw std::invalid_argument("permutation size does not match table");
    if (static_cast<int>(d.size()) != n - 1)
        throw std::invalid_argument("degree vector must have n-1 entries");
    const GroupAlgebraElement image =
        eval_at_dunkl(qs.poly(u), GroupAlgebraElement::unit(v), /*quantum=*/true);
    const Polynomial coeff = image.coefficient(Permutation::longest_element(n) * w);
    Exponent qmon{std::vector<int>(static_cast<std::size_t>(n), 0), d};
    return coeff.coefficient(qmon);
}

namespace {

std::vector<Generator> all_generators(int n) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            gens.push_back(Generator{i, j});
    return gens;
}

// Defining relations of the classical quadratic algebra, expressed in the
// normalized generators: squares, the cyclic three-term relations, and the
// disjoint-support commutators.
std::vector<NCElement> defining_relations(int n) {
    std::set<std::map<Word, mpz_class>> seen;
    std::vector<NCElement> out;
    auto push = [&](NCElement r) {
        if (r.is_zero())
            return;
        // normalize the sign so r and -r do not both enter
        if (r.terms().begin()->second < 0)
            r *= -1;
        if (seen.insert(r.terms()).second)
            out.push_back(std::move(r));
    };

    const auto gens = all_generators(n);
    for (const Generator& g : gens) {
        NCElement sq = NCElement::generator(g.i, g.j, n) * NCElement::generator(g.i, g.j, n);
        push(std::move(sq));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                NCElement r = NCElement::generator(i, j, n) * NCElement::generator(j, k, n);
                r += NCElement::generator(j, k, n) * NCElement::generator(k, i, n);
                r += NCElement::generator(k, i, n) * NCElement::generator(i, j, n);
                push(std::move(r));
            }
    for (const Generator& g : gens)
        for (const Generator& h : gens) {
            if (g.i == h.i || g.i == h.j || g.j == h.i || g.j == h.j)
                continue;
            NCElement r = NCElement::generator(g.i, g.j, n) * NCElement::generator(h.i, h.j, n);
            r -= NCElement::generator(h.i, h.j, n) * NCElement::generator(g.i, g.j, n);
            push(std::move(r));
        }
    return out;
}

} // namespace

EnComponent::EnComponent(int n, int degree, EnLimits limits) : n_(n), degree_(degree) {
    if (n < 2 || degree < 0)
        throw std::invalid_argument("bad quadratic algebra component parameters");
    const auto gens = all_generators(n);

    double words_estimate = 1;
    for (int t = 0; t < degree; ++t)
        words_estimate *= static_cast<double>(gens.size());
    if (words_estimate > static_cast<double>(limits.max_words))
        throw std::invalid_argument("quadratic algebra component exceeds the word budget");

    // enumerate words of the given length, lexicographic
    Word current;
    auto emit = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == degree) {
            index_.emplace(current, static_cast<int>(words_.size()));
            words_.push_back(current);
            return;
        }
        for (const Generator& g : gens) {
            current.push_back(g);
            self(self);
            current.pop_back();
        }
    };
    emit(emit);

    const auto relations = defining_relations(n);
    double rows_estimate = 0;
    for (int left = 0; left + 2 <= degree; ++left) {
        double flank = 1;
        for (int t = 0; t < degree - 2; ++t)
            flank *= static_cast<double>(gens.size());
        rows_estimate += flank * static_cast<double>(relations.size());
    }
    if (rows_estimate > static_cast<double>(limits.max_rows))
        throw std::invalid_argument("quadratic algebra component exceeds the row budget");

    // rows u * r * v over all splits and flanking words
    std::vector<Word> lefts{Word{}};
    for (int left = 0; left + 2 <= degree; ++left) {
        const int right = degree - 2 - left;
        std::vector<Word> rights{Word{}};
        for (int t = 0; t < right; ++t) {
            std::vector<Word> next;
            for (const Word& w : rights)
                for (const Generator& g : gens) {
                    Word e = w;
                    e.push_back(g);
                    next.push_back(std::move(e));
                }
            rights = std::move(next);
        }
        for (const Word& u : lefts)
            for (const NCElement& r : relations)
                for (const Word& v : rights) {
                    linalg::SparseEchelon::Row row;
                    for (const auto& [mid, c] : r.terms()) {
                        Word full = u;
                        full.insert(full.end(), mid.begin(), mid.end());
                        full.insert(full.end(), v.begin(), v.end());
                        row[index_.at(full)] += linalg::Rational(c);
                    }
                    for (auto it = row.begin(); it != row.end();)
                        it = it->second == 0 ? row.erase(it) : std::next(it);
                    relations_.add_row(std::move(row));
                }
        // extend the left words by one letter for the next split
        std::vector<Word> next;
        for (const Word& w : lefts)
            for (const Generator& g : gens) {
                Word e = w;
                e.push_back(g);
                next.push_back(std::move(e));
            }
        lefts = std::move(next);
    }
}

int EnComponent::dimension() const {
    return static_cast<int>(words_.size()) - relations_.rank();
}

std::map<int, linalg::Rational> EnComponent::reduce(const NCElement& v) const {
    linalg::SparseEchelon::Row row;
    for (const auto& [w, c] : v.terms()) {
        if (static_cast<int>(w.size()) != degree_)
            throw std::invalid_argument("element is not homogeneous of the component degree");
        row[index_.at(w)] = linalg::Rational(c);
    }
    return relations_.reduce(std::move(row));
}

bool EnComponent::equal(const NCElement& a, const NCElement& b) const {
    NCElement diff = a;
    diff -= b;
    if (diff.is_zero())
        return true;
    return reduce(diff).empty();
}

bool en_equal(const NCElement& a, const NCElement& b, int n, EnLimits limits) {
    NCElement diff = a;
    diff -= b;
    if (diff.is_zero())
        return true;
    std::map<int, NCElement> by_degree;
    for (const auto& [w, c] : diff.terms()) {
        auto [it, ignore] = by_degree.try_emplace(static_cast<int>(w.size()), NCElement(n));
        it->second.add_term(w, c);
    }
    for (const auto& [deg, component] : by_degree) {
        EnComponent comp(n, deg, limits);
        if (!comp.reduce(component).empty())
            return false;
    }
    return true;
}

std::optional<std::map<Word, long>> nonneg_decompose(const Permutation& w, int n,
                                                     NonnegOptions options) {
    if (w.size() != n)
        throw std::invalid_argument("permutation size mismatch");
    const int degree = w.length();
    const EnComponent comp(n, degree, options.limits);

    const SchubertTable schub(n);
    const NCElement target = dunkl_word_expansion(schub.poly(w), n);
    const auto target_coords = comp.reduce(target);

    // candidate words with nonzero canonical coordinates
    struct Candidate {
        const Word* word;
        std::map<int, linalg::Rational> coords;
    };
    std::vector<Candidate> candidates;
    for (const Word& m : comp.words()) {
        NCElement e(n);
        e.add_term(m, 1);
        auto coords = comp.reduce(e);
        if (!coords.empty())
            candidates.push_back(Candidate{&m, std::move(coords)});
    }

    if (target_coords.empty())
        return std::map<Word, long>{}; // the zero class: the empty combination

    // every coordinate key that appears anywhere, for dense solving
    std::vector<int> keys;
    for (const auto& [k, v] : target_coords)
        keys.push_back(k);
    for (const auto& c : candidates)
        for (const auto& [k, v] : c.coords)
            keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    auto densify = [&](const std::map<int, linalg::Rational>& sparse) {
        std::vector<linalg::Rational> dense(keys.size(), 0);
        for (std::size_t t = 0; t < keys.size(); ++t) {
            auto it = sparse.find(keys[t]);
            if (it != sparse.end())
                dense[t] = it->second;
        }
        return dense;
    };
    const std::vector<linalg::Rational> rhs = densify(target_coords);
    std::vector<std::vector<linalg::Rational>> columns;
    columns.reserve(candidates.size());
    for (const auto& c : candidates)
        columns.push_back(densify(c.coords));

    const int max_support = std::min<int>(options.max_support, static_cast<int>(candidates.size()));
    std::vector<std::size_t> combo;
    std::optional<std::map<Word, long>> found;

    auto try_combo = [&]() -> bool {
        std::vector<std::vector<linalg::Rational>> sub;
        sub.reserve(combo.size());
        for (std::size_t idx : combo)
            sub.push_back(columns[idx]);
        auto solution = linalg::solve_unique(sub, rhs);
        if (!solution)
            return false;
        std::map<Word, long> cert;
        for (std::size_t t = 0; t < combo.size(); ++t) {
            const linalg::Rational& v = (*solution)[t];
            if (v.get_den() != 1)
                return false;
            const mpz_class num = v.get_num();
            if (num <= 0 || num > options.coefficient_bound)
                return false;
            cert.emplace(*candidates[combo[t]].word, static_cast<long>(num.get_si()));
        }
        found = std::move(cert);
        return true;
    };

    auto search = [&](auto&& self, std::size_t start, int remaining) -> bool {
        if (remaining == 0)
            return try_combo();
        for (std::size_t idx = start; idx < candidates.size(); ++idx) {
            combo.push_back(idx);
            if (self(self, idx + 1, remaining - 1))
                return true;
            combo.pop_back();
        }
        return false;
    };

    for (int support = 1; support <= max_support; ++support)
        if (search(search, 0, support))
            return found;
    return std::nullopt;
}

namespace {

GroupAlgebraElement signed_apply(int a, int b, const GroupAlgebraElement& elem, bool quantum) {
    auto apply = [&](const Generator& g, const GroupAlgebraElement& x) {
        return quantum ? qbruhat_apply(g, x) : bruhat_apply(g, x);
    };
    if (a < b)
        return apply(Generator{a, b}, elem);
    GroupAlgebraElement out = apply(Generator{b, a}, elem);
    GroupAlgebraElement zero(elem.n());
    return zero - out;
}

} // namespace

RelationReport check_representation_relations(int n, bool quantum) {
    RelationReport report;
    const auto perms = all_permutations(n);
    const auto gens = all_generators(n);
    auto fail = [&](const std::string& what) {
        report.ok = false;
        if (report.counterexample.empty())
            report.counterexample = what;
    };

    for (const Permutation& w : perms) {
        const GroupAlgebraElement a = GroupAlgebraElement::unit(w);
        for (const Generator& g : gens) {
            GroupAlgebraElement twice = signed_apply(g.i, g.j, signed_apply(g.i, g.j, a, quantum), quantum);
            GroupAlgebraElement expected(n);
            if (quantum && g.j == g.i + 1)
                expected = a.scaled(Polynomial::q(g.i, n));
            if (!(twice == expected))
                fail("square relation at [" + std::to_string(g.i) + " " + std::to_string(g.j) +
                     "] on " + to_string(w));
        }
        for (int i = 1; i <= n && report.ok; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (i == j || j == k || i == k)
                        continue;
                    GroupAlgebraElement sum =
                        signed_apply(i, j, signed_apply(j, k, a, quantum), quantum);
                    sum += signed_apply(j, k, signed_apply(k, i, a, quantum), quantum);
                    sum += signed_apply(k, i, signed_apply(i, j, a, quantum), quantum);
                    if (!sum.is_zero())
                        fail("three-term relation at (" + std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(k) + ") on " + to_string(w));
                }
        for (const Generator& g : gens)
            for (const Generator& h : gens) {
                if (g.i == h.i || g.i == h.j || g.j == h.i || g.j == h.j)
                    continue;
                GroupAlgebraElement gh = signed_apply(g.i, g.j, signed_apply(h.i, h.j, a, quantum), quantum);
                GroupAlgebraElement hg = signed_apply(h.i, h.j, signed_apply(g.i, g.j, a, quantum), quantum);
                if (!(gh == hg))
                    fail("commutation at [" + std::to_string(g.i) + " " + std::to_string(g.j) + "],[" +
                         std::to_string(h.i) + " " + std::to_string(h.j) + "] on " + to_string(w));
            }
    }
    return report;
}

NCElement parse_word_sum(std::string_view text, int n) {
    NCElement out(n);
    std::size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto parse_int = [&]() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty())
            throw std::invalid_argument("word parse error: expected integer");
        return std::stol(digits);
    };

    bool first = true;
    for (;;) {
        skip_ws();
        if (pos >= text.size())
            break;
        int sign = 1;
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("word parse error: expected '+' or '-'");
        }
        first = false;
        skip_ws();
        mpz_class coeff = 1;
        bool saw_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_int();
            saw_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*')
                ++pos;
        }
        Word w;
        skip_ws();
        if (pos >= text.size() || text[pos] != '[') {
            if (saw_coeff) {
                // bare integer term: a multiple of the empty word
                out.add_term(Word{}, sign * coeff);
                continue;
            }
            throw std::invalid_argument("word parse error: expected '['");
        }
        while (pos < text.size() && text[pos] == '[') {
            ++pos;
            const long a = parse_int();
            const long b = parse_int();
            skip_ws();
            if (pos >= text.size() || text[pos] != ']')
                throw std::invalid_argument("word parse error: expected ']'");
            ++pos;
            if (a < 1 || b < 1 || a > n || b > n || a == b)
                throw std::invalid_argument("word parse error: bad generator indices");
            if (a < b) {
                w.push_back(Generator{static_cast<int>(a), static_cast<int>(b)});
            } else {
                w.push_back(Generator{static_cast<int>(b), static_cast<int>(a)});
                sign = -sign;
            }
            skip_ws();
        }
        out.add_term(w, sign * coeff);
    }
    return out;
}

std::string to_string(const NCElement& v) {
    if (v.is_zero())
        return "0";
    std::string out;
    for (const auto& [w, c] : v.terms()) {
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative)
                out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const mpz_class mag = abs(c);
        std::string body;
        for (const Generator& g : w)
            body += "[" + std::to_string(g.i) + " " + std::to_string(g.j) + "]";
        if (body.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += body;
        } else {
            out += mag.get_str() + "*" + body;
        }
    }
    return out;
}

std::string to_string(const GroupAlgebraElement& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& [w, c] : a.terms()) {
        if (!out.empty())
            out += " + ";
        const std::string coeff = to_string(c);
        if (coeff == "1") {
            out += "(" + to_string(w) + ")";
        } else if (c.term_count() > 1 || coeff.front() == '-') {
            out += "(" + coeff + ")*(" + to_string(w) + ")";
        } else {
            out += coeff + "*(" + to_string(w) + ")";
        }
    }
    return out;
}

} // namespace flagq
