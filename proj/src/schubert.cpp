#include "flagq/schubert.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagq {

Exponent staircase_exponent(int n) {
    Exponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n) - 1, 0)};
    for (int i = 1; i <= n; ++i)
        e.x[static_cast<std::size_t>(i) - 1] = n - i;
    return e;
}

Polynomial staircase_monomial(int n) {
    return Polynomial::monomial(n, staircase_exponent(n), 1);
}

bool divides_staircase(const Exponent& e, int n) {
    for (int i = 1; i <= n; ++i)
        if (e.x[static_cast<std::size_t>(i) - 1] > n - i)
            return false;
    return true;
}

bool supported_on_staircase(const Polynomial& f) {
    for (const auto& [e, c] : f.terms())
        if (!divides_staircase(e, f.vars()))
            return false;
    return true;
}

SchubertTable::SchubertTable(int n) : n_(n) {
    order_ = all_permutations(n);
    std::stable_sort(order_.begin(), order_.end(),
                     [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });

    table_.emplace(Permutation::longest_element(n), staircase_monomial(n));
    // Walk down in length: S_w = d_i S_{w s_i} at the leftmost ascent of w.
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        const Permutation& w = *it;
        if (table_.contains(w))
            continue;
        int ascent = 0;
        for (int i = 1; i < n; ++i) {
            if (w(i) < w(i + 1)) {
                ascent = i;
                break;
            }
        }
        const Permutation longer = w * Permutation::adjacent_transposition(ascent, n);
        auto up = table_.find(longer);
        if (up == table_.end())
            throw std::logic_error("weak-order walk visited a permutation before its cover");
        table_.emplace(w, divided_difference(ascent, up->second));
    }
}

const Polynomial& SchubertTable::poly(const Permutation& w) const {
    auto it = table_.find(w);
    if (it == table_.end())
        throw std::invalid_argument("permutation not in this table");
    return it->second;
}

Polynomial schubert_polynomial(const Permutation& w) {
    const int n = w.size();
    const Permutation rest = w.inverse() * Permutation::longest_element(n);
    return divided_difference_w(rest, staircase_monomial(n));
}

} // namespace flagq
