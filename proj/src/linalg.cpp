#include "flagq/linalg.hpp"

#include <stdexcept>

namespace flagq::linalg {

RationalMatrix inverse(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("inverse requires a square matrix");

    RationalMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::invalid_argument("matrix is singular");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);

        const Rational scale = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= scale;
            inv[col][j] /= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0)
                continue;
            const Rational factor = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= factor * m[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<std::vector<mpz_class>> integer_inverse(const RationalMatrix& m) {
    const RationalMatrix inv = inverse(m);
    std::vector<std::vector<mpz_class>> out(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) {
        out[i].reserve(inv[i].size());
        for (const Rational& v : inv[i]) {
            if (v.get_den() != 1)
                throw std::logic_error("inverse expected to be integral");
            out[i].push_back(v.get_num());
        }
    }
    return out;
}

std::optional<std::vector<Rational>> solve_unique(const std::vector<std::vector<Rational>>& columns,
                                                  const std::vector<Rational>& rhs) {
    const std::size_t cols = columns.size();
    const std::size_t rows = rhs.size();
    for (const auto& c : columns)
        if (c.size() != rows)
            throw std::invalid_argument("column height does not match rhs");

    // augmented row-major [A | b]
    RationalMatrix a(rows, std::vector<Rational>(cols + 1, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            a[i][j] = columns[j][i];
    for (std::size_t i = 0; i < rows; ++i)
        a[i][cols] = rhs[i];

    std::vector<std::size_t> pivot_of_col(cols, rows);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[next_row]);
        const Rational scale = a[next_row][col];
        for (std::size_t j = col; j <= cols; ++j)
            a[next_row][j] /= scale;
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == next_row || a[row][col] == 0)
                continue;
            const Rational factor = a[row][col];
            for (std::size_t j = col; j <= cols; ++j)
                a[row][j] -= factor * a[next_row][j];
        }
        pivot_of_col[col] = next_row;
        ++next_row;
    }

    // underdetermined: some column has no pivot
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_of_col[col] == rows)
            return std::nullopt;
    // inconsistent: nonzero rhs below the pivot rows
    for (std::size_t row = next_row; row < rows; ++row)
        if (a[row][cols] != 0)
            return std::nullopt;

    std::vector<Rational> solution(cols, 0);
    for (std::size_t col = 0; col < cols; ++col)
        solution[col] = a[pivot_of_col[col]][cols];
    return solution;
}

void SparseEchelon::add_row(Row row) {
    row = reduce(std::move(row));
    if (row.empty())
        return;
    const int pivot = row.begin()->first;
    const Rational lead = row.begin()->second;
    for (auto& [col, v] : row)
        v /= lead;

    // keep the echelon fully reduced: clear the new pivot column everywhere
    for (auto& [p, existing] : pivot_rows_) {
        auto hit = existing.find(pivot);
        if (hit == existing.end())
            continue;
        const Rational factor = hit->second;
        for (const auto& [col, v] : row) {
            Rational& slot = existing[col];
            slot -= factor * v;
            if (slot == 0)
                existing.erase(col);
        }
    }
    pivot_rows_.emplace(pivot, std::move(row));
}

SparseEchelon::Row SparseEchelon::reduce(Row v) const {
    for (auto it = v.begin(); it != v.end();) {
        auto pivot_it = pivot_rows_.find(it->first);
        if (pivot_it == pivot_rows_.end()) {
            ++it;
            continue;
        }
        const Rational factor = it->second;
        for (const auto& [col, val] : pivot_it->second) {
            Rational& slot = v[col];
            slot -= factor * val;
            if (slot == 0)
                v.erase(col);
        }
        // the pivot entry itself is now zero; restart from the next column
        it = v.upper_bound(pivot_it->first);
    }
    return v;
}

} // namespace flagq::linalg
