#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace flagq::linalg {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact Gauss-Jordan inverse of a square matrix.
// Throws std::invalid_argument if singular.
RationalMatrix inverse(RationalMatrix m);

// Inverse with every entry asserted integral; std::logic_error otherwise.
std::vector<std::vector<mpz_class>> integer_inverse(const RationalMatrix& m);

// Unique solution of the (possibly overdetermined) system A c = b, columns of
// A given separately. Returns nullopt when inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_unique(const std::vector<std::vector<Rational>>& columns,
                                                  const std::vector<Rational>& rhs);

// Incremental reduced row echelon form over Q for sparse rows, supporting
// canonical reduction of vectors modulo the accumulated row span.
class SparseEchelon {
public:
    using Row = std::map<int, Rational>;

    void add_row(Row row);
    Row reduce(Row v) const;
    bool contains(Row v) const { return reduce(std::move(v)).empty(); }
    int rank() const { return static_cast<int>(pivot_rows_.size()); }

private:
    // keyed by pivot column; rows are fully inter-reduced, pivot entry 1
    std::map<int, Row> pivot_rows_;
};

} // namespace flagq::linalg
