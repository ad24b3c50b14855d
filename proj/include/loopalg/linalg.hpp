#pragma once
#include <map>
#include <vector>

#include "loopalg/rational.hpp"

namespace loopalg {

using RatMatrix = std::vector<std::vector<Rat>>;

// In-place reduced row echelon form; returns the pivot column indices in
// increasing order. Exact arithmetic, deterministic pivot choice (first
// nonzero in column order).
std::vector<int> rref(RatMatrix &m);

int rank(RatMatrix m);

// Basis of {x : m x = 0}, one vector per free column, in the standard RREF
// parametrization (free variable set to 1). Deterministic.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix &m, int ncols);

// Incremental echelon of sparse rows; cheap rank and membership queries for
// large sparse spanning families.
class RowSpan {
public:
    using SparseRow = std::map<std::size_t, Rat>;

    // Returns true if the row enlarged the span.
    bool add(SparseRow row);
    // Residual of `row` after elimination; empty iff row is in the span.
    SparseRow reduce(SparseRow row) const;
    bool contains(SparseRow row) const { return reduce(std::move(row)).empty(); }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    // keyed by leading column; rows normalized to leading coefficient 1
    std::map<std::size_t, SparseRow> pivots_;
};

} // namespace loopalg
