#include "loopalg/linalg.hpp"

namespace loopalg {

std::vector<int> rref(RatMatrix &m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int sel = -1;
        for (int r = row; r < nrows; ++r)
            if (m[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        const Rat inv = 1 / m[row][col];
        for (int c = col; c < ncols; ++c)
            if (m[row][c] != 0) m[row][c] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int c = col; c < ncols; ++c)
                if (m[row][c] != 0) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix &m, int ncols) {
    RatMatrix r = m;
    if (r.empty()) r.emplace_back(ncols, Rat(0));
    const std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

RowSpan::SparseRow RowSpan::reduce(SparseRow row) const {
    while (!row.empty()) {
        auto lead = row.begin();
        auto it = pivots_.find(lead->first);
        if (it == pivots_.end()) break;
        const Rat f = lead->second;
        for (const auto &[col, val] : it->second) {
            auto &entry = row[col];
            entry -= f * val;
            if (entry == 0) row.erase(col);
        }
    }
    return row;
}

bool RowSpan::add(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const Rat inv = 1 / row.begin()->second;
    for (auto &[col, val] : row) val *= inv;
    const std::size_t lead = row.begin()->first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

} // namespace loopalg
