#include "gauss.hpp"

namespace fq {

Echelon row_reduce(const Field& F, std::vector<std::vector<Elem>>& m) {
    Echelon ech;
    if (m.empty()) return ech;
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int i = row; i < nrows; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        const Elem s = F.inv(m[row][col]);
        for (int j = col; j < ncols; ++j) m[row][j] = F.mul(s, m[row][j]);
        for (int i = 0; i < nrows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Elem c = m[i][col];
            for (int j = col; j < ncols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(c, m[row][j]));
        }
        ech.pivots.push_back(col);
        ++row;
    }
    ech.rank = row;
    return ech;
}

int rank_of(const Field& F, std::vector<std::vector<Elem>> m) {
    return row_reduce(F, m).rank;
}

std::vector<std::vector<Elem>> nullspace(const Field& F, std::vector<std::vector<Elem>> m) {
    if (m.empty()) return {};
    const int ncols = static_cast<int>(m[0].size());
    const Echelon ech = row_reduce(F, m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : ech.pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(ncols, 0);
        v[free] = 1;
        for (int i = 0; i < ech.rank; ++i) {
            const int pc = ech.pivots[i];
            v[pc] = F.neg(m[i][free]); // row i: x_pc + sum over free cols = 0
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace fq
