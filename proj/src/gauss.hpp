// Row reduction over GF(q).  Shared by the incidence geometry (ranks,
// nullspaces) and the order-sequence pivot extraction.

#ifndef FQ_GAUSS_HPP
#define FQ_GAUSS_HPP

#include <vector>

#include "gf.hpp"

namespace fq {

struct Echelon {
    int rank = 0;
    std::vector<int> pivots; // pivot column indices, increasing
};

// Reduces m in place to reduced row-echelon form.
Echelon row_reduce(const Field& F, std::vector<std::vector<Elem>>& m);

int rank_of(const Field& F, std::vector<std::vector<Elem>> m);

// Basis of the right nullspace {v : m v = 0}, as rows.  Deterministic: free
// columns in increasing order, each with its free coordinate set to 1.
std::vector<std::vector<Elem>> nullspace(const Field& F, std::vector<std::vector<Elem>> m);

} // namespace fq

#endif
