// Points, hyperplanes and incidence in PG(r,q).
//
// Both points and hyperplanes are normalized homogeneous (co)vectors: the
// first nonzero coordinate equals 1.  Enumeration order is: vectors whose
// first nonzero coordinate sits at position 0 first, then position 1, and so
// on; within a class, lexicographic by element index.

#ifndef FQ_PROJSPACE_HPP
#define FQ_PROJSPACE_HPP

#include <functional>
#include <vector>

#include "gf.hpp"

namespace fq {

struct ProjPoint {
    std::vector<Elem> c;
    bool operator==(const ProjPoint& o) const = default;
    auto operator<=>(const ProjPoint& o) const = default;
};

struct Hyperplane {
    std::vector<Elem> c;
    bool operator==(const Hyperplane& o) const = default;
    auto operator<=>(const Hyperplane& o) const = default;
};

// q^top + q^(top-1) + ... + 1; the number of points of PG(top, q).
long long geom_sum(long long q, int top);

ProjPoint normalize(const Field& F, std::vector<Elem> coords);

std::vector<ProjPoint> enum_points(int r, const Field& F);
std::vector<Hyperplane> enum_hyperplanes(int r, const Field& F);

// Position of v in the enumeration order, in [0, geom_sum(q, r)).
long long enum_index(const Field& F, const std::vector<Elem>& v);

bool incident(const Field& F, const ProjPoint& P, const Hyperplane& H);

std::vector<Hyperplane> hyperplanes_through(const Field& F, const ProjPoint& P);

// All q+1 hyperplanes containing a codimension-2 flat given extensionally.
std::vector<Hyperplane> pencil_through_flat(const Field& F, const std::vector<ProjPoint>& flat);

// Projective dimension of the linear span.
int span_dim(const Field& F, const std::vector<ProjPoint>& points);

} // namespace fq

#endif
