#include "projspace.hpp"

#include <algorithm>

#include "gauss.hpp"

namespace fq {

long long geom_sum(long long q, int top) {
    long long s = 0, pw = 1;
    for (int i = 0; i <= top; ++i) {
        s += pw;
        pw *= q;
    }
    return s;
}

ProjPoint normalize(const Field& F, std::vector<Elem> coords) {
    size_t lead = coords.size();
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) { lead = i; break; }
    if (lead == coords.size())
        throw Error(Err::zero_vector, "cannot normalize the zero vector");
    if (coords[lead] != 1) {
        const Elem s = F.inv(coords[lead]);
        for (auto& x : coords) x = F.mul(s, x);
    }
    return ProjPoint{std::move(coords)};
}

static std::vector<std::vector<Elem>> enum_normalized(int r, const Field& F) {
    if (r < 1) throw Error(Err::invalid_argument, "r must be >= 1");
    const long long q = F.q();
    long long total = 1;
    for (int i = 0; i <= r; ++i) {
        total *= q;
        if (total > (1LL << 31))
            throw Error(Err::scan_too_large, "PG(r,q) too large to enumerate");
    }
    std::vector<std::vector<Elem>> out;
    out.reserve(static_cast<size_t>(geom_sum(q, r)));
    for (int lead = 0; lead <= r; ++lead) {
        const int tail = r - lead;
        std::vector<Elem> v(r + 1, 0);
        v[lead] = 1;
        while (true) {
            out.push_back(v);
            int i = r;
            while (i > lead && v[i] == q - 1) v[i--] = 0;
            if (i == lead) break;
            ++v[i];
        }
    }
    return out;
}

std::vector<ProjPoint> enum_points(int r, const Field& F) {
    std::vector<ProjPoint> pts;
    for (auto& v : enum_normalized(r, F)) pts.push_back(ProjPoint{std::move(v)});
    return pts;
}

std::vector<Hyperplane> enum_hyperplanes(int r, const Field& F) {
    std::vector<Hyperplane> hs;
    for (auto& v : enum_normalized(r, F)) hs.push_back(Hyperplane{std::move(v)});
    return hs;
}

long long enum_index(const Field& F, const std::vector<Elem>& v) {
    const long long q = F.q();
    const int r = static_cast<int>(v.size()) - 1;
    int lead = 0;
    while (lead <= r && v[lead] == 0) ++lead;
    if (lead > r) throw Error(Err::zero_vector, "zero vector has no enumeration index");
    // positions before class `lead`: sum of q^(r-k) for k < lead
    long long base = 0, pw = 1;
    std::vector<long long> qpow(r + 1);
    for (int i = 0; i <= r; ++i) { qpow[i] = pw; pw *= q; }
    for (int k = 0; k < lead; ++k) base += qpow[r - k];
    long long off = 0;
    for (int i = lead + 1; i <= r; ++i) off = off * q + v[i];
    return base + off;
}

bool incident(const Field& F, const ProjPoint& P, const Hyperplane& H) {
    if (P.c.size() != H.c.size())
        throw Error(Err::dimension_mismatch, "point and hyperplane dimensions differ");
    Elem acc = 0;
    for (size_t i = 0; i < P.c.size(); ++i) acc = F.add(acc, F.mul(P.c[i], H.c[i]));
    return acc == 0;
}

std::vector<Hyperplane> hyperplanes_through(const Field& F, const ProjPoint& P) {
    const int r = static_cast<int>(P.c.size()) - 1;
    std::vector<Hyperplane> out;
    for (auto& H : enum_hyperplanes(r, F))
        if (incident(F, P, H)) out.push_back(std::move(H));
    return out;
}

std::vector<Hyperplane> pencil_through_flat(const Field& F, const std::vector<ProjPoint>& flat) {
    if (flat.empty()) throw Error(Err::empty_set, "flat has no points");
    const int r = static_cast<int>(flat[0].c.size()) - 1;
    std::vector<std::vector<Elem>> m;
    for (const auto& P : flat) {
        if (static_cast<int>(P.c.size()) != r + 1)
            throw Error(Err::dimension_mismatch, "mixed ambient dimensions in flat");
        m.push_back(P.c);
    }
    if (rank_of(F, m) != r - 1)
        throw Error(Err::wrong_span_dimension, "flat must span projective dimension r-2");
    const auto ns = nullspace(F, m); // two covector basis rows
    std::vector<Hyperplane> out;
    const long long q = F.q();
    for (long long t = 0; t < q; ++t) {
        std::vector<Elem> w(r + 1);
        for (int i = 0; i <= r; ++i)
            w[i] = F.add(ns[0][i], F.mul(static_cast<Elem>(t), ns[1][i]));
        out.push_back(Hyperplane{normalize(F, std::move(w)).c});
    }
    out.push_back(Hyperplane{normalize(F, ns[1]).c});
    std::sort(out.begin(), out.end(), [&](const Hyperplane& a, const Hyperplane& b) {
        return enum_index(F, a.c) < enum_index(F, b.c);
    });
    return out;
}

int span_dim(const Field& F, const std::vector<ProjPoint>& points) {
    if (points.empty()) throw Error(Err::empty_set, "span of an empty point set");
    std::vector<std::vector<Elem>> m;
    for (const auto& P : points) m.push_back(P.c);
    return rank_of(F, m) - 1;
}

} // namespace fq
