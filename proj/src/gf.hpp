// Exact arithmetic in GF(p^e) for small prime powers (q <= 2^16).
//
// Elements are integer indices in [0, q): the base-p digits of the index,
// little-endian, are the coordinates with respect to 1, a, a^2, ... where a
// is a root of the modulus.  Multiplication goes through log/antilog tables
// for a fixed generator, so all operations are O(1) or O(e).

#ifndef FQ_GF_HPP
#define FQ_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "error.hpp"

namespace fq {

using Elem = std::uint16_t;

constexpr long long kMaxFieldSize = 1LL << 16;

class Field {
public:
    // Default modulus: the lexicographically smallest (by coefficient index,
    // constant term first) monic irreducible of degree e over GF(p).
    Field(int p, int e);
    Field(int p, int e, const std::vector<int>& modulus);

    int p() const { return core_->p; }
    int e() const { return core_->e; }
    long long q() const { return core_->q; }
    // length e+1, low-to-high, monic
    const std::vector<int>& modulus() const { return core_->modulus; }
    // smallest-index primitive element
    Elem generator() const { return core_->generator; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long k) const;
    // x^(p^k)
    Elem frobenius(Elem a, int k = 1) const;

    // 0, 1, ..., q-1
    std::vector<Elem> elements() const;

    bool operator==(const Field& o) const {
        return core_ == o.core_ ||
               (p() == o.p() && e() == o.e() && modulus() == o.modulus());
    }

private:
    struct Core {
        int p, e;
        long long q;
        std::vector<int> modulus;
        Elem generator;
        std::vector<Elem> antilog; // antilog[k] = g^k, k in [0, q-1); antilog[q-1] duplicates g^0
        std::vector<int> log;      // log[x] for x != 0; log[0] unused
    };
    std::shared_ptr<const Core> core_;

    void build_tables();
};

// Ring embedding GF(p^e) -> GF(p^(e*m)), determined by sending the source
// modulus root to its smallest-index root in the target field.
class Embedding {
public:
    Embedding(const Field& from, const Field& into);
    const Field& from() const { return from_; }
    const Field& into() const { return into_; }
    Elem operator()(Elem x) const;

private:
    Field from_, into_;
    std::vector<Elem> images_; // images of 1, a, a^2, ..., a^(e-1)
};

namespace gfpoly {
// Dense polynomials over GF(p), coefficients low-to-high, used for modulus
// validation and default-modulus search.  Exposed for tests.
using Poly = std::vector<int>;
Poly trim(Poly f);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, int p);
Poly powmod(Poly base, long long k, const Poly& mod, int p);
Poly gcd(Poly a, Poly b, int p);
bool is_irreducible(const Poly& f, int p);
Poly default_modulus(int p, int e);
} // namespace gfpoly

bool is_prime(long long n);

} // namespace fq

#endif
