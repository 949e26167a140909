#include "gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fq {

const char* err_name(Err k) {
    switch (k) {
        case Err::composite_p: return "CompositeP";
        case Err::non_monic_modulus: return "NonMonicModulus";
        case Err::reducible_modulus: return "ReducibleModulus";
        case Err::field_too_large: return "FieldTooLarge";
        case Err::division_by_zero: return "DivisionByZero";
        case Err::incompatible_fields: return "IncompatibleFields";
        case Err::zero_vector: return "ZeroVector";
        case Err::dimension_mismatch: return "DimensionMismatch";
        case Err::wrong_span_dimension: return "WrongSpanDimension";
        case Err::empty_set: return "EmptySet";
        case Err::non_homogeneous: return "NonHomogeneous";
        case Err::not_linear: return "NotLinear";
        case Err::unsupported_ambient: return "UnsupportedAmbient";
        case Err::truncation_mismatch: return "TruncationMismatch";
        case Err::no_points_retained: return "NoPointsRetained";
        case Err::nonpositive_denominator: return "NonpositiveDenominator";
        case Err::point_not_in_set: return "PointNotInSet";
        case Err::all_series_zero: return "AllSeriesZero";
        case Err::zero_covector: return "ZeroCovector";
        case Err::insufficient_precision: return "InsufficientPrecision";
        case Err::unknown_catalog_entry: return "UnknownCatalogEntry";
        case Err::scan_too_large: return "ScanTooLarge";
        case Err::validation_failure: return "ValidationFailure";
        case Err::chart_degenerate: return "ChartDegenerate";
        case Err::parse_error: return "ParseError";
        case Err::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace gfpoly {

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

static int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

static int inv_mod_p(int a, int p) {
    int r = 1, b = a % p, k = p - 2;
    while (k) {
        if (k & 1) r = static_cast<int>(1LL * r * b % p);
        b = static_cast<int>(1LL * b * b % p);
        k >>= 1;
    }
    return r;
}

static Poly mod(Poly f, const Poly& m, int p) {
    const int dm = deg(m);
    const int lead_inv = inv_mod_p(m.back(), p);
    while (deg(f) >= dm) {
        if (f.back() == 0) { f.pop_back(); continue; }
        const int c = static_cast<int>(1LL * f.back() * lead_inv % p);
        const int shift = deg(f) - dm;
        for (int i = 0; i <= dm; ++i)
            f[shift + i] = static_cast<int>(((f[shift + i] - 1LL * c * m[i]) % p + p) % p);
        f.pop_back();
    }
    return trim(std::move(f));
}

static Poly mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
    }
    return trim(std::move(r));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    return mod(mul(a, b, p), m, p);
}

Poly powmod(Poly base, long long k, const Poly& m, int p) {
    Poly r = {1};
    base = mod(std::move(base), m, p);
    while (k) {
        if (k & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        k >>= 1;
    }
    return r;
}

Poly gcd(Poly a, Poly b, int p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) { // make monic
        const int li = inv_mod_p(a.back(), p);
        for (int& c : a) c = static_cast<int>(1LL * c * li % p);
    }
    return a;
}

// Trial division by every monic polynomial of degree <= e/2.  Only used for
// e <= 4, where the divisor space is tiny.
static bool irreducible_by_trial_division(const Poly& f, int p) {
    const int e = deg(f);
    for (int dd = 1; dd <= e / 2; ++dd) {
        std::vector<int> tail(dd, 0);
        while (true) {
            Poly div(tail.begin(), tail.end());
            div.push_back(1);
            if (mod(f, div, p).empty()) return false;
            int i = dd - 1;
            while (i >= 0 && tail[i] == p - 1) tail[i--] = 0;
            if (i < 0) break;
            ++tail[i];
        }
    }
    return true;
}

// Rabin: f (degree e) is irreducible iff x^(p^e) = x mod f and
// gcd(x^(p^(e/l)) - x, f) = 1 for every prime l | e.
static bool irreducible_by_rabin(const Poly& f, int p) {
    const int e = deg(f);
    const Poly x = {0, 1};
    auto x_pow_p_tower = [&](int k) { // x^(p^k) mod f
        Poly r = x;
        for (int i = 0; i < k; ++i) r = powmod(r, p, f, p);
        return r;
    };
    Poly xq = x_pow_p_tower(e);
    if (trim(xq) != trim(x) && !(xq.empty() && x.empty())) {
        Poly diff = xq;
        diff.resize(std::max(diff.size(), x.size()), 0);
        diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
        if (!trim(diff).empty()) return false;
    }
    int rem = e;
    for (int l = 2; l <= rem; ++l) {
        if (rem % l != 0) continue;
        while (rem % l == 0) rem /= l;
        Poly xe = x_pow_p_tower(e / l);
        Poly diff = xe;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
        if (deg(gcd(trim(diff), f, p)) != 0) return false;
    }
    return true;
}

bool is_irreducible(const Poly& f, int p) {
    const int e = deg(f);
    if (e < 1) return false;
    if (e == 1) return true;
    return e <= 4 ? irreducible_by_trial_division(f, p) : irreducible_by_rabin(f, p);
}

Poly default_modulus(int p, int e) {
    if (e == 1) return {0, 1};
    // Odometer over (c0, ..., c_{e-1}) with the last coefficient fastest gives
    // lexicographic order with c0 most significant.
    std::vector<int> tail(e, 0);
    while (true) {
        Poly f(tail.begin(), tail.end());
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
        int i = e - 1;
        while (i >= 0 && tail[i] == p - 1) tail[i--] = 0;
        if (i < 0) break;
        ++tail[i];
    }
    throw Error(Err::reducible_modulus, "no irreducible polynomial found (internal)");
}

} // namespace gfpoly

Field::Field(int p, int e) {
    if (!is_prime(p)) throw Error(Err::composite_p, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error(Err::invalid_argument, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw Error(Err::field_too_large, "p^e exceeds 2^16");
    }
    auto core = std::make_shared<Core>();
    core->p = p;
    core->e = e;
    core->q = q;
    core->modulus = gfpoly::default_modulus(p, e);
    core_ = std::move(core);
    build_tables();
}

Field::Field(int p, int e, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw Error(Err::composite_p, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error(Err::invalid_argument, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw Error(Err::field_too_large, "p^e exceeds 2^16");
    }
    if (static_cast<int>(modulus.size()) != e + 1 || modulus.back() != 1)
        throw Error(Err::non_monic_modulus, "modulus must be monic of degree e");
    for (int c : modulus)
        if (c < 0 || c >= p)
            throw Error(Err::non_monic_modulus, "modulus coefficients must lie in [0, p)");
    if (!gfpoly::is_irreducible(modulus, p))
        throw Error(Err::reducible_modulus, "modulus is reducible over GF(p)");
    auto core = std::make_shared<Core>();
    core->p = p;
    core->e = e;
    core->q = q;
    core->modulus = modulus;
    core_ = std::move(core);
    build_tables();
}

namespace {

// Index <-> digit helpers (digits little-endian base p).
inline void digits_of(long long x, int p, int e, int* out) {
    for (int i = 0; i < e; ++i) { out[i] = static_cast<int>(x % p); x /= p; }
}

inline long long index_of(const int* d, int p, int e) {
    long long x = 0;
    for (int i = e - 1; i >= 0; --i) x = x * p + d[i];
    return x;
}

// Multiplication by polynomial arithmetic; only used while building tables.
Elem slow_mul(const std::vector<int>& modulus, int p, int e, Elem a, Elem b) {
    int da[17], db[17];
    digits_of(a, p, e, da);
    digits_of(b, p, e, db);
    int prod[33] = {0};
    for (int i = 0; i < e; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < e; ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + 1LL * da[i] * db[j]) % p);
    }
    for (int k = 2 * e - 2; k >= e; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i <= e; ++i)
            prod[k - e + i] = static_cast<int>(((prod[k - e + i] - 1LL * c * modulus[i]) % p + p) % p);
    }
    return static_cast<Elem>(index_of(prod, p, e));
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

void Field::build_tables() {
    auto core = std::const_pointer_cast<Core>(core_);
    const int p = core->p, e = core->e;
    const long long q = core->q;
    const auto& m = core->modulus;

    auto order_is_full = [&](Elem g, const std::vector<long long>& fac) {
        for (long long l : fac) {
            Elem r = 1, base = g;
            long long k = (q - 1) / l;
            while (k) {
                if (k & 1) r = slow_mul(m, p, e, r, base);
                base = slow_mul(m, p, e, base, base);
                k >>= 1;
            }
            if (r == 1) return false;
        }
        return true;
    };

    const auto fac = prime_factors(q - 1);
    Elem gen = 1;
    if (q > 2) {
        for (Elem g = 2; g < q; ++g) {
            if (order_is_full(g, fac)) { gen = g; break; }
        }
    }
    core->generator = gen;

    core->antilog.resize(q);
    core->log.assign(q, 0);
    Elem cur = 1;
    for (long long k = 0; k < q - 1; ++k) {
        core->antilog[k] = cur;
        core->log[cur] = static_cast<int>(k);
        cur = slow_mul(m, p, e, cur, gen);
    }
    core->antilog[q - 1] = 1; // wrap, so antilog[log a + log b] needs no reduction for q-1 <= sum
}

Elem Field::add(Elem a, Elem b) const {
    const int p = core_->p, e = core_->e;
    if (p == 2) return a ^ b;
    int da[17], db[17];
    digits_of(a, p, e, da);
    digits_of(b, p, e, db);
    for (int i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
    return static_cast<Elem>(index_of(da, p, e));
}

Elem Field::neg(Elem a) const {
    const int p = core_->p, e = core_->e;
    if (p == 2) return a;
    int d[17];
    digits_of(a, p, e, d);
    for (int i = 0; i < e; ++i) d[i] = (p - d[i]) % p;
    return static_cast<Elem>(index_of(d, p, e));
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const long long s = core_->log[a] + core_->log[b];
    const long long n = core_->q - 1;
    return core_->antilog[s >= n ? s - n : s];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(Err::division_by_zero, "inverse of 0");
    const long long n = core_->q - 1;
    return core_->antilog[(n - core_->log[a]) % n];
}

Elem Field::pow(Elem a, long long k) const {
    const long long n = core_->q - 1;
    if (a == 0) {
        if (k > 0) return 0;
        if (k == 0) return 1;
        throw Error(Err::division_by_zero, "0 raised to a negative power");
    }
    long long kk = k % n;
    if (kk < 0) kk += n;
    return core_->antilog[core_->log[a] * kk % n];
}

Elem Field::frobenius(Elem a, int k) const {
    if (k < 0) throw Error(Err::invalid_argument, "frobenius exponent must be >= 0");
    if (a == 0) return 0;
    const long long n = core_->q - 1;
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk = pk * core_->p % n;
    return core_->antilog[core_->log[a] * pk % n];
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> v(core_->q);
    std::iota(v.begin(), v.end(), static_cast<Elem>(0));
    return v;
}

Embedding::Embedding(const Field& from, const Field& into) : from_(from), into_(into) {
    if (from.p() != into.p() || into.e() % from.e() != 0)
        throw Error(Err::incompatible_fields,
                    "no embedding GF(" + std::to_string(from.q()) + ") -> GF(" +
                        std::to_string(into.q()) + ")");
    // Locate the smallest-index root of the source modulus in the target.
    const auto& m = from.modulus();
    Elem root = 0;
    bool found = false;
    for (long long y = 0; y < into.q(); ++y) {
        Elem acc = 0, ypow = 1;
        const Elem ye = static_cast<Elem>(y);
        for (size_t i = 0; i < m.size(); ++i) {
            acc = into.add(acc, into.mul(static_cast<Elem>(m[i]), ypow));
            ypow = into.mul(ypow, ye);
        }
        if (acc == 0) { root = ye; found = true; break; }
    }
    if (!found)
        throw Error(Err::incompatible_fields, "source modulus has no root in target field");
    images_.resize(from.e());
    Elem cur = 1;
    for (int i = 0; i < from.e(); ++i) {
        images_[i] = cur;
        cur = into.mul(cur, root);
    }
}

Elem Embedding::operator()(Elem x) const {
    const int p = from_.p(), e = from_.e();
    int d[17];
    digits_of(x, p, e, d);
    Elem acc = 0;
    for (int i = 0; i < e; ++i) {
        Elem c = static_cast<Elem>(d[i]); // prime-field scalar: index c is c*1
        acc = into_.add(acc, into_.mul(c, images_[i]));
    }
    return acc;
}

} // namespace fq
