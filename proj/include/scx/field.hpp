#pragma once

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "scx/error.hpp"
#include "scx/intmath.hpp"

namespace scx {

class FieldElement;

namespace detail {

// Polynomial helpers over GF(p) (p prime), used to bootstrap extension
// fields. Coefficient vectors are little-endian: v[i] is the coefficient
// of x^i. These are deliberately independent of the generic irreducibility
// test in poly.hpp, which can then be cross-checked against them.

inline void pf_trim(std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// remainder of a mod b, b nonzero, all coefficients reduced mod p
inline std::vector<u64> pf_rem(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    pf_trim(a);
    const std::size_t db = b.size() - 1;
    // b is monic by construction everywhere this is called
    while (a.size() > db) {
        u64 c = a.back();
        if (c != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j < db; ++j) {
                u64 sub = (c * b[j]) % p;
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
        }
        a.pop_back();
        pf_trim(a);
        if (a.size() <= db) break;
    }
    return a;
}

// irreducibility over GF(p) by exhaustive trial division (monic divisors
// of degree 1..deg/2); fine at the field sizes this library constructs
inline bool pf_irreducible(const std::vector<u64>& monic, u64 p) {
    const std::size_t deg = monic.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    if (monic[0] == 0) return false;  // divisible by x
    std::vector<u64> divisor;
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        u64 count = checked_pow(p, dd);
        divisor.assign(dd + 1, 0);
        divisor[dd] = 1;
        for (u64 lower = 0; lower < count; ++lower) {
            u64 rest = lower;
            for (std::size_t i = 0; i < dd; ++i) {
                divisor[i] = rest % p;
                rest /= p;
            }
            if (pf_rem(monic, divisor, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Immutable description of GF(q), q = p^k. For k >= 2, `modulus` holds the
/// lower coefficients c_0..c_{k-1} of the monic irreducible x^k + sum c_i x^i
/// over GF(p); it is empty for prime fields.
struct FieldData {
    u64 p = 0;
    unsigned k = 1;
    u64 q = 0;
    std::vector<u64> modulus;

    bool same_spec(const FieldData& o) const {
        return p == o.p && k == o.k && modulus == o.modulus;
    }
};

/// Handle to a finite field GF(q). All arithmetic is exposed twice: on
/// canonical indices (the integer encoding sum coeffs[i]*p^i, used by file
/// formats, the CLI, and hot loops) and on FieldElement values (explicit
/// residue vectors). Fields are immutable and safe to share across threads.
class Field {
public:
    explicit Field(std::shared_ptr<const FieldData> data) : data_(std::move(data)) {}

    u64 p() const { return data_->p; }
    unsigned extension_degree() const { return data_->k; }
    u64 q() const { return data_->q; }
    const std::vector<u64>& modulus_coeffs() const { return data_->modulus; }
    const std::shared_ptr<const FieldData>& data() const { return data_; }

    bool same_field(const Field& o) const { return data_->same_spec(*o.data_); }

    // --- canonical-index arithmetic ---

    u64 zero() const { return 0; }
    u64 one() const { return 1; }

    u64 add(u64 a, u64 b) const {
        check_index(a);
        check_index(b);
        if (data_->k == 1) return madd(a, b, data_->p);
        std::vector<u64> x = decode(a), y = decode(b);
        for (unsigned i = 0; i < data_->k; ++i) x[i] = madd(x[i], y[i], data_->p);
        return encode(x);
    }

    u64 neg(u64 a) const {
        check_index(a);
        if (data_->k == 1) return a == 0 ? 0 : data_->p - a;
        std::vector<u64> x = decode(a);
        for (auto& c : x) c = (c == 0 ? 0 : data_->p - c);
        return encode(x);
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul(u64 a, u64 b) const {
        check_index(a);
        check_index(b);
        if (data_->k == 1) return mulmod(a, b, data_->p);
        std::vector<u64> x = decode(a), y = decode(b);
        const unsigned k = data_->k;
        const u64 p = data_->p;
        std::vector<u64> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < k; ++j)
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        }
        // reduce by x^k == -modulus
        for (unsigned i = 2 * k - 2; i >= k; --i) {
            u64 c = prod[i];
            if (c != 0) {
                prod[i] = 0;
                for (unsigned j = 0; j < k; ++j) {
                    u64 sub = (c * data_->modulus[j]) % p;
                    prod[i - k + j] = (prod[i - k + j] + p - sub) % p;
                }
            }
        }
        prod.resize(k);
        return encode(prod);
    }

    u64 pow(u64 a, u64 e) const {
        check_index(a);
        u64 r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return r;
    }

    u64 inv(u64 a) const {
        check_index(a);
        if (a == 0) fail(errc::division_by_zero, "inverse of zero in GF(" + std::to_string(q()) + ")");
        return pow(a, data_->q - 2);
    }

    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

    // --- element encoding ---

    std::vector<u64> decode(u64 index) const {
        check_index(index);
        std::vector<u64> c(data_->k);
        for (unsigned i = 0; i < data_->k; ++i) {
            c[i] = index % data_->p;
            index /= data_->p;
        }
        return c;
    }

    u64 encode(const std::vector<u64>& coeffs) const {
        if (coeffs.size() != data_->k)
            fail(errc::bad_argument, "coefficient vector has wrong length for this field");
        u64 index = 0;
        for (unsigned i = data_->k; i-- > 0;) {
            if (coeffs[i] >= data_->p) fail(errc::bad_argument, "coefficient not reduced mod p");
            index = index * data_->p + coeffs[i];
        }
        return index;
    }

    FieldElement element(u64 index) const;
    FieldElement element_from_coeffs(std::vector<u64> coeffs) const;

    std::string describe() const {
        std::ostringstream os;
        os << "GF(" << q() << ")";
        if (data_->k >= 2) {
            os << " = GF(" << p() << ")[x]/(x^" << data_->k;
            for (unsigned i = data_->k; i-- > 0;) {
                if (data_->modulus[i] == 0) continue;
                os << " + ";
                if (data_->modulus[i] != 1 || i == 0) os << data_->modulus[i];
                if (i >= 1) os << "x";
                if (i >= 2) os << "^" << i;
            }
            os << ")";
        }
        return os.str();
    }

private:
    static u64 madd(u64 a, u64 b, u64 p) {
        u64 s = a + b;  // p < 2^63 so no overflow
        return s >= p ? s - p : s;
    }
    static u64 mulmod(u64 a, u64 b, u64 p) {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
    }
    void check_index(u64 a) const {
        if (a >= data_->q) fail(errc::index_out_of_range, "canonical index " + std::to_string(a) +
                                                              " outside [0, " + std::to_string(data_->q) + ")");
    }

    std::shared_ptr<const FieldData> data_;
};

/// A field element as an explicit residue vector (little-endian polynomial
/// representation over GF(p); a single residue for prime fields).
class FieldElement {
public:
    FieldElement(std::shared_ptr<const FieldData> data, std::vector<u64> coeffs)
        : data_(std::move(data)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != data_->k) fail(errc::bad_argument, "residue vector has wrong length");
        for (u64 c : coeffs_)
            if (c >= data_->p) fail(errc::bad_argument, "residue not reduced mod p");
    }

    const std::vector<u64>& coeffs() const { return coeffs_; }
    Field field() const { return Field(data_); }

    u64 canonical_index() const {
        u64 index = 0;
        for (unsigned i = static_cast<unsigned>(coeffs_.size()); i-- > 0;)
            index = index * data_->p + coeffs_[i];
        return index;
    }

    bool is_zero() const {
        for (u64 c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return a.binop(b, [](const Field& f, u64 x, u64 y) { return f.add(x, y); });
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return a.binop(b, [](const Field& f, u64 x, u64 y) { return f.sub(x, y); });
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        return a.binop(b, [](const Field& f, u64 x, u64 y) { return f.mul(x, y); });
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a.binop(b, [](const Field& f, u64 x, u64 y) { return f.div(x, y); });
    }
    FieldElement operator-() const {
        Field f(data_);
        return f.element(f.neg(canonical_index()));
    }
    FieldElement inverse() const {
        Field f(data_);
        return f.element(f.inv(canonical_index()));
    }
    FieldElement pow(u64 e) const {
        Field f(data_);
        return f.element(f.pow(canonical_index(), e));
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    template <typename Op>
    FieldElement binop(const FieldElement& o, Op op) const {
        check_same(o);
        Field f(data_);
        return f.element(op(f, canonical_index(), o.canonical_index()));
    }
    void check_same(const FieldElement& o) const {
        if (!data_->same_spec(*o.data_))
            fail(errc::field_mismatch, "operands live in different fields");
    }

    std::shared_ptr<const FieldData> data_;
    std::vector<u64> coeffs_;
};

inline FieldElement Field::element(u64 index) const { return FieldElement(data_, decode(index)); }

inline FieldElement Field::element_from_coeffs(std::vector<u64> coeffs) const {
    return FieldElement(data_, std::move(coeffs));
}

inline u64 canonical_index(const FieldElement& a) { return a.canonical_index(); }

inline FieldElement element_of_index(const Field& f, u64 index) { return f.element(index); }

/// Construct GF(q). q must be a prime power; for k >= 2 the extension
/// modulus is the lexicographically smallest monic irreducible of degree k
/// over GF(p), coefficients compared low-degree first.
inline Field make_field(u64 q) {
    if (q < 2) fail(errc::not_prime_power, std::to_string(q) + " is not a prime power (need q >= 2)");
    if (q > (u64{1} << 62)) fail(errc::too_large, "field order exceeds the supported range");
    FactoredInteger f = factorize(q);
    if (f.factors.size() != 1)
        fail(errc::not_prime_power, std::to_string(q) + " has more than one prime factor");
    auto data = std::make_shared<FieldData>();
    data->p = f.factors[0].first;
    data->k = f.factors[0].second;
    data->q = q;
    if (data->k >= 2) {
        if (q > (u64{1} << 20))
            fail(errc::too_large, "extension field GF(" + std::to_string(q) + ") exceeds the construction guard");
        const u64 p = data->p;
        const unsigned k = data->k;
        std::vector<u64> cand(k + 1, 0);
        cand[k] = 1;
        bool found = false;
        // low-degree-first lexicographic order: c_0 is the most significant digit
        for (u64 j = 0; j < q && !found; ++j) {
            u64 rest = j;
            for (unsigned i = k; i-- > 0;) {
                cand[k - 1 - i] = rest / checked_pow(p, i) % p;
                rest %= checked_pow(p, i);
            }
            if (detail::pf_irreducible(cand, p)) {
                data->modulus.assign(cand.begin(), cand.begin() + k);
                found = true;
            }
        }
        if (!found)
            fail(errc::construction_check_failed, "no irreducible modulus found");  // cannot happen
    }
    return Field(std::move(data));
}

}  // namespace scx
