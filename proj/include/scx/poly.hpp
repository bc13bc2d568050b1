#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scx/error.hpp"
#include "scx/field.hpp"
#include "scx/intmath.hpp"

namespace scx {

/// Monic polynomial x^D + a_1 x^{D-1} + ... + a_D over a finite field.
/// Stored little-endian as canonical indices: coeff(i) is the coefficient
/// of x^i for i < D; the leading coefficient is implicit.
class Polynomial {
public:
    Polynomial(Field field, std::vector<u64> lower_coeffs)
        : field_(std::move(field)), lower_(std::move(lower_coeffs)) {
        if (lower_.empty()) fail(errc::bad_argument, "polynomial degree must be >= 1");
        for (u64 c : lower_)
            if (c >= field_.q()) fail(errc::bad_argument, "coefficient index outside the field");
    }

    /// Build from the descending coefficient list a_1, ..., a_D.
    static Polynomial from_descending(Field field, const std::vector<u64>& a) {
        return Polynomial(std::move(field), std::vector<u64>(a.rbegin(), a.rend()));
    }

    const Field& field() const { return field_; }
    unsigned degree() const { return static_cast<unsigned>(lower_.size()); }

    u64 coeff(unsigned i) const {
        if (i > degree()) fail(errc::index_out_of_range, "coefficient index beyond degree");
        return i == degree() ? field_.one() : lower_[i];
    }

    /// Coefficient a_i in the descending convention x^D + a_1 x^{D-1} + ... + a_D.
    u64 a(unsigned i) const {
        if (i < 1 || i > degree()) fail(errc::index_out_of_range, "a_i index outside [1, D]");
        return lower_[degree() - i];
    }

    const std::vector<u64>& lower_coeffs() const { return lower_; }

    std::vector<u64> descending_coeffs() const {
        return std::vector<u64>(lower_.rbegin(), lower_.rend());
    }

    bool all_coeffs_nonzero() const {
        return std::none_of(lower_.begin(), lower_.end(), [](u64 c) { return c == 0; });
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return f.field_.same_field(g.field_) && f.lower_ == g.lower_;
    }

    std::string to_string() const {
        std::ostringstream os;
        const unsigned d = degree();
        os << "x^" << d;
        for (unsigned i = d; i-- > 0;) {
            if (lower_[i] == 0) continue;
            os << " + ";
            if (lower_[i] != 1 || i == 0) os << lower_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }

private:
    Field field_;
    std::vector<u64> lower_;
};

namespace detail {

// Dense polynomial arithmetic over field canonical indices, little-endian,
// not necessarily monic. Vectors carry no trailing zeros.

using PolyVec = std::vector<u64>;

inline void pv_trim(PolyVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline PolyVec pv_mul(const Field& f, const PolyVec& a, const PolyVec& b) {
    if (a.empty() || b.empty()) return {};
    PolyVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

// reduce a modulo the monic polynomial m (given by its lower coefficients)
inline PolyVec pv_mod_monic(const Field& f, PolyVec a, const PolyVec& m_lower) {
    const std::size_t d = m_lower.size();
    pv_trim(a);
    while (a.size() > d) {
        u64 c = a.back();
        std::size_t shift = a.size() - 1 - d;
        if (c != 0)
            for (std::size_t j = 0; j < d; ++j)
                if (m_lower[j] != 0) a[shift + j] = f.sub(a[shift + j], f.mul(c, m_lower[j]));
        a.pop_back();
        pv_trim(a);
    }
    return a;
}

inline PolyVec pv_mulmod(const Field& f, const PolyVec& a, const PolyVec& b, const PolyVec& m_lower) {
    return pv_mod_monic(f, pv_mul(f, a, b), m_lower);
}

inline PolyVec pv_powmod(const Field& f, PolyVec base, u64 exp, const PolyVec& m_lower) {
    PolyVec r{f.one()};
    base = pv_mod_monic(f, std::move(base), m_lower);
    while (exp > 0) {
        if (exp & 1) r = pv_mulmod(f, r, base, m_lower);
        exp >>= 1;
        if (exp > 0) base = pv_mulmod(f, base, base, m_lower);
    }
    return r;
}

inline PolyVec pv_sub(const Field& f, PolyVec a, const PolyVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    pv_trim(a);
    return a;
}

// gcd up to a unit; result is made monic (empty result means gcd = 0)
inline PolyVec pv_gcd(const Field& f, PolyVec a, PolyVec b) {
    pv_trim(a);
    pv_trim(b);
    while (!b.empty()) {
        // remainder of a mod b after making b monic
        u64 lead_inv = f.inv(b.back());
        PolyVec bm = b;
        for (auto& c : bm) c = f.mul(c, lead_inv);
        PolyVec lower(bm.begin(), bm.end() - 1);
        a = pv_mod_monic(f, std::move(a), lower);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != f.one()) {
        u64 lead_inv = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, lead_inv);
    }
    return a;
}

inline u64 pv_eval(const Field& f, const PolyVec& a, u64 x) {
    u64 r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

// full coefficient vector of a monic Polynomial, little-endian
inline PolyVec pv_of(const Polynomial& f) {
    PolyVec v = f.lower_coeffs();
    v.push_back(f.field().one());
    return v;
}

// Enumerate all q^D lower-coefficient vectors of monic degree-D polynomials,
// odometer order (coeff of x^0 fastest). Stops early when fn returns false.
inline void for_each_monic(const Field& field, unsigned D,
                           const std::function<bool(const std::vector<u64>&)>& fn) {
    std::vector<u64> lower(D, 0);
    const u64 q = field.q();
    for (;;) {
        if (!fn(lower)) return;
        unsigned i = 0;
        while (i < D && ++lower[i] == q) lower[i++] = 0;
        if (i == D) return;
    }
}

}  // namespace detail

/// Standard finite-field irreducibility criterion: f (degree D) is
/// irreducible over GF(q) iff x^(q^D) == x (mod f) and, for every prime t
/// dividing D, gcd(x^(q^(D/t)) - x, f) = 1.
inline bool is_irreducible(const Polynomial& f) {
    const Field& F = f.field();
    const unsigned D = f.degree();
    const detail::PolyVec x{0, 1};
    const detail::PolyVec& m = f.lower_coeffs();

    const detail::PolyVec xr = detail::pv_mod_monic(F, x, m);
    detail::PolyVec xq = detail::pv_powmod(F, x, checked_pow(F.q(), D), m);
    if (detail::pv_sub(F, xq, xr) != detail::PolyVec{}) return false;
    for (u64 t : factorize(D).primes()) {
        detail::PolyVec xe = detail::pv_powmod(F, x, checked_pow(F.q(), D / t), m);
        detail::PolyVec g = detail::pv_gcd(F, detail::pv_sub(F, std::move(xe), xr), detail::pv_of(f));
        if (g.size() != 1) return false;
    }
    return true;
}

/// f is primitive iff it is irreducible and x has multiplicative order
/// q^D - 1 modulo f, tested against the prime factors of q^D - 1.
inline bool is_primitive(const Polynomial& f) {
    if (!is_irreducible(f)) return false;
    const Field& F = f.field();
    const u64 m = checked_pow(F.q(), f.degree()) - 1;
    const detail::PolyVec x{0, 1};
    const detail::PolyVec one{F.one()};
    const detail::PolyVec& mod = f.lower_coeffs();

    if (detail::pv_powmod(F, x, m, mod) != one) return false;
    for (u64 r : factorize(m).primes())
        if (detail::pv_powmod(F, x, m / r, mod) == one) return false;
    return true;
}

constexpr u64 kEnumerationGuard = 1'000'000;

/// Exhaustive count of monic primitive polynomials of degree D over the
/// field (the enumeration is guarded at 10^6 candidates).
inline u64 count_primitive(const Field& field, unsigned D) {
    if (D < 1) fail(errc::bad_argument, "degree must be >= 1");
    if (checked_pow(field.q(), D) > kEnumerationGuard)
        fail(errc::too_large, "q^D exceeds the enumeration guard of 10^6");
    u64 count = 0;
    detail::for_each_monic(field, D, [&](const std::vector<u64>& lower) {
        if (is_primitive(Polynomial(field, lower))) ++count;
        return true;
    });
    return count;
}

/// Same enumeration restricted to polynomials with all of a_1..a_D nonzero.
inline u64 count_primitive_all_nonzero(const Field& field, unsigned D) {
    if (D < 1) fail(errc::bad_argument, "degree must be >= 1");
    if (checked_pow(field.q(), D) > kEnumerationGuard)
        fail(errc::too_large, "q^D exceeds the enumeration guard of 10^6");
    u64 count = 0;
    detail::for_each_monic(field, D, [&](const std::vector<u64>& lower) {
        Polynomial f(field, lower);
        if (f.all_coeffs_nonzero() && is_primitive(f)) ++count;
        return true;
    });
    return count;
}

/// Lexicographically smallest monic primitive polynomial of degree D,
/// coefficient tuples (a_1, ..., a_D) compared by canonical index.
inline Polynomial find_primitive(const Field& field, unsigned D) {
    if (D < 1) fail(errc::bad_argument, "degree must be >= 1");
    const u64 q = field.q();
    std::vector<u64> a(D, 0);
    for (;;) {
        Polynomial f = Polynomial::from_descending(field, a);
        if (is_primitive(f)) return f;
        unsigned i = D;
        while (i > 0 && ++a[i - 1] == q) a[--i] = 0;
        if (i == 0) break;
    }
    fail(errc::not_found, "no primitive polynomial of degree " + std::to_string(D) + " over GF(" +
                              std::to_string(q) + ")");  // unreachable for valid fields
}

/// Deterministic search for the lexicographically smallest monic primitive
/// polynomial of degree D with every coefficient a_1..a_D nonzero; the
/// coefficient tuples (a_1, ..., a_D) are compared by canonical index.
inline Polynomial find_primitive_all_nonzero(const Field& field, unsigned D) {
    if (D < 1) fail(errc::bad_argument, "degree must be >= 1");
    const u64 q = field.q();
    std::vector<u64> a(D, 1);  // descending coefficients a_1..a_D, all nonzero
    for (;;) {
        Polynomial f = Polynomial::from_descending(field, a);
        if (is_primitive(f)) return f;
        // next tuple in lex order, digits over [1, q-1], a_D fastest
        unsigned i = D;
        while (i > 0 && ++a[i - 1] == q) a[--i] = 1;
        if (i == 0) break;
    }
    fail(errc::not_found, "no primitive polynomial of degree " + std::to_string(D) + " over GF(" +
                              std::to_string(q) + ") has all coefficients nonzero");
}

}  // namespace scx
