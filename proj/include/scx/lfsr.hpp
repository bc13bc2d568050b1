#pragma once

#include <string>
#include <vector>

#include "scx/error.hpp"
#include "scx/field.hpp"
#include "scx/intmath.hpp"
#include "scx/poly.hpp"

namespace scx {

namespace detail {

inline void check_seed(const Polynomial& poly, const std::vector<u64>& seed) {
    if (seed.size() != poly.degree())
        fail(errc::bad_argument, "seed length must equal the polynomial degree");
    bool nonzero = false;
    for (u64 s : seed) {
        if (s >= poly.field().q()) fail(errc::index_out_of_range, "seed entry outside the field");
        if (s != 0) nonzero = true;
    }
    if (!nonzero) fail(errc::zero_seed, "seed must be a nonzero vector");
}

// u_{n+D} = -(a_1 u_{n+D-1} + ... + a_D u_n); with f = x^D + sum a_i x^{D-i}
// this is u_{n+D} = -sum_j coeff(j) u_{n+j}.
inline u64 lfsr_step(const Polynomial& poly, const std::vector<u64>& state) {
    const Field& F = poly.field();
    u64 acc = 0;
    for (unsigned j = 0; j < poly.degree(); ++j)
        acc = F.add(acc, F.mul(poly.coeff(j), state[j]));
    return F.neg(acc);
}

}  // namespace detail

/// Default seed (1, 0, ..., 0).
inline std::vector<u64> default_seed(unsigned degree) {
    std::vector<u64> s(degree, 0);
    s[0] = 1;
    return s;
}

/// First `count` terms u_0, u_1, ... of the linear recurrence driven by
/// `poly` from a nonzero seed, as canonical indices.
inline std::vector<u64> lfsr_generate(const Polynomial& poly, const std::vector<u64>& seed,
                                      std::size_t count) {
    detail::check_seed(poly, seed);
    const unsigned D = poly.degree();
    std::vector<u64> out;
    out.reserve(count);
    std::vector<u64> state = seed;
    for (std::size_t n = 0; n < count; ++n) {
        out.push_back(state[0]);
        u64 next = detail::lfsr_step(poly, state);
        for (unsigned j = 0; j + 1 < D; ++j) state[j] = state[j + 1];
        state[D - 1] = next;
    }
    return out;
}

/// FieldElement convenience overload.
inline std::vector<FieldElement> lfsr_generate(const Polynomial& poly,
                                               const std::vector<FieldElement>& seed,
                                               std::size_t count) {
    std::vector<u64> ix;
    ix.reserve(seed.size());
    for (const auto& e : seed) {
        if (!e.field().same_field(poly.field()))
            fail(errc::field_mismatch, "seed element from a different field");
        ix.push_back(e.canonical_index());
    }
    std::vector<FieldElement> out;
    for (u64 u : lfsr_generate(poly, ix, count)) out.push_back(poly.field().element(u));
    return out;
}

constexpr u64 kLfsrStateGuard = 1'000'000;

/// Smallest P > 0 with u_{i+P} = u_i for all i, detected as the first
/// recurrence of the initial state vector. For a primitive polynomial this
/// is q^D - 1 for every nonzero seed.
inline u64 lfsr_period(const Polynomial& poly, const std::vector<u64>& seed) {
    detail::check_seed(poly, seed);
    const unsigned D = poly.degree();
    const u64 states = checked_pow(poly.field().q(), D);
    if (states > kLfsrStateGuard) fail(errc::too_large, "q^D exceeds the period-search guard of 10^6");
    std::vector<u64> state = seed;
    for (u64 step = 1; step <= states; ++step) {
        u64 next = detail::lfsr_step(poly, state);
        for (unsigned j = 0; j + 1 < D; ++j) state[j] = state[j + 1];
        state[D - 1] = next;
        if (state == seed) return step;
    }
    // reachable only when the state map is not injective (constant term 0)
    fail(errc::not_periodic, "sequence never returns to its initial state (is the constant term zero?)");
}

inline u64 lfsr_period(const Polynomial& poly) { return lfsr_period(poly, default_seed(poly.degree())); }

/// The q^D - 1 length-D windows of one period, encoded base q (window
/// (u_i, ..., u_{i+D-1}) maps to sum u_{i+j} q^j). Requires a primitive poly.
inline std::vector<u64> lfsr_window_codes(const Polynomial& poly, const std::vector<u64>& seed) {
    const Field& F = poly.field();
    const unsigned D = poly.degree();
    const u64 total = checked_pow(F.q(), D);
    if (total > kLfsrStateGuard) fail(errc::too_large, "q^D exceeds the window guard of 10^6");
    if (!is_primitive(poly)) fail(errc::not_primitive, poly.to_string() + " is not primitive");
    const u64 period = total - 1;
    std::vector<u64> terms = lfsr_generate(poly, seed, period);
    std::vector<u64> codes;
    codes.reserve(period);
    for (u64 i = 0; i < period; ++i) {
        u64 code = 0;
        for (unsigned j = D; j-- > 0;) code = code * F.q() + terms[(i + j) % period];
        codes.push_back(code);
    }
    return codes;
}

/// True iff the windows of one period hit every nonzero vector of GF(q)^D
/// exactly once.
inline bool window_coverage(const Polynomial& poly) {
    const u64 total = checked_pow(poly.field().q(), poly.degree());
    std::vector<u64> codes = lfsr_window_codes(poly, default_seed(poly.degree()));
    std::vector<bool> seen(total, false);
    for (u64 c : codes) {
        if (c == 0 || seen[c]) return false;
        seen[c] = true;
    }
    return codes.size() == total - 1;
}

}  // namespace scx
