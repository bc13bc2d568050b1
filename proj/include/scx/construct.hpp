#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "scx/complex.hpp"
#include "scx/error.hpp"
#include "scx/field.hpp"
#include "scx/intmath.hpp"
#include "scx/lfsr.hpp"
#include "scx/poly.hpp"

namespace scx {

constexpr u64 kBuildFacetGuard = 1'000'000;

/// Colored-vertex encoding of the cyclic complex builder: the vertex
/// (u, c) with u in GF(q) and color c in [0, d+2) gets id index(u) + q*c.
inline int colored_vertex_id(u64 element_index, int color, u64 q) {
    return static_cast<int>(element_index + q * static_cast<u64>(color));
}

/// Doubled-vertex encoding: copy j in {1, 2} of vertex v gets id 2v + (j-1).
inline int doubled_vertex_id(int v, int copy) { return 2 * v + copy; }

struct LfsrComplexResult {
    PureComplex complex;
    Polynomial poly;
    std::vector<u64> seed;
    u64 q = 0;
    int d = 0;
    u64 sequence_period = 0;  // q^(d-1) - 1
    u64 facet_period = 0;     // lcm(sequence_period, d+2) = facet count
};

/// Builds the pure (d-1)-complex on n = (d+2)q colored vertices whose
/// facets are the length-d windows of the colored m-sequence. The dual
/// graph is a single cycle of length lcm(q^(d-1)-1, d+2); this, facet
/// distinctness, and the at-most-two-facets-per-ridge property are
/// verified before returning. For d >= 3 the complex has boundary (each
/// window minus an interior vertex is a ridge of that window alone);
/// doubling is what produces pseudo-manifolds without boundary.
inline LfsrComplexResult build_lfsr_complex(u64 q, int d,
                                            std::optional<Polynomial> poly = std::nullopt,
                                            std::optional<std::vector<u64>> seed = std::nullopt) {
    if (d < 2) fail(errc::bad_argument, "construction requires d >= 2");
    Field field = make_field(q);
    const unsigned D = static_cast<unsigned>(d - 1);

    Polynomial p = [&]() {
        if (poly) {
            if (!poly->field().same_field(field))
                fail(errc::bad_argument, "polynomial is defined over a different field");
            if (poly->degree() != D)
                fail(errc::bad_argument, "polynomial degree must be d-1 = " + std::to_string(D));
            if (!poly->all_coeffs_nonzero())
                fail(errc::bad_argument, "polynomial must have all coefficients nonzero");
            if (!is_primitive(*poly)) fail(errc::not_primitive, poly->to_string() + " is not primitive");
            return *poly;
        }
        try {
            return find_primitive_all_nonzero(field, D);
        } catch (const Error& e) {
            if (e.code() == errc::not_found)
                fail(errc::no_polynomial, "no all-nonzero primitive polynomial of degree " +
                                              std::to_string(D) + " over GF(" + std::to_string(q) +
                                              "); try a larger prime power");
            throw;
        }
    }();

    std::vector<u64> s = seed ? *seed : default_seed(D);

    const u64 period0 = checked_pow(q, D) - 1;
    const u64 colors = static_cast<u64>(d) + 2;
    const u64 period = checked_lcm(period0, colors);
    if (period > kBuildFacetGuard) fail(errc::too_large, "facet count exceeds the build guard of 10^6");

    // verified, not assumed: the state recurrence must close after q^(d-1)-1 steps
    if (lfsr_period(p, s) != period0)
        fail(errc::construction_check_failed, "m-sequence period is not q^(d-1) - 1");

    const std::vector<u64> terms = lfsr_generate(p, s, period0);
    std::vector<int> vid(period);
    for (u64 i = 0; i < period; ++i)
        vid[i] = colored_vertex_id(terms[i % period0], static_cast<int>(i % colors), q);

    const int n = static_cast<int>(colors * q);
    std::vector<std::vector<int>> facets(period);
    for (u64 i = 0; i < period; ++i) {
        std::vector<int> f(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) f[static_cast<std::size_t>(j)] = vid[(i + static_cast<u64>(j)) % period];
        std::sort(f.begin(), f.end());
        facets[i] = std::move(f);
    }

    PureComplex complex = [&]() {
        try {
            return PureComplex(d, n, std::move(facets));
        } catch (const Error& e) {
            fail(errc::construction_check_failed, std::string("generated facets invalid: ") + e.what());
        }
    }();
    LfsrComplexResult out{std::move(complex), p, s, q, d, period0, period};

    DualClassification cls = classify_dual(out.complex);
    if (cls.kind != DualKind::Cycle || cls.order.size() != period)
        fail(errc::construction_check_failed, "dual graph is not a single cycle");
    // consecutive windows share their ridge; the gap ridges (a window minus
    // an interior vertex) stay in one facet, so the cycle has boundary
    for (const auto& [ridge, list] : ridge_index(out.complex))
        if (list.size() > 2) fail(errc::construction_check_failed, "ridge in more than two facets");
    return out;
}

/// Remove one facet; on a cycle-classified complex the result is a corridor
/// with diameter (former facet count) - 2.
inline PureComplex drop_facet(const PureComplex& c, int index) {
    if (c.facet_count() < 2) fail(errc::empty_complex, "dropping the only facet would empty the complex");
    if (index < 0 || index >= c.facet_count())
        fail(errc::index_out_of_range, "facet index " + std::to_string(index) + " outside [0, " +
                                           std::to_string(c.facet_count()) + ")");
    auto facets = c.facets();
    facets.erase(facets.begin() + index);
    return PureComplex(c.facet_size(), c.ambient_vertices(), std::move(facets));
}

/// A corridor's facet ordering with the exit-vertex markers of the doubling
/// construction: exit_next[i] (a_i below) is the unique vertex of
/// F_i \ F_{i+1}, exit_prev[i] (b_i) the unique vertex of F_i \ F_{i-1}.
/// The undefined end markers are fixed deterministically: b_0 is the
/// smallest vertex of F_0 \ {a_0} and a_delta the smallest of
/// F_delta \ {b_delta}.
struct CorridorFrame {
    std::vector<int> order;      // facet indices along the dual path
    std::vector<int> exit_next;  // a_i per path position
    std::vector<int> exit_prev;  // b_i per path position
};

namespace detail {

inline std::vector<int> set_difference_vec(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

inline CorridorFrame corridor_frame(const PureComplex& c) {
    DualClassification cls = classify_dual(c);
    if (cls.kind != DualKind::Path) fail(errc::not_a_corridor, "dual graph is not a path");
    if (c.facet_count() < 2) fail(errc::too_small, "a single-facet corridor has no exit vertices");

    const std::size_t m = cls.order.size();
    CorridorFrame frame;
    frame.order = cls.order;
    frame.exit_next.assign(m, -1);
    frame.exit_prev.assign(m, -1);

    auto facet_at = [&](std::size_t pos) -> const std::vector<int>& {
        return c.facet(frame.order[pos]);
    };

    for (std::size_t i = 0; i + 1 < m; ++i) {
        auto diff = detail::set_difference_vec(facet_at(i), facet_at(i + 1));
        if (diff.size() != 1) fail(errc::construction_check_failed, "consecutive facets differ in more than one vertex");
        frame.exit_next[i] = diff[0];
    }
    for (std::size_t i = 1; i < m; ++i) {
        auto diff = detail::set_difference_vec(facet_at(i), facet_at(i - 1));
        if (diff.size() != 1) fail(errc::construction_check_failed, "consecutive facets differ in more than one vertex");
        frame.exit_prev[i] = diff[0];
    }
    // ends: smallest eligible vertex, per the deterministic-choice rule
    for (int v : facet_at(0))
        if (v != frame.exit_next[0]) {
            frame.exit_prev[0] = v;
            break;
        }
    for (int v : facet_at(m - 1))
        if (v != frame.exit_prev[m - 1]) {
            frame.exit_next[m - 1] = v;
            break;
        }
    for (std::size_t i = 0; i < m; ++i)
        if (frame.exit_next[i] == frame.exit_prev[i])
            fail(errc::construction_check_failed, "exit vertices coincide inside the corridor");
    return frame;
}

namespace detail {

// All two-colorings of `facet` in which the exit pair gets tied colors
// (equal, or opposite when `anti` is set); 2^(d-1) facets on doubled ids.
inline void append_tied_colorings(const std::vector<int>& facet, int exit_a, int exit_b, bool anti,
                                  std::vector<std::vector<int>>& out) {
    std::vector<int> free_vertices;
    for (int v : facet)
        if (v != exit_a && v != exit_b) free_vertices.push_back(v);
    const std::size_t bits = free_vertices.size() + 1;  // pair color + free colors
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
        std::vector<int> colored;
        colored.reserve(facet.size());
        const int pair_color = static_cast<int>(mask & 1);
        colored.push_back(doubled_vertex_id(exit_a, pair_color));
        colored.push_back(doubled_vertex_id(exit_b, anti ? 1 - pair_color : pair_color));
        for (std::size_t t = 0; t < free_vertices.size(); ++t)
            colored.push_back(doubled_vertex_id(free_vertices[t], static_cast<int>((mask >> (t + 1)) & 1)));
        std::sort(colored.begin(), colored.end());
        out.push_back(std::move(colored));
    }
}

inline bool every_ridge_in_two_facets(const PureComplex& c) {
    for (const auto& [ridge, list] : ridge_index(c))
        if (list.size() != 2) return false;
    return true;
}

}  // namespace detail

/// Doubles a corridor into a pseudo-manifold without boundary on 2n
/// vertices: each facet contributes its tied two-colorings and the two
/// boundary (d-2)-spheres are capped with balls of facets through
/// {a^1, a^2} and {b^1, b^2}. Verifies facet count (delta+2)*2^(d-1),
/// the pseudo-manifold property, and diameter >= delta + 2.
inline PureComplex double_corridor(const PureComplex& c) {
    if (c.facet_size() < 2) fail(errc::bad_argument, "doubling requires d >= 2");
    CorridorFrame frame = corridor_frame(c);  // also rejects non-corridors
    const int n = c.ambient_vertices();
    if (c.used_vertex_count() != n)
        fail(errc::unused_vertices, "every ambient vertex must appear in some facet");

    const std::size_t m = frame.order.size();
    const int delta = static_cast<int>(m) - 1;
    std::vector<std::vector<int>> facets;
    for (std::size_t i = 0; i < m; ++i)
        detail::append_tied_colorings(c.facet(frame.order[i]), frame.exit_next[i], frame.exit_prev[i],
                                      /*anti=*/false, facets);

    // glue two balls over R1 = F_0 \ {b_0} and R2 = F_delta \ {a_delta}
    std::vector<int> r1, r2;
    for (int v : c.facet(frame.order[0]))
        if (v != frame.exit_prev[0]) r1.push_back(v);
    for (int v : c.facet(frame.order[m - 1]))
        if (v != frame.exit_next[m - 1]) r2.push_back(v);

    int glue_a = r1[0];
    std::vector<int> r2_minus = detail::set_difference_vec(r2, {glue_a});
    if (r2_minus.empty()) {
        if (r1.size() < 2)
            fail(errc::no_valid_glue_choice, "boundary ridges are equal singletons; the complex cannot be capped");
        glue_a = r1[1];
        r2_minus = r2;
    }
    const int glue_b = r2_minus[0];

    auto append_ball = [&facets](const std::vector<int>& ridge, int apex) {
        std::vector<int> rest;
        for (int v : ridge)
            if (v != apex) rest.push_back(v);
        for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
            std::vector<int> colored{doubled_vertex_id(apex, 0), doubled_vertex_id(apex, 1)};
            for (std::size_t t = 0; t < rest.size(); ++t)
                colored.push_back(doubled_vertex_id(rest[t], static_cast<int>((mask >> t) & 1)));
            std::sort(colored.begin(), colored.end());
            facets.push_back(std::move(colored));
        }
    };
    append_ball(r1, glue_a);
    append_ball(r2, glue_b);

    PureComplex doubled = [&]() {
        try {
            return PureComplex(c.facet_size(), 2 * n, std::move(facets));
        } catch (const Error& e) {
            fail(errc::construction_check_failed, std::string("doubled facets invalid: ") + e.what());
        }
    }();

    const u64 expected = checked_mul(static_cast<u64>(delta) + 2, u64{1} << (c.facet_size() - 1));
    if (static_cast<u64>(doubled.facet_count()) != expected)
        fail(errc::construction_check_failed, "doubled facet count differs from (delta+2)*2^(d-1)");
    if (doubled.used_vertex_count() != 2 * n)
        fail(errc::construction_check_failed, "doubled complex does not use all 2n vertices");
    if (!detail::every_ridge_in_two_facets(doubled) || !is_strongly_connected(doubled))
        fail(errc::construction_check_failed, "doubled complex is not a pseudo-manifold");
    if (diameter(doubled) < delta + 2)
        fail(errc::construction_check_failed, "doubled diameter below delta + 2");
    return doubled;
}

/// Doubles a closed corridor (dual graph a cycle); no balls are needed.
/// The tied colorings alone can leave the two color classes disconnected
/// (for every closed corridor with d = 2, for instance); in that case the
/// first facet in cycle order is colored with the opposite tie, which
/// connects the double cover. Verifies facet count P*2^(d-1) and the
/// pseudo-manifold property.
inline PureComplex double_closed_corridor(const PureComplex& c) {
    if (c.facet_size() < 2) fail(errc::bad_argument, "doubling requires d >= 2");
    DualClassification cls = classify_dual(c);
    if (cls.kind != DualKind::Cycle) fail(errc::not_a_closed_corridor, "dual graph is not a cycle");

    const std::size_t m = cls.order.size();
    std::vector<int> exit_next(m), exit_prev(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& cur = c.facet(cls.order[i]);
        const auto& nxt = c.facet(cls.order[(i + 1) % m]);
        const auto& prv = c.facet(cls.order[(i + m - 1) % m]);
        auto da = detail::set_difference_vec(cur, nxt);
        auto db = detail::set_difference_vec(cur, prv);
        if (da.size() != 1 || db.size() != 1)
            fail(errc::construction_check_failed, "adjacent facets differ in more than one vertex");
        exit_next[i] = da[0];
        exit_prev[i] = db[0];
        if (exit_next[i] == exit_prev[i])
            fail(errc::construction_check_failed,
                 "facet " + std::to_string(cls.order[i]) +
                     " has coinciding exit vertices; this closed corridor cannot be doubled");
    }

    auto build = [&](bool twist_first) {
        std::vector<std::vector<int>> facets;
        for (std::size_t i = 0; i < m; ++i)
            detail::append_tied_colorings(c.facet(cls.order[i]), exit_next[i], exit_prev[i],
                                          /*anti=*/twist_first && i == 0, facets);
        try {
            return PureComplex(c.facet_size(), 2 * c.ambient_vertices(), std::move(facets));
        } catch (const Error& e) {
            fail(errc::construction_check_failed, std::string("doubled facets invalid: ") + e.what());
        }
    };

    PureComplex doubled = build(false);
    if (!detail::every_ridge_in_two_facets(doubled))
        fail(errc::construction_check_failed, "doubled complex violates the two-facets-per-ridge law");
    if (!is_strongly_connected(doubled)) {
        doubled = build(true);
        if (!detail::every_ridge_in_two_facets(doubled) || !is_strongly_connected(doubled))
            fail(errc::construction_check_failed, "doubled complex is not a pseudo-manifold");
    }
    const u64 expected = checked_mul(static_cast<u64>(m), u64{1} << (c.facet_size() - 1));
    if (static_cast<u64>(doubled.facet_count()) != expected)
        fail(errc::construction_check_failed, "doubled facet count differs from P*2^(d-1)");
    return doubled;
}

}  // namespace scx
