#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "oracles.hpp"
#include "scx/lfsr.hpp"

using namespace scx;

namespace {

Polynomial poly_desc(u64 q, std::vector<u64> a) {
    return Polynomial::from_descending(make_field(q), a);
}

}  // namespace

TEST_CASE("lfsr_generate follows the recurrence") {
    CHECK(lfsr_generate(poly_desc(2, {1, 1}), {1, 0}, 8) ==
          std::vector<u64>{1, 0, 1, 1, 0, 1, 1, 0});
    CHECK(lfsr_generate(poly_desc(3, {1, 2}), {0, 1}, 10) ==
          std::vector<u64>{0, 1, 2, 2, 0, 2, 1, 1, 0, 1});
    CHECK_THROWS_MATCHES(lfsr_generate(poly_desc(3, {1, 2}), {0, 0}, 4), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::zero_seed; }));
    CHECK(lfsr_generate(poly_desc(2, {1, 1}), {1, 0}, 0).empty());

    // every window of D+1 consecutive terms satisfies the recurrence
    Polynomial f = poly_desc(3, {1, 2, 1});
    const Field& F = f.field();
    auto terms = lfsr_generate(f, {1, 0, 0}, 60);
    for (std::size_t n = 0; n + 3 < terms.size(); ++n) {
        u64 lhs = terms[n + 3];
        lhs = F.add(lhs, F.mul(f.a(1), terms[n + 2]));
        lhs = F.add(lhs, F.mul(f.a(2), terms[n + 1]));
        lhs = F.add(lhs, F.mul(f.a(3), terms[n]));
        CHECK(lhs == 0);
    }
}

TEST_CASE("field-element overload matches the index API") {
    Polynomial f = poly_desc(4, {1, 2});
    Field F = f.field();
    auto elems = lfsr_generate(f, std::vector<FieldElement>{F.element(1), F.element(0)}, 12);
    auto ixs = lfsr_generate(f, std::vector<u64>{1, 0}, 12);
    REQUIRE(elems.size() == ixs.size());
    for (std::size_t i = 0; i < ixs.size(); ++i) CHECK(elems[i].canonical_index() == ixs[i]);
}

TEST_CASE("lfsr_period examples") {
    CHECK(lfsr_period(poly_desc(2, {1, 1}), {1, 0}) == 3);  // q^D - 1
    CHECK(lfsr_period(poly_desc(3, {0, 1}), {1, 0}) == 4);  // non-primitive: 1,0,2,0
    for (u64 s = 1; s < 9; ++s)
        CHECK(lfsr_period(poly_desc(3, {1, 2}), {s % 3, s / 3}) == 8);
    CHECK_THROWS_MATCHES(lfsr_period(poly_desc(3, {1, 0}), {1, 0}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_periodic; }));
}

TEST_CASE("window coverage examples") {
    CHECK(window_coverage(poly_desc(2, {1, 1})));
    CHECK(window_coverage(poly_desc(3, {1, 2})));
    CHECK_THROWS_MATCHES(window_coverage(poly_desc(3, {0, 1})), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_primitive; }));
    CHECK_THROWS_MATCHES(window_coverage(Polynomial(make_field(2), std::vector<u64>(21, 1))),
                         Error, Catch::Matchers::Predicate<Error>(
                                    [](const Error& e) { return e.code() == errc::too_large; }));

    // q=2: the three windows are (1,0), (0,1), (1,1)
    auto codes = lfsr_window_codes(poly_desc(2, {1, 1}), {1, 0});
    CHECK(codes == std::vector<u64>{1, 2, 3});
}

TEST_CASE("coverage is exact: every nonzero vector appears exactly once") {
    for (auto [q, a] : std::vector<std::pair<u64, std::vector<u64>>>{
             {2, {1, 1}}, {3, {1, 2}}, {3, {1, 2, 1}}, {5, {1, 2}}}) {
        Polynomial f = poly_desc(q, a);
        auto codes = lfsr_window_codes(f, default_seed(f.degree()));
        std::sort(codes.begin(), codes.end());
        std::vector<u64> expect;
        for (u64 v = 1; v < checked_pow(q, f.degree()); ++v) expect.push_back(v);
        CHECK(codes == expect);
    }
}

TEST_CASE("window multiset is invariant under the seed (shift closure)") {
    Polynomial f = poly_desc(3, {1, 2});
    auto base = lfsr_window_codes(f, {1, 0});
    std::multiset<u64> base_set(base.begin(), base.end());
    for (u64 s = 1; s < 9; ++s) {
        auto w = lfsr_window_codes(f, {s % 3, s / 3});
        CHECK(std::multiset<u64>(w.begin(), w.end()) == base_set);
    }
}

TEST_CASE("periods are seed-independent for primitive polynomials") {
    for (auto [q, a] : std::vector<std::pair<u64, std::vector<u64>>>{
             {2, {1, 1}}, {2, {1, 0, 1}}, {3, {1, 2}}, {4, {1, 2}}}) {
        Polynomial f = poly_desc(q, a);
        REQUIRE(is_primitive(f));
        const u64 states = checked_pow(q, f.degree());
        for (u64 s = 1; s < states; ++s) {
            std::vector<u64> seed(f.degree());
            u64 rest = s;
            for (auto& e : seed) {
                e = rest % q;
                rest /= q;
            }
            CHECK(lfsr_period(f, seed) == states - 1);
        }
    }
}

TEST_CASE("backward reconstruction from the following D terms") {
    // a_D != 0 makes the recurrence solvable for u_n:
    // u_n = -a_D^{-1} (u_{n+D} + a_1 u_{n+D-1} + ... + a_{D-1} u_{n+1})
    for (auto [q, a] : std::vector<std::pair<u64, std::vector<u64>>>{{3, {1, 2}}, {3, {1, 2, 1}},
                                                                     {5, {1, 2}}}) {
        Polynomial f = poly_desc(q, a);
        const Field& F = f.field();
        const unsigned D = f.degree();
        auto terms = lfsr_generate(f, default_seed(D), 40);
        const u64 ad_inv = F.inv(f.a(D));
        for (std::size_t n = 0; n + D < terms.size(); ++n) {
            u64 acc = terms[n + D];
            for (unsigned i = 1; i < D; ++i) acc = F.add(acc, F.mul(f.a(i), terms[n + D - i]));
            CHECK(F.mul(F.neg(acc), ad_inv) == terms[n]);
        }
    }
}
