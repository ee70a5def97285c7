#include <doctest.h>

#include <olc/series.hpp>

#include <map>
#include <random>
#include <string>
#include <vector>

using namespace olc;

namespace {

GaussianRational gr(long long p, long long q = 1) { return GaussianRational{p, q}; }

TruncatedSeries uni(int cap) { return TruncatedSeries(1, cap); }

TruncatedSeries one_minus_t(int cap) {
    auto s = TruncatedSeries::constant(1, cap, gr(1));
    s.add_term({1}, gr(-1));
    return s;
}

TruncatedSeries one_plus_t(int cap) {
    auto s = TruncatedSeries::constant(1, cap, gr(1));
    s.add_term({1}, gr(1));
    return s;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("series term bookkeeping stays canonical") {
    auto s = uni(3);
    CHECK(s.coeff({2}) == gr(0));
    s.add_term({2}, gr(5));
    CHECK(s.coeff({2}) == gr(5));
    s.add_term({2}, gr(-5));
    CHECK(s.terms().empty());
    s.add_term({4}, gr(7));  // beyond the cap: dropped
    CHECK(s.terms().empty());
    CHECK(s == uni(3));

    CHECK_THROWS_AS(s.add_term({1, 1}, gr(1)), std::invalid_argument);
    CHECK_THROWS_AS(s.add_term({-1}, gr(1)), std::invalid_argument);
    CHECK_THROWS_AS(s.coeff({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::variable(2, 3, 2), std::out_of_range);
}

TEST_CASE("series ring operations respect the cap") {
    auto sq = ts_mul(one_plus_t(1), one_plus_t(1));
    auto expect = one_plus_t(1);
    expect.add_term({1}, gr(1));
    CHECK(sq == expect);

    auto sum = ts_add(one_plus_t(3), one_minus_t(3));
    CHECK(sum == TruncatedSeries::constant(1, 3, gr(2)));
    auto diff = ts_sub(one_plus_t(3), one_minus_t(3));
    auto two_t = TruncatedSeries(1, 3);
    two_t.add_term({1}, gr(2));
    CHECK(diff == two_t);
    CHECK(ts_scale(two_t, gr(1, 2)) == TruncatedSeries::variable(1, 3, 0));

    CHECK_THROWS_AS(ts_add(uni(3), uni(4)), std::invalid_argument);
    CHECK_THROWS_AS(ts_mul(uni(3), TruncatedSeries(2, 3)), std::invalid_argument);
}

TEST_CASE("series inverse expands the geometric series") {
    auto inv = ts_inverse(one_minus_t(3));
    TruncatedSeries expect(1, 3);
    for (int k = 0; k <= 3; ++k) expect.add_term({k}, gr(1));
    CHECK(inv == expect);
    CHECK(ts_mul(inv, one_minus_t(3)) == TruncatedSeries::constant(1, 3, gr(1)));

    CHECK_THROWS_AS(ts_inverse(TruncatedSeries::variable(1, 3, 0)), std::domain_error);
}

TEST_CASE("series powers: integer, negative, and fractional") {
    CHECK(ts_pow(one_minus_t(4), gr(-2)).coeff({2}) == gr(3));
    CHECK(ts_pow(one_plus_t(5), gr(3)).coeff({2}) == gr(3));
    CHECK(ts_pow(one_plus_t(5), gr(0)) == TruncatedSeries::constant(1, 5, gr(1)));

    // scaled constants are fine for integer exponents
    auto doubled = ts_scale(one_plus_t(3), gr(2));
    CHECK(ts_pow(doubled, gr(-1)).coeff({0}) == gr(1, 2));

    // fractional powers invert exactly
    TruncatedSeries a(2, 3);
    a.add_term({0, 0}, gr(1));
    a.add_term({1, 0}, gr(1));
    a.add_term({0, 2}, gr(2));
    a.add_term({1, 1}, gr(-1));
    auto root = ts_pow(a, gr(2, 3));
    CHECK(ts_pow(root, gr(3, 2)) == a);

    CHECK_THROWS_AS(ts_pow(doubled, gr(1, 2)), std::domain_error);
    CHECK_THROWS_AS(ts_pow(a, GaussianRational{Rat(0), Rat(1)}), std::invalid_argument);
}

TEST_CASE("series log and exp are mutually inverse") {
    TruncatedSeries a(2, 4);
    a.add_term({0, 0}, gr(1));
    a.add_term({1, 0}, gr(1, 2));
    a.add_term({0, 1}, gr(-1, 3));
    a.add_term({1, 1}, gr(2));
    CHECK(ts_exp(ts_log(a)) == a);

    auto u = ts_sub(a, TruncatedSeries::constant(2, 4, gr(1)));
    CHECK(ts_log(ts_exp(u)) == u);

    CHECK_THROWS_AS(ts_log(u), std::domain_error);
    CHECK_THROWS_AS(ts_exp(a), std::domain_error);
}

TEST_CASE("exact determinants by cofactor expansion") {
    CHECK(matrix_det(square_matrix({{gr(3)}})) == gr(3));
    CHECK(matrix_det(square_matrix({{gr(0), gr(1)}, {gr(2), gr(0)}})) == gr(-2));
    CHECK(matrix_det(square_matrix({{gr(1), gr(2), gr(3)},
                                    {gr(4), gr(5), gr(6)},
                                    {gr(7), gr(8), gr(10)}})) == gr(-3));

    CHECK_THROWS_AS(square_matrix({}), std::invalid_argument);
    CHECK_THROWS_AS(square_matrix({{gr(1), gr(2)}}), std::invalid_argument);
}

TEST_CASE("cycle-weighted permutation sums match the determinant power series") {
    // swap matrix: only the transposition contributes at index (1,1)
    const auto swap2 = square_matrix({{gr(0), gr(1)}, {gr(1), gr(0)}});
    for (const auto& beta : {gr(1), gr(1, 2), gr(-1, 3)}) {
        auto r = macmahon_check(swap2, beta, 3);
        INFO(r.note);
        CHECK(r.ok);
    }

    // zero matrix: every permutation weight vanishes except the empty one
    const auto zero = square_matrix({{gr(0), gr(0)}, {gr(0), gr(0)}});
    auto rz = macmahon_check(zero, gr(2), 4);
    INFO(rz.note);
    CHECK(rz.ok);

    CHECK_THROWS_AS(macmahon_check(square_matrix({{gr(1), gr(0), gr(0), gr(0)},
                                                  {gr(0), gr(1), gr(0), gr(0)},
                                                  {gr(0), gr(0), gr(1), gr(0)},
                                                  {gr(0), gr(0), gr(0), gr(1)}}),
                                   gr(1), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(macmahon_check(swap2, gr(1), 6), std::invalid_argument);
    CHECK_THROWS_AS(macmahon_check(swap2, gr(1), -1), std::invalid_argument);
}

TEST_CASE("cycle-weighted sums hold for random rational matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> den_pick(1, 5);
    const std::vector<GaussianRational> betas = {gr(1), gr(2), gr(1, 2), gr(-1, 3)};
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 2 + trial % 2;
        std::vector<std::vector<GaussianRational>> entries(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const int den = den_pick(rng);
                std::uniform_int_distribution<int> num_pick(-2 * den, 2 * den);
                entries[static_cast<size_t>(i)].push_back(gr(num_pick(rng), den));
            }
        const auto a = square_matrix(std::move(entries));
        for (const auto& beta : betas) {
            auto r = macmahon_check(a, beta, 4);
            INFO("trial " << trial << ": " << r.note);
            CHECK(r.ok);
        }
    }
}

TEST_CASE("determinant identities hold at rational sample points") {
    const std::vector<GaussianRational> pool = {gr(2),    gr(3),  gr(1, 2), gr(-1, 3),
                                                gr(5),    gr(7, 2), gr(4),  gr(-5, 3)};
    for (int m = 1; m <= 5; ++m) {
        for (const auto& c : {gr(1, 2), gr(-2, 3)}) {
            auto r = det_identities(m, c, pool);
            INFO("m = " << m << ": " << r.note);
            CHECK(r.ok);
        }
    }

    // degenerate diagonal: det [[0,1],[2,0]] = -2 equals the split formula
    auto r = det_identities(2, gr(1, 2), {gr(0), gr(0), gr(7), gr(1), gr(2)});
    INFO(r.note);
    CHECK(r.ok);

    // one-variable banded determinant, written out by hand
    const auto c = gr(2, 5);
    const auto x1 = gr(3), x0 = gr(7, 4);
    CHECK(matrix_det(square_matrix({{gr(1), -(c * x1)}, {-x0, gr(1) - x0}})) ==
          gr(1) - x0 * (gr(1) + c * x1));

    CHECK_THROWS_AS(det_identities(0, gr(1, 2), pool), std::invalid_argument);
    CHECK_THROWS_AS(det_identities(6, gr(1, 2), pool), std::invalid_argument);
    CHECK_THROWS_AS(det_identities(5, gr(1, 2), {gr(1), gr(2)}), std::invalid_argument);
    CHECK_THROWS_AS(det_identities(1, gr(1, 2), {gr(2), gr(3), gr(4), gr(4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(det_identities(1, gr(1, 2), {gr(2), gr(3), gr(2), gr(4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(det_identities(1, gr(1, 2), {gr(-1), gr(3), gr(4), gr(5)}),
                    std::invalid_argument);
}

TEST_CASE("free-power product generating function matches the functional") {
    for (const auto& alpha : {gr(0), gr(1, 2)}) {
        auto r = gf_check(GfIdentity::laguerre_power, {{"alpha", alpha}}, 2, 0, 4);
        INFO(r.note);
        CHECK(r.ok);

        // lowest mixed coefficient by hand
        MomentFunctional L(make_family("laguerre", {{"alpha", alpha}}));
        CHECK(generalized_moment_product(L, 1, XMode::monomial, multi_index({1, 0})) ==
              alpha + gr(1));
    }
    auto r3 = gf_check(GfIdentity::laguerre_power, {{"alpha", gr(1)}}, 3, 0, 4);
    INFO(r3.note);
    CHECK(r3.ok);
}

TEST_CASE("falling-power product generating function matches the functional") {
    auto r1 = gf_check(GfIdentity::meixner_falling,
                       {{"beta", gr(1)}, {"c", gr(1, 2)}}, 2, 0, 4);
    INFO(r1.note);
    CHECK(r1.ok);
    auto r2 = gf_check(GfIdentity::meixner_falling,
                       {{"beta", gr(3, 2)}, {"c", gr(1, 3)}}, 2, 0, 4);
    INFO(r2.note);
    CHECK(r2.ok);
}

TEST_CASE("two-parameter product generating functions match the mixed functional") {
    struct Pick {
        GaussianRational alpha, beta;
        int va, vb, cap;
    };
    const std::vector<Pick> laguerre_picks = {
        {gr(1, 2), gr(1, 2), 1, 1, 4},
        {gr(3, 2), gr(1, 2), 1, 1, 3},
        {gr(2), gr(0), 2, 1, 3},
    };
    for (const auto& p : laguerre_picks) {
        auto r = gf_check(GfIdentity::laguerre_pair,
                          {{"alpha", p.alpha}, {"beta", p.beta}}, p.va, p.vb, p.cap);
        INFO(r.note);
        CHECK(r.ok);
    }
    const std::vector<Pick> meixner_picks = {
        {gr(2), gr(2), 1, 1, 3},
        {gr(3), gr(2), 1, 1, 3},
        {gr(5, 2), gr(1, 2), 2, 1, 3},
    };
    for (const auto& p : meixner_picks) {
        auto r = gf_check(GfIdentity::meixner_pair,
                          {{"alpha", p.alpha}, {"beta", p.beta}, {"c", gr(1, 2)}},
                          p.va, p.vb, p.cap);
        INFO(r.note);
        CHECK(r.ok);
    }
    auto rc = gf_check(GfIdentity::meixner_pair,
                       {{"alpha", gr(3)}, {"beta", gr(2)}, {"c", gr(1, 3)}}, 1, 1, 3);
    INFO(rc.note);
    CHECK(rc.ok);

    CHECK_THROWS_AS(gf_check(GfIdentity::laguerre_pair,
                             {{"alpha", gr(1, 2)}, {"beta", gr(0)}}, 1, 1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(gf_check(GfIdentity::laguerre_pair,
                             {{"alpha", gr(0)}, {"beta", gr(1)}}, 1, 1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(gf_check(GfIdentity::laguerre_pair,
                             {{"alpha", gr(1)}, {"beta", gr(0)}}, 1, 0, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(gf_check(GfIdentity::laguerre_power, {{"alpha", gr(0)}}, 1, 1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(gf_check(GfIdentity::laguerre_power, {{"alpha", gr(0)}}, 4, 0, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(gf_check(GfIdentity::laguerre_power, {{"alpha", gr(0)}}, 2, 0, 6),
                    std::invalid_argument);
}

TEST_CASE("pair-product exponential generating function matches plain products") {
    auto r2 = gf_check(GfIdentity::hermite_exponential, {}, 2, 0, 4);
    INFO(r2.note);
    CHECK(r2.ok);
    auto r3 = gf_check(GfIdentity::hermite_exponential, {}, 3, 0, 5);
    INFO(r3.note);
    CHECK(r3.ok);

    MomentFunctional H(make_family("hermite", {}));
    CHECK(linearization(H, multi_index({1, 1})) == gr(1));
}

TEST_CASE("block-count exponential generating function matches the functional") {
    auto r = gf_check(GfIdentity::charlier_exponential, {{"a", gr(2, 3)}}, 2, 0, 4);
    INFO(r.note);
    CHECK(r.ok);

    MomentFunctional L(make_family("charlier", {{"a", gr(2, 3)}}));
    CHECK(generalized_moment_product(L, 1, XMode::falling_factorial, multi_index({0, 0})) ==
          gr(2, 3));
}

TEST_CASE("three-box closed form equals series coefficients and direct counts") {
    CHECK(power_product_closed_form(1, 1, 1) == gr(3));

    // [1 - x0 (1+x1)(1+x2) - x1 x2]^{-1} with variables ordered (x0, x1, x2)
    TruncatedSeries base(3, 12);
    base.add_term({0, 0, 0}, gr(1));
    base.add_term({1, 0, 0}, gr(-1));
    base.add_term({1, 1, 0}, gr(-1));
    base.add_term({1, 0, 1}, gr(-1));
    base.add_term({1, 1, 1}, gr(-1));
    base.add_term({0, 1, 1}, gr(-1));
    const auto inv = ts_inverse(base);
    const auto fact = [](int k) { return GaussianRational(Rat(factorial(k))); };
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (int s = 0; s <= 4; ++s) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(s);
                CHECK(power_product_closed_form(m, n, s) ==
                      inv.coeff({s, m, n}) * fact(m) * fact(n) * fact(s));
                if (m + n + s <= 8)
                    CHECK(power_product_closed_form(m, n, s) ==
                          weighted_sum(ground_set_with_free_front(s, {m, n}),
                                       rules::permutation_cycle_weight(
                                           gr(1), EnumFilter::inhomogeneous)));
            }
    CHECK_THROWS_AS(power_product_closed_form(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("three-box falling closed form matches the weighted functional") {
    for (const auto& c : {gr(1, 2), gr(1, 3)}) {
        CHECK(falling_product_closed_form(1, 1, 0, c) == gr(1) / c);
        CHECK(falling_product_closed_form(1, 0, 0, c) == gr(0));
        MomentFunctional L(make_family("meixner", {{"beta", gr(1)}, {"c", c}}));
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (int s = 0; s <= 3; ++s) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(s);
                    CHECK(falling_product_closed_form(m, n, s, c) ==
                          generalized_moment_product(L, s, XMode::falling_factorial,
                                                     multi_index({m, n})));
                }
    }
    CHECK_THROWS_AS(falling_product_closed_form(1, 1, 1, gr(0)), std::invalid_argument);
}

}  // TEST_SUITE
