#include <doctest.h>

#include <olc/linearize.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace olc;

namespace {

GaussianRational gr(long long p, long long q = 1) { return GaussianRational{p, q}; }

FamilySpec fam(const std::string& name, std::map<std::string, GaussianRational> params = {}) {
    return make_family(name, params);
}

GaussianRational lin(const FamilySpec& f, std::vector<int> entries,
                     std::vector<GaussianRational> scalings = {}) {
    MomentFunctional L(f);
    return linearization(L, multi_index(std::move(entries), std::move(scalings)));
}

// every family with a product formula, with two parameter points each
std::vector<FamilySpec> product_families() {
    return {
        fam("hermite"),
        fam("charlier", {{"a", gr(2)}}),
        fam("charlier", {{"a", gr(-3, 5)}}),
        fam("laguerre", {{"alpha", gr(0)}}),
        fam("laguerre", {{"alpha", gr(3, 7)}}),
        fam("meixner", {{"beta", gr(2)}, {"c", gr(1, 3)}}),
        fam("meixner", {{"beta", gr(-1, 2)}, {"c", gr(5, 2)}}),
        fam("meixner-pollaczek", {{"delta", gr(1, 2)}, {"eta", gr(3)}}),
        fam("meixner-pollaczek", {{"delta", gr(-2)}, {"eta", gr(1, 5)}}),
        fam("q-hermite", {{"q", gr(2, 3)}}),
        fam("q-hermite", {{"q", gr(-1)}}),
        fam("q-charlier", {{"a", gr(2)}, {"b", gr(1, 2)}, {"c", gr(3)}, {"q", gr(1, 4)}}),
        fam("q-charlier", {{"a", gr(1, 3)}, {"b", gr(2)}, {"c", gr(1, 2)}, {"q", gr(0)}}),
        fam("q-laguerre", {{"y", gr(3, 2)}, {"q", gr(1, 2)}}),
        fam("q-laguerre", {{"y", gr(2)}, {"q", gr(1)}}),
    };
}

std::vector<std::vector<int>> small_indices() {
    return {{1, 1}, {2, 2}, {2, 1, 1}, {3, 2, 1}, {2, 2, 2}, {1, 1, 1, 1}, {3, 3}, {4, 2}};
}

}  // namespace

TEST_SUITE("linearize") {

TEST_CASE("index bookkeeping validates shape and shifts") {
    auto idx = multi_index({2, 0, 3});
    CHECK(idx.m() == 3);
    CHECK(idx.total() == 5);
    CHECK(idx.scaling(1) == gr(1));
    CHECK(idx.shifted(0, 1).entries == std::vector<int>{3, 0, 3});
    CHECK(idx.shifted(2, -1).entries == std::vector<int>{2, 0, 2});
    CHECK_THROWS_AS(idx.shifted(1, -1), std::invalid_argument);
    CHECK_THROWS_AS(idx.shifted(3, 1), std::out_of_range);
    CHECK_THROWS_AS(multi_index({}), std::invalid_argument);
    CHECK_THROWS_AS(multi_index({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(multi_index({1, 1}, {gr(2)}), std::invalid_argument);

    auto scaled = multi_index({1, 2}, {gr(2, 3), gr(1)});
    CHECK(scaled.scaling(0) == gr(2, 3));
    CHECK(scaled.scaling(1) == gr(1));
}

TEST_CASE("product functionals hit known closed values") {
    auto alpha = gr(4, 7);
    CHECK(lin(fam("laguerre", {{"alpha", alpha}}), {2, 2}) ==
          gr(2) * (alpha + gr(1)) * (alpha + gr(2)));

    auto q = gr(3, 5);
    CHECK(lin(fam("q-hermite", {{"q", q}}), {2, 2}) == gr(1) + q);

    CHECK(lin(fam("hermite"), {0, 0, 0}) == gr(1));

    auto a = gr(2, 9);
    CHECK(lin(fam("q-charlier",
                  {{"a", a}, {"b", gr(1, 2)}, {"c", gr(3)}, {"q", gr(1, 4)}}),
              {1, 1}) == a);

    // orthogonality through the product form
    auto f = fam("meixner", {{"beta", gr(3)}, {"c", gr(1, 4)}});
    CHECK(lin(f, {3, 2}) == gr(0));
    CHECK(lin(f, {3, 3}) == norm_zeta(f, 3));
}

TEST_CASE("combinatorial sums hit known closed values") {
    auto beta = gr(5, 3);
    auto c = gr(2, 7);
    CHECK(combinatorial_value(fam("meixner", {{"beta", beta}, {"c", c}}),
                              multi_index({2, 2})) ==
          gr(2) * beta * beta * c * c + gr(2) * beta * c * c);

    auto delta = gr(1, 2);
    auto eta = gr(4);
    CHECK(combinatorial_value(
              fam("meixner-pollaczek", {{"delta", delta}, {"eta", eta}}),
              multi_index({1, 1})) == (delta * delta + gr(1)) * eta);

    auto alpha = gr(2, 5);
    auto lam = gr(3, 4);
    CHECK(combinatorial_value(fam("laguerre", {{"alpha", alpha}}),
                              multi_index({1, 1}, {lam, gr(1)})) ==
          (alpha + gr(1)) * lam);

    auto auxa = gr(7, 2);
    CHECK(combinatorial_value(fam("charlier", {{"a", auxa}}), multi_index({1, 1})) == auxa);
}

TEST_CASE("combinatorial sums reject what they cannot enumerate") {
    CHECK_THROWS_AS(combinatorial_value(fam("hermite"), multi_index({6, 6})),
                    std::domain_error);
    CHECK_THROWS_AS(combinatorial_value(
                        fam("al-salam-chihara",
                            {{"t1", gr(1, 2)}, {"t2", gr(1, 3)}, {"q", gr(1, 5)}}),
                        multi_index({1, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(combinatorial_value(fam("charlier", {{"a", gr(2)}}),
                                        multi_index({1, 1}, {gr(2), gr(1)})),
                    std::invalid_argument);
}

TEST_CASE("products agree with weighted diagram sums") {
    for (const auto& f : product_families())
        for (const auto& entries : small_indices()) {
            auto report = linearization_matches_combinatorics(f, multi_index(entries));
            CAPTURE(f.name);
            CAPTURE(report.note);
            CHECK(report.ok);
        }
}

TEST_CASE("scaled products agree with scaled diagram sums") {
    std::vector<std::vector<GaussianRational>> scalings2 = {{gr(2), gr(1)},
                                                            {gr(1, 2), gr(5, 3)}};
    std::vector<std::vector<GaussianRational>> scalings3 = {{gr(2), gr(1, 3), gr(1)}};
    for (const auto& name : {std::string("hermite"), std::string("laguerre")}) {
        auto f = name == "hermite" ? fam("hermite")
                                   : fam("laguerre", {{"alpha", gr(2, 3)}});
        for (const auto& lam : scalings2)
            for (std::vector<int> entries : {std::vector<int>{2, 2}, std::vector<int>{3, 1}}) {
                auto report =
                    linearization_matches_combinatorics(f, multi_index(entries, lam));
                CAPTURE(name);
                CHECK(report.ok);
            }
        for (const auto& lam : scalings3) {
            auto report =
                linearization_matches_combinatorics(f, multi_index({2, 1, 1}, lam));
            CHECK(report.ok);
        }
    }
}

TEST_CASE("products are symmetric in factor order") {
    auto f = fam("laguerre", {{"alpha", gr(1, 3)}});
    MomentFunctional L(f);
    auto base = linearization(L, multi_index({3, 1, 2}, {gr(2), gr(1, 2), gr(1)}));
    CHECK(base == linearization(L, multi_index({1, 3, 2}, {gr(1, 2), gr(2), gr(1)})));
    CHECK(base == linearization(L, multi_index({2, 3, 1}, {gr(1), gr(2), gr(1, 2)})));

    auto g = fam("q-charlier",
                 {{"a", gr(2)}, {"b", gr(1, 2)}, {"c", gr(3)}, {"q", gr(1, 4)}});
    MomentFunctional M(g);
    CHECK(linearization(M, multi_index({1, 2, 3})) ==
          linearization(M, multi_index({3, 2, 1})));
}

TEST_CASE("difference system holds across families and positions") {
    for (const auto& f : product_families()) {
        MomentFunctional L(f);
        for (const auto& entries : {std::vector<int>{2, 1}, std::vector<int>{1, 2, 2},
                                    std::vector<int>{3, 2, 1}}) {
            auto idx = multi_index(entries);
            for (int j = 0; j < idx.m(); ++j)
                for (int k = 0; k < idx.m(); ++k) {
                    if (j == k) continue;
                    auto report = check_difference_system(L, idx, j, k);
                    CAPTURE(f.name);
                    CAPTURE(j);
                    CAPTURE(k);
                    CHECK(report.ok);
                }
        }
    }
}

TEST_CASE("difference system with scalings and an exact hand value") {
    auto f = fam("hermite");
    MomentFunctional L(f);
    auto idx = multi_index({2, 1});
    // sides evaluate to the same number; pin it
    auto lhs = linearization(L, multi_index({3, 1})) - linearization(L, multi_index({2, 2}));
    CHECK(lhs == gr(-2));
    auto report = check_difference_system(L, idx, 0, 1);
    CHECK(report.ok);
    CHECK(report.lhs == gr(-2));
    CHECK(report.rhs == gr(-2));

    auto g = fam("laguerre", {{"alpha", gr(1, 2)}});
    MomentFunctional M(g);
    auto scaled = multi_index({2, 1, 1}, {gr(2), gr(1, 3), gr(1)});
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if (j != k) CHECK(check_difference_system(M, scaled, j, k).ok);

    auto degenerate = multi_index({1, 1}, {gr(0), gr(1)});
    auto bad = check_difference_system(M, degenerate, 0, 1);
    CHECK_FALSE(bad.ok);
    CHECK(bad.note == "division impossible: a scaled leading coefficient vanishes");

    CHECK_THROWS_AS(check_difference_system(M, scaled, 1, 1), std::invalid_argument);
}

TEST_CASE("boundary data matches the two-point seed") {
    for (const auto& f : product_families())
        for (int m = 2; m <= 4; ++m) {
            MomentFunctional L(f);
            auto report = check_boundary(L, m);
            CAPTURE(f.name);
            CAPTURE(m);
            CAPTURE(report.note);
            CHECK(report.ok);
        }
    MomentFunctional L(fam("hermite"));
    CHECK_THROWS_AS(check_boundary(L, 1), std::invalid_argument);
}

TEST_CASE("moment products with a free power factor") {
    auto alpha = gr(2, 7);
    auto fL = fam("laguerre", {{"alpha", alpha}});
    MomentFunctional L(fL);
    CHECK(generalized_moment_product(L, 1, XMode::monomial, multi_index({1})) ==
          alpha + gr(1));

    MomentFunctional L0(fam("laguerre", {{"alpha", gr(0)}}));
    CHECK(generalized_moment_product(L0, 1, XMode::monomial, multi_index({1, 1})) == gr(3));

    // free-front cycle sums give the same numbers
    EnumCaps caps;
    caps.permutations = 10;
    for (int n0 = 0; n0 <= 3; ++n0)
        for (const auto& entries :
             {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 1},
              std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
            auto direct = generalized_moment_product(L, n0, XMode::monomial,
                                                     multi_index(entries));
            auto star = weighted_sum(
                ground_set_with_free_front(n0, entries),
                rules::permutation_cycle_weight(alpha + gr(1), EnumFilter::inhomogeneous),
                caps);
            CAPTURE(n0);
            CHECK(direct == star);
        }
}

TEST_CASE("moment products with a falling factorial factor") {
    auto a = gr(5, 4);
    MomentFunctional C(fam("charlier", {{"a", a}}));
    CHECK(generalized_moment_product(C, 1, XMode::falling_factorial, multi_index({0})) == a);
    CHECK(generalized_moment_product(C, 3, XMode::falling_factorial, multi_index({0})) ==
          a * a * a);
    CHECK(generalized_moment_product(C, 1, XMode::falling_factorial, multi_index({1, 1})) ==
          a + a * a);

    EnumCaps caps;
    caps.partitions = 12;
    for (int n0 = 0; n0 <= 3; ++n0)
        for (const auto& entries :
             {std::vector<int>{1}, std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
            auto direct = generalized_moment_product(C, n0, XMode::falling_factorial,
                                                     multi_index(entries));
            auto star = weighted_sum(ground_set_with_free_front(n0, entries),
                                     rules::partition_block_count(a), caps);
            CAPTURE(n0);
            CHECK(direct == star);
        }

    auto beta = gr(3, 2);
    auto c = gr(2, 5);
    MomentFunctional M(fam("meixner", {{"beta", beta}, {"c", c}}));
    CHECK(generalized_moment_product(M, 1, XMode::falling_factorial, multi_index({0})) ==
          beta);
    CHECK(generalized_moment_product(M, 2, XMode::falling_factorial, multi_index({0})) ==
          beta * (beta + gr(1)));
    CHECK(generalized_moment_product(M, 1, XMode::falling_factorial, multi_index({1})) ==
          beta / c);
    CHECK(generalized_moment_product(M, 3, XMode::falling_factorial, multi_index({2})) ==
          gr(6) * beta * (beta + gr(1)) * (beta + gr(2)) / (c * c));
    for (int n0 = 0; n0 <= 3; ++n0)
        for (const auto& entries :
             {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{2, 1}}) {
            auto direct = generalized_moment_product(M, n0, XMode::falling_factorial,
                                                     multi_index(entries));
            auto star = weighted_sum(ground_set_with_free_front(n0, entries),
                                     rules::star_meixner(beta, c), caps);
            CAPTURE(n0);
            CHECK(direct == star);
        }
}

TEST_CASE("powers against hermite products count matchings with unit boxes") {
    MomentFunctional H(fam("hermite"));
    EnumCaps caps;
    for (int n0 = 0; n0 <= 4; ++n0)
        for (const auto& entries :
             {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{2, 2},
              std::vector<int>{3, 1}}) {
            std::vector<int> sizes(static_cast<size_t>(n0), 1);
            sizes.insert(sizes.end(), entries.begin(), entries.end());
            auto direct =
                generalized_moment_product(H, n0, XMode::monomial, multi_index(entries));
            auto arcs = weighted_sum(ground_set(sizes), rules::matching_count(), caps);
            CAPTURE(n0);
            CHECK(direct == arcs);
        }
}

TEST_CASE("mixed products reduce to the norm on matched pairs") {
    auto alpha = gr(1, 3);
    auto fA = fam("laguerre", {{"alpha", alpha}});
    CHECK(mixed_linearization(fA, fA, 0, multi_index({1}), multi_index({1})) ==
          alpha + gr(1));
    auto fB = fam("laguerre", {{"alpha", gr(7, 3)}});
    CHECK(mixed_linearization(fA, fB, 1, multi_index({1}), multi_index({0})) ==
          alpha + gr(1));

    CHECK_THROWS_AS(mixed_linearization(fA, fam("hermite"), 0, multi_index({1}),
                                        multi_index({1})),
                    std::invalid_argument);
    auto m1 = fam("meixner", {{"beta", gr(2)}, {"c", gr(1, 3)}});
    auto m2 = fam("meixner", {{"beta", gr(3)}, {"c", gr(1, 4)}});
    CHECK_THROWS_AS(mixed_linearization(m1, m2, 0, multi_index({1}), multi_index({1})),
                    std::invalid_argument);
}

TEST_CASE("mixed products match part-present cycle sums") {
    EnumCaps caps;
    caps.permutations = 10;
    for (int range = 0; range <= 2; ++range) {
        auto beta_low = gr(1, 2);
        auto alpha_high = beta_low + gr(range);
        auto fA = fam("laguerre", {{"alpha", alpha_high}});
        auto fB = fam("laguerre", {{"alpha", beta_low}});
        auto rule =
            rules::permutation_cycle_weight(alpha_high + gr(1), EnumFilter::inhomogeneous);
        for (int m = 0; m <= 2; ++m)
            for (const auto& ea : {std::vector<int>{1}, std::vector<int>{2}})
                for (const auto& eb : {std::vector<int>{1}, std::vector<int>{2, 1}}) {
                    BoxedGroundSet g;
                    g.sizes.push_back(m);
                    g.roles.push_back(BoxRole::free_box);
                    for (int e : ea) {
                        g.sizes.push_back(e);
                        g.roles.push_back(BoxRole::deranged);
                    }
                    for (int e : eb) {
                        g.sizes.push_back(e);
                        g.roles.push_back(BoxRole::injection_target);
                    }
                    g.injection_range = range;
                    auto direct = mixed_linearization(fA, fB, m, multi_index(ea),
                                                      multi_index(eb));
                    auto star = mixed_star_sum(g, rule, caps);
                    CAPTURE(range);
                    CAPTURE(m);
                    CHECK(direct == star);
                }
    }
}

TEST_CASE("mixed falling products match part-present meixner sums") {
    EnumCaps caps;
    caps.permutations = 10;
    auto c = gr(2, 7);
    for (int range = 0; range <= 2; ++range) {
        auto beta_low = gr(1, 3);
        auto beta_high = beta_low + gr(range);
        auto fA = fam("meixner", {{"beta", beta_high}, {"c", c}});
        auto fB = fam("meixner", {{"beta", beta_low}, {"c", c}});
        auto rule = rules::star_meixner(beta_high, c);
        for (int m = 0; m <= 2; ++m)
            for (const auto& ea : {std::vector<int>{1}, std::vector<int>{2}})
                for (const auto& eb : {std::vector<int>{1}, std::vector<int>{1, 1}}) {
                    BoxedGroundSet g;
                    g.sizes.push_back(m);
                    g.roles.push_back(BoxRole::free_box);
                    for (int e : ea) {
                        g.sizes.push_back(e);
                        g.roles.push_back(BoxRole::deranged);
                    }
                    for (int e : eb) {
                        g.sizes.push_back(e);
                        g.roles.push_back(BoxRole::injection_target);
                    }
                    g.injection_range = range;
                    auto direct =
                        mixed_linearization(fA, fB, m, multi_index(ea), multi_index(eb));
                    auto star = mixed_star_sum(g, rule, caps);
                    CAPTURE(range);
                    CAPTURE(m);
                    CHECK(direct == star);
                }
    }
}

TEST_CASE("connection coefficients rebuild monomials") {
    auto beta = gr(3, 4);
    auto c = gr(2, 5);
    auto f = fam("meixner", {{"beta", beta}, {"c", c}});

    auto one = connection_coefficients(f, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == beta * c / (gr(1) - c));
    CHECK(one[1] == gr(0) - c / (gr(1) - c));

    for (int n = 0; n <= 5; ++n) {
        auto coeffs = connection_coefficients(f, n);
        Poly sum;
        for (int k = 0; k <= n; ++k)
            sum = poly_add(sum, poly_scalar_mul(polynomial(f, k),
                                                coeffs[static_cast<size_t>(k)]));
        std::vector<GaussianRational> mono(static_cast<size_t>(n) + 1, gr(0));
        mono.back() = gr(1);
        CHECK(sum == Poly{std::move(mono)});
    }

    CHECK_THROWS_AS(connection_coefficients(fam("hermite"), 1), std::invalid_argument);
    CHECK_THROWS_AS(connection_coefficients(f, 11), std::domain_error);
}

TEST_CASE("all-singleton products expand a shifted power") {
    auto f = fam("q-charlier",
                 {{"a", gr(3, 2)}, {"b", gr(1, 3)}, {"c", gr(5, 4)}, {"q", gr(2, 7)}});
    MomentFunctional L(f);
    auto c = f.params.at("c");
    Poly shifted{{gr(0) - c, gr(1)}};
    Poly power{{gr(1)}};
    for (int m = 1; m <= 8; ++m) {
        power = poly_mul(power, shifted);
        std::vector<int> ones(static_cast<size_t>(m), 1);
        CHECK(linearization(L, multi_index(ones)) == L.apply(power));
    }
}

TEST_CASE("crossing weights collapse to crossing-free counts at q zero") {
    auto f = fam("q-hermite", {{"q", gr(0)}});
    EnumCaps caps;
    for (const auto& entries : small_indices()) {
        GaussianRational noncrossing(0);
        enumerate(ground_set(entries), DiagramKind::matching, EnumFilter::inhomogeneous,
                  [&](const DiagramObject& d) {
                      if (statistics(d, ground_set(entries)).cr == 0)
                          noncrossing = noncrossing + gr(1);
                  },
                  caps);
        CHECK(combinatorial_value(f, multi_index(entries)) == noncrossing);
    }
}

}  // TEST_SUITE
