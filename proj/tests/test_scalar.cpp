#include <doctest.h>

#include <olc/poly.hpp>
#include <olc/rational.hpp>

using namespace olc;

namespace {

GaussianRational gr(long long p, long long q = 1) { return GaussianRational{p, q}; }

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
    GaussianRational a{2, 4};
    CHECK(a == gr(1, 2));
    CHECK(rat_str(a.re) == "1/2");
    GaussianRational b{3, -6};
    CHECK(b == gr(-1, 2));
    CHECK(rat_str(b.re) == "-1/2");
    CHECK(gr(0, 7) == gr(0));
}

TEST_CASE("field operations and i^2 = -1") {
    GaussianRational i = imaginary_unit();
    CHECK(i * i == gr(-1));
    GaussianRational z{Rat(1, 2), Rat(3)};
    GaussianRational w{Rat(-2), Rat(1, 4)};
    CHECK((z + w) - w == z);
    CHECK(z * w / w == z);
    CHECK(z * z.conj() == GaussianRational{z.norm2()});
    CHECK_THROWS_AS(z / GaussianRational{0}, std::domain_error);
}

TEST_CASE("ring axioms on sampled triples") {
    const GaussianRational samples[] = {
        gr(0), gr(1), gr(-2, 3), GaussianRational{Rat(1, 2), Rat(-1, 5)},
        GaussianRational{Rat(0), Rat(3)}, GaussianRational{Rat(7, 4), Rat(2, 9)}};
    for (const auto& a : samples)
        for (const auto& b : samples)
            for (const auto& c : samples) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
            }
}

TEST_CASE("powers, factorials, binomials, q-integers") {
    CHECK(gr_pow(gr(0), 0) == gr(1));
    CHECK(gr_pow(gr(2, 3), 3) == gr(8, 27));
    CHECK(gr_pow(gr(2), -2) == gr(1, 4));
    CHECK(rising_factorial(gr(3, 2), 3) == gr(3, 2) * gr(5, 2) * gr(7, 2));
    CHECK(rising_factorial(gr(5), 0) == gr(1));
    CHECK(factorial(5) == 120);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(4, 6) == 0);
    CHECK(q_integer(0, gr(1, 2)) == gr(0));
    CHECK(q_integer(3, gr(1, 2)) == gr(7, 4));
    CHECK(q_integer(4, gr(1)) == gr(4));
}

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("4") == Rat(4));
    CHECK(parse_rational("-6/4") == Rat(-3, 2));
    CHECK(rat_str(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK(gr_str(GaussianRational{Rat(1, 2), Rat(-3)}) == "1/2-3*i");
    CHECK(gr_str(GaussianRational{Rat(0), Rat(1, 4)}) == "1/4*i");
    CHECK(gr_str(gr(5)) == "5");
}

TEST_CASE("poly_mul matches schoolbook expansion") {
    Poly x = Poly::x();
    Poly xm1 = poly_sub(x, Poly::constant(gr(1)));
    Poly xp1 = poly_add(x, Poly::constant(gr(1)));
    CHECK(poly_mul(xm1, xp1) == Poly{{gr(-1), gr(0), gr(1)}});

    Poly p{{gr(2, 3), gr(-1), gr(0), gr(5)}};
    CHECK(poly_mul(p, Poly::constant(gr(1))) == p);

    Poly xma = poly_sub(x, Poly::constant(gr(1, 3)));
    CHECK(poly_mul(xma, xma) == Poly{{gr(1, 9), gr(-2, 3), gr(1)}});

    CHECK(poly_mul(p, Poly{}).is_zero());
    CHECK(poly_mul(p, xma).degree() == p.degree() + 1);
}

TEST_CASE("poly_scale_arg substitutes lambda*x") {
    Poly x2 = poly_mul(Poly::x(), Poly::x());
    CHECK(poly_scale_arg(x2, gr(2)) == Poly{{gr(0), gr(0), gr(4)}});

    Poly p{{gr(1, 7), gr(-2), gr(3, 5), gr(1)}};
    CHECK(poly_scale_arg(p, gr(1)) == p);

    Poly xm1 = poly_sub(Poly::x(), Poly::constant(gr(1)));
    CHECK(poly_scale_arg(xm1, gr(1, 2)) == Poly{{gr(-1), gr(1, 2)}});

    GaussianRational lam = gr(-3, 4);
    CHECK(poly_scale_arg(poly_scale_arg(p, lam), gr(1) / lam) == p);
}

TEST_CASE("falling_factorial_poly") {
    CHECK(falling_factorial_poly(0) == Poly::constant(gr(1)));
    CHECK(falling_factorial_poly(1) == Poly::x());
    CHECK(falling_factorial_poly(3) == Poly{{gr(0), gr(2), gr(-3), gr(1)}});
    for (int n = 0; n <= 6; ++n) {
        Poly step{{gr(-n), gr(1)}};
        CHECK(poly_mul(falling_factorial_poly(n), step) == falling_factorial_poly(n + 1));
    }
    CHECK(poly_eval(falling_factorial_poly(4), gr(2)) == gr(0));
    CHECK(poly_eval(falling_factorial_poly(4), gr(6)) == gr(360));
}

TEST_CASE("zero polynomial sentinel") {
    Poly z;
    CHECK(z.degree() == -1);
    CHECK(z.is_zero());
    Poly trimmed{{gr(0), gr(0)}};
    CHECK(trimmed == z);
    Poly p{{gr(1), gr(2)}};
    CHECK(poly_sub(p, p) == z);
    CHECK(!p.coeffs.back().is_zero());
}

}  // TEST_SUITE
