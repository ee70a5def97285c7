/// @file poly.hpp
/// @brief Dense univariate polynomials over GaussianRational coefficients.

#pragma once

#include <olc/rational.hpp>

#include <vector>

namespace olc {

/// Dense polynomial; coeffs[k] is the coefficient of x^k, trailing zeros
/// trimmed so the leading coefficient of a nonzero polynomial is nonzero.
/// The zero polynomial has empty coeffs and degree() == -1.
struct Poly {
    std::vector<GaussianRational> coeffs;

    Poly() = default;
    explicit Poly(std::vector<GaussianRational> c) : coeffs(std::move(c)) { trim(); }

    static Poly constant(const GaussianRational& c) { return Poly{{c}}; }
    static Poly x() { return Poly{{GaussianRational{0}, GaussianRational{1}}}; }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }

    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return GaussianRational{0};
        return coeffs[static_cast<size_t>(k)];
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

inline Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Poly{std::move(c)};
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return Poly{std::move(c)};
}

/// Exact product; deg(pq) = deg p + deg q for nonzero inputs.
inline Poly poly_mul(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly{};
    std::vector<GaussianRational> c(p.coeffs.size() + q.coeffs.size() - 1);
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        for (size_t j = 0; j < q.coeffs.size(); ++j)
            c[i + j] += p.coeffs[i] * q.coeffs[j];
    return Poly{std::move(c)};
}

inline Poly poly_scalar_mul(const Poly& p, const GaussianRational& s) {
    std::vector<GaussianRational> c(p.coeffs.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = p.coeffs[k] * s;
    return Poly{std::move(c)};
}

/// q(x) = p(lambda * x): the coefficient of x^k is multiplied by lambda^k.
inline Poly poly_scale_arg(const Poly& p, const GaussianRational& lambda) {
    std::vector<GaussianRational> c(p.coeffs.size());
    GaussianRational power{1};
    for (size_t k = 0; k < c.size(); ++k) {
        c[k] = p.coeffs[k] * power;
        power *= lambda;
    }
    return Poly{std::move(c)};
}

/// x(x-1)...(x-n0+1): monic of degree n0 with roots 0..n0-1; n0 = 0 gives 1.
inline Poly falling_factorial_poly(int n0) {
    Poly acc = Poly::constant(GaussianRational{1});
    for (int k = 0; k < n0; ++k) {
        Poly factor{{GaussianRational{-k}, GaussianRational{1}}};
        acc = poly_mul(acc, factor);
    }
    return acc;
}

inline GaussianRational poly_eval(const Poly& p, const GaussianRational& x) {
    GaussianRational acc{0};
    for (size_t k = p.coeffs.size(); k-- > 0;) acc = acc * x + p.coeffs[k];
    return acc;
}

}  // namespace olc
