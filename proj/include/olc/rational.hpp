/// @file rational.hpp
/// @brief Exact Gaussian-rational scalars: a + b*i with arbitrary-precision
///        rational parts, stored in lowest terms with positive denominators.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace olc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// p/q as a canonical rational; accepts negative q, rejects q = 0.
inline Rat make_rat(Int p, Int q) {
    if (q == 0) throw std::domain_error("rational with zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rat(std::move(p), std::move(q));
}

/// Complex number with exact rational real and imaginary parts.
/// cpp_rational keeps each part canonical (reduced, positive denominator),
/// so equality is exact structural equality.
struct GaussianRational {
    Rat re{};
    Rat im{};

    GaussianRational() = default;
    GaussianRational(long long n) : re(n) {}  // NOLINT: implicit by design
    GaussianRational(Rat r) : re(std::move(r)) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long long p, long long q) : re(make_rat(Int(p), Int(q))) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 as a rational; zero iff z is zero.
    Rat norm2() const { return re * re + im * im; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rat n = o.norm2();
        if (n == 0) throw std::domain_error("division by zero GaussianRational");
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }
};

inline GaussianRational imaginary_unit() { return {Rat(0), Rat(1)}; }

/// z^e for integer e (negative e inverts; requires z != 0 then). 0^0 = 1.
inline GaussianRational gr_pow(const GaussianRational& z, long long e) {
    if (e < 0) {
        GaussianRational one{1};
        return gr_pow(one / z, -e);
    }
    GaussianRational acc{1};
    GaussianRational base = z;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

/// Parses "p", "-p", or "p/q" decimal strings into an exact rational.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("malformed rational: empty string");
    auto check_digits = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("malformed rational: " + s);
        size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) throw std::invalid_argument("malformed rational: " + s);
        for (size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("malformed rational: " + s);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_digits(s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_digits(num);
    check_digits(den);
    Int d(den);
    if (d == 0) throw std::invalid_argument("malformed rational: zero denominator in " + s);
    return make_rat(Int(num), d);
}

/// "p" or "p/q" in lowest terms.
inline std::string rat_str(const Rat& r) { return r.str(); }

/// Real values render as "p/q"; complex ones as "re+im*i" with exact parts.
inline std::string gr_str(const GaussianRational& z) {
    if (z.im == 0) return rat_str(z.re);
    std::string im_part = rat_str(z.im);
    std::string out = (z.re == 0) ? std::string{} : rat_str(z.re);
    if (z.im > 0 && !out.empty()) out += "+";
    out += im_part + "*i";
    return out;
}

/// Rising factorial (x)_n = x(x+1)...(x+n-1) evaluated exactly.
inline GaussianRational rising_factorial(const GaussianRational& x, int n) {
    GaussianRational acc{1};
    for (int k = 0; k < n; ++k) acc *= x + GaussianRational{k};
    return acc;
}

inline Int factorial(int n) {
    Int acc = 1;
    for (int k = 2; k <= n; ++k) acc *= k;
    return acc;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int acc = 1;
    for (int i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

/// q-integer [n]_q = 1 + q + ... + q^{n-1}; division-free, [0]_q = 0.
inline GaussianRational q_integer(int n, const GaussianRational& q) {
    GaussianRational acc{0};
    GaussianRational power{1};
    for (int k = 0; k < n; ++k) {
        acc += power;
        power *= q;
    }
    return acc;
}

}  // namespace olc
