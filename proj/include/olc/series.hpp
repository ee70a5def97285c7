/// @file series.hpp
/// @brief Truncated multivariate formal power series over exact scalars, small
///        exact determinants, and coefficient-level checks tying product
///        generating functions to the linearization functionals.
#pragma once

#include <olc/linearize.hpp>

#include <map>
#include <string>
#include <vector>

namespace olc {

/// Dense-capped sparse series: terms with total degree above the cap are
/// discarded by every operation; retained coefficients are always exact.
class TruncatedSeries {
public:
    TruncatedSeries(int num_vars, int cap);
    static TruncatedSeries constant(int num_vars, int cap, const GaussianRational& c);
    static TruncatedSeries variable(int num_vars, int cap, int index);

    int num_vars() const { return num_vars_; }
    int cap() const { return cap_; }
    GaussianRational coeff(const std::vector<int>& expo) const;
    /// Adds c to the stored coefficient; silently drops terms beyond the cap.
    void add_term(const std::vector<int>& expo, const GaussianRational& c);
    const std::map<std::vector<int>, GaussianRational>& terms() const { return terms_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.num_vars_ == b.num_vars_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

private:
    int num_vars_;
    int cap_;
    std::map<std::vector<int>, GaussianRational> terms_;
};

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_scale(const TruncatedSeries& a, const GaussianRational& s);
/// Requires a nonzero constant term.
TruncatedSeries ts_inverse(const TruncatedSeries& a);
/// Requires constant term 1.
TruncatedSeries ts_log(const TruncatedSeries& a);
/// Requires constant term 0.
TruncatedSeries ts_exp(const TruncatedSeries& a);
/// Integer exponents work on any invertible series; fractional exponents
/// require constant term 1 and go through exp(r log(.)).
TruncatedSeries ts_pow(const TruncatedSeries& a, const GaussianRational& r);

struct SquareMatrix {
    std::vector<std::vector<GaussianRational>> entries;
    int dim() const { return static_cast<int>(entries.size()); }
};

SquareMatrix square_matrix(std::vector<std::vector<GaussianRational>> entries);
/// Cofactor expansion; dimensions stay desk-scale.
GaussianRational matrix_det(const SquareMatrix& a);

/// Coefficientwise check of det(I - XA)^{-beta} against cycle-weighted sums
/// over all box permutations, for every multi-index with total <= cap.
CheckReport macmahon_check(const SquareMatrix& a, const GaussianRational& beta, int cap);

/// Numeric checks of the bordered one-level determinant (including the equal
/// off-diagonal limit), the banded determinant with geometric coefficients,
/// and the product-to-elementary-symmetric simplification. The sample pool
/// supplies x_1..x_m, x_0, a, b in that order.
CheckReport det_identities(int m, const GaussianRational& c,
                           const std::vector<GaussianRational>& samples);

enum class GfIdentity {
    laguerre_power,
    meixner_falling,
    laguerre_pair,
    meixner_pair,
    hermite_exponential,
    charlier_exponential
};

/// Expands the closed-form right side as a TruncatedSeries and compares every
/// coefficient (times factorials) with the matching functional value.
/// vars_a counts the first block of product variables, vars_b the second
/// (pair identities only); x_0 is added automatically where the identity has
/// a free power factor.
CheckReport gf_check(GfIdentity id, const std::map<std::string, GaussianRational>& params,
                     int vars_a, int vars_b, int cap);

/// m!n!s! sum_j binom(m,j) binom(s,n+j-m) binom(s+m-j,m).
GaussianRational power_product_closed_form(int m, int n, int s);
/// m!n!s! sum_j binom(m,j) binom(s,n+j-m) binom(s+m-j,m) c^{-n-j}.
GaussianRational falling_product_closed_form(int m, int n, int s, const GaussianRational& c);

}  // namespace olc
