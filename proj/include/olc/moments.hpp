/// @file moments.hpp
/// @brief The normalized moment functional of a family (mu_0 = 1), computed
///        from the recurrence by weighted Motzkin-path dynamic programming,
///        plus independent combinatorial moment formulas for cross-checks.

#pragma once

#include <olc/combinatorics.hpp>
#include <olc/family.hpp>
#include <olc/poly.hpp>

#include <vector>

namespace olc {

/// Linear functional L with L(1) = 1 and L(p_m p_n) = zeta_n delta_{mn}.
/// Moments are memoized; the memo is append-only, so copies stay cheap to
/// reuse but concurrent use needs one instance per thread.
class MomentFunctional {
  public:
    explicit MomentFunctional(FamilySpec family);

    const FamilySpec& family() const { return family_; }

    /// Monic recurrence term b_n = -B_n / A_n.
    GaussianRational monic_b(int n);

    /// Monic recurrence term lambda_n = C_n / (A_{n-1} A_n).
    GaussianRational monic_lambda(int n);

    /// mu_n, the sum over Motzkin paths of length n weighted by b at level
    /// steps and lambda at down steps. Uses only b_0..b_{floor((n-1)/2)} and
    /// lambda_1..lambda_{floor(n/2)}.
    GaussianRational moment(int n);

    /// Linear extension: sum of coeff_k * mu_k.
    GaussianRational apply(const Poly& p);

    /// The family's degree-n polynomial, memoized alongside the moments.
    const Poly& basis_polynomial(int n);

  private:
    FamilySpec family_;
    std::vector<GaussianRational> b_memo_;
    std::vector<GaussianRational> lambda_memo_;
    std::vector<GaussianRational> moment_memo_;
    std::vector<Poly> poly_memo_;
};

/// The family's combinatorial moment sum, by exhaustive enumeration (or the
/// Stirling triangle for charlier). Supported families: charlier, meixner,
/// meixner-pollaczek, q-charlier, q-laguerre; others throw.
GaussianRational moment_combinatorial(const FamilySpec& family, int n);

/// Stirling numbers of the second kind by the triangle recurrence.
Int stirling2(int n, int k);

}  // namespace olc
