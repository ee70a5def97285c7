/// @file linearize.hpp
/// @brief Linearization functionals L(prod p_{n_j}(lambda_j x)) and their
///        generalized variants, the difference-system and boundary checks
///        that pin them down, and the combinatorial sums they equal.

#pragma once

#include <olc/combinatorics.hpp>
#include <olc/family.hpp>
#include <olc/moments.hpp>

#include <string>
#include <vector>

namespace olc {

/// Index (n_1..n_m) with per-factor argument scalings; the last scaling
/// defaults to 1, matching the convention that the final factor is p_{n_m}(x).
struct MultiIndex {
    std::vector<int> entries;
    std::vector<GaussianRational> scalings;  // empty means all 1

    int m() const { return static_cast<int>(entries.size()); }
    int total() const;
    GaussianRational scaling(int j) const;  // 0-based
    /// Entry j shifted by +-1; negative results are rejected.
    MultiIndex shifted(int j, int delta) const;
};

MultiIndex multi_index(std::vector<int> entries, std::vector<GaussianRational> scalings = {});

/// L(prod_j p_{n_j}(lambda_j x)) through the moment functional.
GaussianRational linearization(MomentFunctional& L, const MultiIndex& idx);

/// The family's combinatorial sum for idx, by exhaustive enumeration with the
/// family's own parameters. Scalings are supported for hermite and laguerre
/// only; families without a combinatorial rule throw.
GaussianRational combinatorial_value(const FamilySpec& f, const MultiIndex& idx);

/// Equality verdict with both sides, for machine-readable reporting.
struct CheckReport {
    bool ok = false;
    GaussianRational lhs;
    GaussianRational rhs;
    std::string note;
};

/// Checks that the functional value ties to the combinatorial sum under the
/// family's prefactor rule: identity families compare directly; the inverse-c
/// rule compares (-1)^total * linearization against the sum at c -> 1/c.
CheckReport linearization_matches_combinatorics(const FamilySpec& f, const MultiIndex& idx);

enum class XMode { none, monomial, falling_factorial };

/// L((x^n0 or falling-factorial_n0(x)) * prod p_{n_j}(lambda_j x)) with the
/// definition's explicit prefactor: meixner with falling factorials carries
/// (-1)^total c^{-n0} (1-c)^{n0}; everything else is the bare functional.
GaussianRational generalized_moment_product(MomentFunctional& L, int n0, XMode mode,
                                            const MultiIndex& idx);

/// Mixed product of one family pair differing in their second parameter:
/// laguerre alpha/beta uses x^m, meixner uses the falling factorial with the
/// same prefactor as generalized_moment_product. The functional is fA's.
GaussianRational mixed_linearization(const FamilySpec& fA, const FamilySpec& fB, int m,
                                     const MultiIndex& idxA, const MultiIndex& idxB);

/// Evaluates both sides of the symmetric difference system
///   I_j+/v_j - I_k+/v_k
///     = [B_{n_j}/v_j - B_{n_k}/v_k] I - C_{n_j}/v_j I_j- + C_{n_k}/v_k I_k-
/// with v_t = A_{n_t} lambda_t; the I_t- term is absent when n_t = 0.
/// Indices j, k are 0-based and distinct.
CheckReport check_difference_system(MomentFunctional& L, const MultiIndex& idx, int j, int k);

/// Verifies the boundary values that pin the solution down for m factors:
/// value 1 at the zero index, the two-point rule for one raised entry against
/// a final entry n in {0, 1}, and vanishing whenever the first m-1 entries
/// sum below the last. Scans a small grid and two scaling samples.
CheckReport check_boundary(MomentFunctional& L, int m);

/// Expansion x^n = sum_k coeff[k] p_k(x) for the meixner family, by the
/// closed product formula; verified against direct conversion in tests.
std::vector<GaussianRational> connection_coefficients(const FamilySpec& f, int n);

}  // namespace olc
