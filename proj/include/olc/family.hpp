/// @file family.hpp
/// @brief Orthogonal polynomial families as three-term recurrence coefficient
///        generators: p_{n+1} = (A_n x + B_n) p_n - C_n p_{n-1}, p_0 = 1.

#pragma once

#include <olc/poly.hpp>

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace olc {

/// How the functional value L(prod p_{n_j}) maps to the combinatorial sum:
/// identity, or the Meixner rule (sign (-1)^{sum n_j}, weight uses 1/c).
enum class PrefactorRule { identity, meixner_inverse_c };

struct FamilySpec {
    std::string name;
    std::map<std::string, GaussianRational> params;
    /// n -> (A_n, B_n, C_n); C_0 is never consumed by the recurrence.
    std::function<std::array<GaussianRational, 3>(int)> coeff_fn;
    PrefactorRule prefactor = PrefactorRule::identity;
    int max_degree_validated = 64;
};

struct BirthDeathSpec {
    std::function<GaussianRational(int)> b_fn;
    std::function<GaussianRational(int)> d_fn;
};

/// Registered family names in CLI order.
std::vector<std::string> family_names();

/// Parameter keys a family requires, e.g. {"beta", "c"} for meixner.
std::vector<std::string> family_param_keys(const std::string& name);

/// Builds a registered family; validates presence of parameters and rejects
/// values that make a recurrence coefficient undefined (e.g. meixner c = 0, 1).
FamilySpec make_family(const std::string& name,
                       const std::map<std::string, GaussianRational>& params);

/// (A_n, B_n, C_n); throws if A_n = 0 or a rate denominator vanishes at n.
std::array<GaussianRational, 3> recurrence_coeffs(const FamilySpec& f, int n);

/// Converts rates to recurrence coefficients by rearranging
/// -x Q_n = b_n Q_{n+1} + d_n Q_{n-1} - (b_n + d_n) Q_n.
FamilySpec from_birth_death(const BirthDeathSpec& bd);

/// Birth-death family from textual polynomial rules in n, e.g. b = "n+1".
FamilySpec make_birth_death_family(const std::string& b_rule, const std::string& d_rule);

/// Parses a rational-coefficient polynomial rule in n: "n^2+3n+1/2", "2", "n".
Poly parse_rate_rule(const std::string& rule);

/// The degree-n polynomial generated by the recurrence.
Poly polynomial(const FamilySpec& f, int n);

/// zeta_n = (A_0/A_n) C_1 ... C_n, the squared norm L(p_n^2); zeta_0 = 1.
GaussianRational norm_zeta(const FamilySpec& f, int n);

/// Expansion coefficients of p_n(cx) in the family's own basis {p_k}:
/// result[k] satisfies p_n(cx) = sum_k result[k] p_k(x).
/// Supported for laguerre and hermite (closed-form coefficient products).
std::vector<GaussianRational> multiplication_expand(const FamilySpec& f,
                                                    const GaussianRational& c, int n);

}  // namespace olc
