/// @file combinatorics.hpp
/// @brief Boxed ground sets, exhaustive diagram enumeration, statistics, and
///        exact weighted sums over matchings, set partitions, and permutations.

#pragma once

#include <olc/rational.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace olc {

/// Role of a box inside a ground set.
///   deranged:         elements must leave the box (under the inhomogeneous filter)
///   free_box:         no restriction on where elements go
///   injection_target: elements may be absent, assigned injectively into an
///                     external range instead (mixed_star_sum only)
enum class BoxRole { deranged, free_box, injection_target };

/// Ground set [1..n] split into consecutive boxes. Elements are 1-based,
/// boxes are 0-based indices into `sizes`.
struct BoxedGroundSet {
    std::vector<int> sizes;
    std::vector<BoxRole> roles;  ///< empty means every box is deranged
    int injection_range = 0;     ///< range size for injection_target boxes

    int n() const;
    int box_count() const;
    BoxRole role(int box) const;
    int box_of(int element) const;  ///< element is 1-based
    int box_start(int box) const;   ///< first element of the box, 1-based
    int box_end(int box) const;     ///< last element of the box, 1-based
};

/// All boxes deranged.
BoxedGroundSet ground_set(std::vector<int> sizes);
/// A free box of size n0 in front, followed by deranged boxes.
BoxedGroundSet ground_set_with_free_front(int n0, std::vector<int> sizes);

enum class DiagramKind { matching, partition, permutation };
enum class EnumFilter { all, inhomogeneous };

/// A single combinatorial object. Matchings and partitions are stored as arc
/// lists sorted by left endpoint; partition arcs link successive elements of
/// each block. Permutations store the image table (sigma[i-1] = image of i).
struct DiagramObject {
    DiagramKind kind = DiagramKind::matching;
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> sigma;

    bool operator==(const DiagramObject&) const = default;
};

/// Blocks of a partition-like object (singletons included), sorted by minimum.
std::vector<std::vector<int>> partition_blocks(const DiagramObject& o);
/// Inverse of partition_blocks: rebuild the successive-element arc list.
DiagramObject partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks);

/// Every statistic computed on a diagram. Fields that do not apply to the
/// object's kind are left at zero / empty.
struct StatRecord {
    int cr = 0;      ///< arc crossings, or permutation crossings
    int bl = 0;      ///< blocks (matchings: arcs)
    int sg = 0;      ///< singleton blocks
    int tr = 0;      ///< transient elements (inside a block, neither end)
    int cyc = 0;     ///< cycles of a permutation
    int exc = 0;     ///< i < sigma(i)
    int wex = 0;     ///< i <= sigma(i)
    int drop = 0;    ///< i > sigma(i)
    int ninv = 0;    ///< pairs i < j with sigma(i) < sigma(j)
    int exc_b = 0;   ///< box(sigma(i)) > box(i)
    int drop_b = 0;  ///< box(sigma(i)) < box(i)
    std::vector<int> fix_per_box;  ///< |sigma(S_i) ∩ S_i| per box (permutations)
    std::vector<int> hom_per_box;  ///< arcs with both ends in box i (arc kinds)
    std::vector<int> depth;        ///< depth[i] = #arcs (a,b) with a<i<b; index 0 unused
};

StatRecord statistics(const DiagramObject& o, const BoxedGroundSet& g);

/// Default enumeration size caps; exceeding one raises a size error.
struct EnumCaps {
    int matchings = 12;
    int partitions = 12;
    int permutations = 9;
};

/// Depth-first enumeration in deterministic order: the smallest undecided
/// element always chooses next, and its alternatives are tried in ascending
/// order. The inhomogeneous filter prunes at choice time.
void enumerate(const BoxedGroundSet& g, DiagramKind kind, EnumFilter filter,
               const std::function<void(const DiagramObject&)>& visit,
               const EnumCaps& caps = {});

std::vector<DiagramObject> enumerate_all(const BoxedGroundSet& g, DiagramKind kind,
                                         EnumFilter filter, const EnumCaps& caps = {});

/// Scalar statistics a weight rule may reference.
enum class Stat { cr, bl, sg, tr, cyc, exc, wex, drop, ninv, exc_b, drop_b };

/// One factor base^(sum of coeff * stat) of a weight monomial.
struct WeightTerm {
    GaussianRational base;
    std::vector<std::pair<Stat, int>> exponent;
};

/// Optional per-box factor multiplying the monomial.
///   matching_lambda:    (lam_i^2 - 1)^{hom_i} * lam_i^{|S_i| - 2 hom_i}
///   permutation_lambda: (lam_i - 1)^{fix_i}   * lam_i^{|S_i| - fix_i}
enum class BoxFactorKind { none, matching_lambda, permutation_lambda };

/// A weight rule is data: the object class plus the monomial construction.
struct WeightRule {
    DiagramKind kind = DiagramKind::matching;
    EnumFilter filter = EnumFilter::inhomogeneous;
    std::vector<WeightTerm> terms;
    BoxFactorKind box_factor = BoxFactorKind::none;
    std::vector<GaussianRational> lambdas;
};

/// Exact sum of the rule's weight over the object class. Enumeration results
/// are aggregated into a (statistics -> count) table that is cached per
/// (ground set, class, referenced statistics), so repeated sums over the same
/// class at different parameter points enumerate only once.
GaussianRational weighted_sum(const BoxedGroundSet& g, const WeightRule& rule,
                              const EnumCaps& caps = {});

/// Sum over tuples (sigma, injections): injection_target boxes contribute a
/// present subset (permuted, still leaving their box) while their absent
/// elements map injectively into [1..injection_range]; all other boxes are
/// fully present. The rule is evaluated on the permutation of the present
/// elements, and each tuple counts with the number of injections.
GaussianRational mixed_star_sum(const BoxedGroundSet& g, const WeightRule& rule,
                                const EnumCaps& caps = {});

/// Sum of beta^cycles over all injections from a set of size m into the
/// union of that set with a disjoint set of size extra.
GaussianRational injection_cycle_sum(int m, int extra, const GaussianRational& beta);

/// Prebuilt weight rules for the classes the engine is used with.
namespace rules {

WeightRule matching_count();
WeightRule matching_crossings(const GaussianRational& q);
/// All matchings, per-box scaling factors (matching_lambda form).
WeightRule matching_scaled(const std::vector<GaussianRational>& lambdas);

WeightRule partition_block_count(const GaussianRational& a);
/// a^(bl-sg) * b^tr * c^sg * q^cr; on the inhomogeneous class sg = 0.
WeightRule partition_qweight(const GaussianRational& a, const GaussianRational& b,
                             const GaussianRational& c, const GaussianRational& q,
                             EnumFilter filter);

WeightRule permutation_cycle_weight(const GaussianRational& t, EnumFilter filter);
/// All permutations, (alpha+1)^cyc with per-box scaling (permutation_lambda form).
WeightRule permutation_scaled(const GaussianRational& alpha,
                              const std::vector<GaussianRational>& lambdas);
/// Deranged boxes: beta^cyc * c^exc.
WeightRule derangement_meixner(const GaussianRational& beta, const GaussianRational& c);
/// All permutations: beta^cyc * c^wex.
WeightRule permutation_meixner_moment(const GaussianRational& beta, const GaussianRational& c);
/// Deranged boxes: (delta+i)^drop * (delta-i)^exc * eta^cyc.
WeightRule derangement_meixner_pollaczek(const GaussianRational& delta, const GaussianRational& eta);
/// All permutations: additionally delta^(wex-exc) on fixed points.
WeightRule permutation_meixner_pollaczek_moment(const GaussianRational& delta, const GaussianRational& eta);
/// Deranged boxes: y^exc * q^cr.
WeightRule derangement_qlaguerre(const GaussianRational& y, const GaussianRational& q);
/// All permutations: y^wex * q^cr.
WeightRule permutation_qlaguerre_moment(const GaussianRational& y, const GaussianRational& q);
/// beta^cyc * c^(-exc_b): box-level excedances, free boxes weightless inside.
WeightRule star_meixner(const GaussianRational& beta, const GaussianRational& c);

}  // namespace rules

}  // namespace olc
