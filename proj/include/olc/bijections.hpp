/// @file bijections.hpp
/// @brief Statistics-preserving bijections on inhomogeneous set partitions:
///        marked decompositions, a depth-preserving Motzkin-path pairing, and
///        the box-cycling and box-swapping maps assembled from them.

#pragma once

#include <olc/combinatorics.hpp>

#include <map>
#include <utility>
#include <vector>

namespace olc {

/// Lattice step of a Motzkin path.
enum class MotzkinStep { rise, level, fall };

/// Motzkin path of a partition of [1..n]: step i rises when i opens a block
/// of size >= 2, falls when i closes one, and stays level otherwise.
/// steps[i-1] is the step of element i; heights[i-1] is the ordinate at which
/// that step starts. The path never goes below 0 and ends at 0.
struct MotzkinProfile {
    std::vector<MotzkinStep> steps;
    std::vector<int> heights;
};

MotzkinProfile motzkin_profile(const DiagramObject& pi);

/// Depth-preserving pairing of block minima with block maxima. Singletons are
/// fixed; the opener whose step starts at height h pairs with the first closer
/// to its right whose step starts at height h+1. For every minimum i the image
/// has the same depth: #arcs (a,b) with a < i < b equals the count at the image.
std::map<int, int> psi_pairing(const DiagramObject& pi);

/// Where the marked box(es) of a decomposition scheme sit: one box of size k
/// at the back ([n-k+1, n]), one at the front ([1, k]), or a pair of boxes at
/// the front ([1, n1] and [n1+1, n1+n2]).
enum class SchemeKind { back_box, front_box, front_pair };

struct DecompositionScheme {
    SchemeKind kind = SchemeKind::back_box;
    int n = 0;
    int k = 0;   ///< marked box size (back_box / front_box)
    int n1 = 0;  ///< first front box size (front_pair)
    int n2 = 0;  ///< second front box size (front_pair)
};

DecompositionScheme back_box_scheme(int n, int k);
DecompositionScheme front_box_scheme(int n, int k);
DecompositionScheme front_pair_scheme(int n, int n1, int n2);

/// Split of a partition into an inner partition plus the wiring of the marked
/// box(es). back_box: tau is the restriction to [1, n-k]; marked holds the
/// k elements of tau's range whose block continues into the box (always maxima
/// of tau, and every singleton of tau is marked); sigma[i-1] says that the
/// i-th smallest mark connects to box slot sigma[i-1]. front_box: tau is the
/// restriction to [k+1, n] shifted down by k; marked holds the shifted
/// attachment points (minima of tau, singletons all marked); sigma[i-1] is the
/// front-box element wired to the i-th smallest mark. front_pair: tau is the
/// restriction to [1, n1+n2] kept in place, gamma is the restriction to
/// [n1+n2+1, n] shifted down, marked are the attachment maxima inside tau,
/// gamma_marked the shifted attachment minima inside gamma, and sigma wires
/// the i-th smallest mark to the sigma[i-1]-th smallest gamma mark.
struct Decomposition {
    DiagramObject tau;
    std::vector<int> marked;
    std::vector<int> sigma;
    DiagramObject gamma;
    std::vector<int> gamma_marked;
};

/// Splits pi according to the scheme. The input must be a singleton-free
/// partition of [1..n] with no arc inside a scheme box; violations raise
/// std::invalid_argument naming the offense (singleton found / homogeneous
/// arc found).
Decomposition decompose(const DiagramObject& pi, const DecompositionScheme& scheme);

/// Inverse of decompose: rebuilds the partition from the parts. Validates the
/// decomposition invariants (marks contain the singletons and sit on the
/// required side, sigma is a permutation) before rebuilding.
DiagramObject recompose(const Decomposition& dec, const DecompositionScheme& scheme);

/// Reverses the two-box layout of a partition of [1..n1+n2] whose blocks are
/// singletons or arcs from [1, n1] into (n1, n1+n2]. Arcs are mirrored through
/// the center i -> n1+n2+1-i; the marked maxima are re-marked by rank among
/// the new arc maxima, mirrored singletons stay marked. marks must satisfy
/// sing(pi) subset-of marks subset-of max(pi). Crossings, the mark count, and
/// the total depth over the marks are preserved; applying the reversed-size
/// map again restores the input.
std::pair<DiagramObject, std::vector<int>> reverse_box_pair(
    const DiagramObject& pi, const std::vector<int>& marks, int n1, int n2);

/// Moves the front box of size k to the back: front_box-decomposes, replaces
/// each marked minimum by its psi_pairing image inside tau, and back_box
/// recomposes. For k < i < j, (i,j) is an arc of pi iff (i-k, j-k) is an arc
/// of the image; block count and crossings are preserved.
DiagramObject phi(int n, int k, const DiagramObject& pi);

/// Swaps the two front boxes (sizes n1 and n2): front_pair-decomposes,
/// reverses the box pair on the inner layer, and recomposes with the box
/// sizes exchanged. Arcs with both ends beyond n1+n2 are unchanged; block
/// count and crossings are preserved.
DiagramObject theta(int n1, int n2, const DiagramObject& pi);

}  // namespace olc
