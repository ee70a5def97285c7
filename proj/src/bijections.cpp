#include <olc/bijections.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace olc {

namespace {

// Successor/predecessor tables of a partition's arc chains; slot 0 unused.
struct ChainTables {
    std::vector<int> succ;
    std::vector<int> pred;
};

ChainTables chain_tables(const DiagramObject& pi) {
    if (pi.kind != DiagramKind::partition)
        throw std::invalid_argument("object is not a partition");
    if (pi.n < 0) throw std::invalid_argument("ground size must be nonnegative");
    ChainTables t{std::vector<int>(pi.n + 1, 0), std::vector<int>(pi.n + 1, 0)};
    for (const auto& [a, b] : pi.arcs) {
        if (a < 1 || b <= a || b > pi.n)
            throw std::invalid_argument("arc out of range");
        if (t.succ[a] != 0 || t.pred[b] != 0)
            throw std::invalid_argument("element carries two arcs on one side");
        t.succ[a] = b;
        t.pred[b] = a;
    }
    return t;
}

DiagramObject partition_from_arcs(int n, std::vector<std::pair<int, int>> arcs) {
    std::sort(arcs.begin(), arcs.end());
    return DiagramObject{DiagramKind::partition, n, std::move(arcs), {}};
}

// Restriction to the interval [lo, hi], relabeled to [1, hi-lo+1] when
// shift is true: blocks are intersected and their surviving elements rechained.
DiagramObject restriction(const DiagramObject& pi, int lo, int hi, bool shift) {
    const int offset = shift ? lo - 1 : 0;
    const int size = hi - lo + 1;
    std::vector<std::pair<int, int>> arcs;
    for (const auto& block : partition_blocks(pi)) {
        int prev = 0;
        for (int e : block) {
            if (e < lo || e > hi) continue;
            if (prev != 0) arcs.emplace_back(prev - offset, e - offset);
            prev = e;
        }
    }
    return partition_from_arcs(shift ? size : hi, std::move(arcs));
}

void require_no_singleton(const ChainTables& t, int n) {
    for (int i = 1; i <= n; ++i)
        if (t.succ[i] == 0 && t.pred[i] == 0)
            throw std::invalid_argument("domain violation: singleton found at element " +
                                        std::to_string(i));
}

void require_no_arc_inside(const DiagramObject& pi, int lo, int hi) {
    for (const auto& [a, b] : pi.arcs)
        if (a >= lo && b <= hi)
            throw std::invalid_argument("domain violation: homogeneous arc found (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
}

bool is_sorted_unique(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

void require_permutation(const std::vector<int>& sigma) {
    const int k = static_cast<int>(sigma.size());
    std::vector<char> seen(k + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > k || seen[v])
            throw std::invalid_argument("sigma is not a permutation");
        seen[v] = 1;
    }
}

// Marks must be sorted, contain every singleton, and sit on the stated side
// (maxima when on_maxima, minima otherwise).
void require_marks(const DiagramObject& pi, const std::vector<int>& marks, bool on_maxima,
                   const char* where) {
    const ChainTables t = chain_tables(pi);
    if (!is_sorted_unique(marks))
        throw std::invalid_argument(std::string(where) + ": marks must be strictly increasing");
    std::vector<char> marked(pi.n + 1, 0);
    for (int m : marks) {
        if (m < 1 || m > pi.n)
            throw std::invalid_argument(std::string(where) + ": mark out of range");
        const bool side_ok = on_maxima ? t.succ[m] == 0 : t.pred[m] == 0;
        if (!side_ok)
            throw std::invalid_argument(std::string(where) + ": mark is not on the required side");
        marked[m] = 1;
    }
    for (int i = 1; i <= pi.n; ++i)
        if (t.succ[i] == 0 && t.pred[i] == 0 && !marked[i])
            throw std::invalid_argument(std::string(where) + ": singleton left unmarked");
}

void require_scheme(const DecompositionScheme& s) {
    switch (s.kind) {
        case SchemeKind::back_box:
        case SchemeKind::front_box:
            if (s.n < 2 || s.k < 1 || s.k >= s.n)
                throw std::invalid_argument("box size must satisfy 1 <= k < n");
            return;
        case SchemeKind::front_pair:
            if (s.n1 < 1 || s.n2 < 1 || s.n < s.n1 + s.n2)
                throw std::invalid_argument("front boxes must fit: 1 <= n1, n2 and n1+n2 <= n");
            return;
    }
    throw std::invalid_argument("unknown scheme kind");
}

}  // namespace

MotzkinProfile motzkin_profile(const DiagramObject& pi) {
    const ChainTables t = chain_tables(pi);
    MotzkinProfile profile;
    profile.steps.reserve(pi.n);
    profile.heights.reserve(pi.n);
    int h = 0;
    for (int i = 1; i <= pi.n; ++i) {
        const bool opens = t.pred[i] == 0 && t.succ[i] != 0;
        const bool closes = t.succ[i] == 0 && t.pred[i] != 0;
        profile.heights.push_back(h);
        if (opens) {
            profile.steps.push_back(MotzkinStep::rise);
            ++h;
        } else if (closes) {
            profile.steps.push_back(MotzkinStep::fall);
            --h;
        } else {
            profile.steps.push_back(MotzkinStep::level);
        }
        if (h < 0) throw std::logic_error("path fell below the axis");
    }
    if (h != 0) throw std::logic_error("path does not return to the axis");
    return profile;
}

std::map<int, int> psi_pairing(const DiagramObject& pi) {
    const ChainTables t = chain_tables(pi);
    const MotzkinProfile profile = motzkin_profile(pi);
    std::map<int, int> pairing;
    std::vector<std::vector<int>> open;
    for (int i = 1; i <= pi.n; ++i) {
        const int h = profile.heights[i - 1];
        switch (profile.steps[i - 1]) {
            case MotzkinStep::rise:
                if (static_cast<int>(open.size()) <= h) open.resize(h + 1);
                open[h].push_back(i);
                break;
            case MotzkinStep::fall:
                pairing[open[h - 1].back()] = i;
                open[h - 1].pop_back();
                break;
            case MotzkinStep::level:
                if (t.pred[i] == 0 && t.succ[i] == 0) pairing[i] = i;
                break;
        }
    }
    return pairing;
}

DecompositionScheme back_box_scheme(int n, int k) {
    DecompositionScheme s{SchemeKind::back_box, n, k, 0, 0};
    require_scheme(s);
    return s;
}

DecompositionScheme front_box_scheme(int n, int k) {
    DecompositionScheme s{SchemeKind::front_box, n, k, 0, 0};
    require_scheme(s);
    return s;
}

DecompositionScheme front_pair_scheme(int n, int n1, int n2) {
    DecompositionScheme s{SchemeKind::front_pair, n, 0, n1, n2};
    require_scheme(s);
    return s;
}

Decomposition decompose(const DiagramObject& pi, const DecompositionScheme& scheme) {
    require_scheme(scheme);
    const ChainTables t = chain_tables(pi);
    if (pi.n != scheme.n) throw std::invalid_argument("partition size does not match the scheme");
    require_no_singleton(t, pi.n);

    Decomposition dec;
    if (scheme.kind == SchemeKind::back_box) {
        const int inner = scheme.n - scheme.k;
        require_no_arc_inside(pi, inner + 1, scheme.n);
        dec.tau = restriction(pi, 1, inner, false);
        for (int i = 1; i <= inner; ++i)
            if (t.succ[i] > inner) dec.marked.push_back(i);
        for (int m : dec.marked) dec.sigma.push_back(t.succ[m] - inner);
    } else if (scheme.kind == SchemeKind::front_box) {
        require_no_arc_inside(pi, 1, scheme.k);
        dec.tau = restriction(pi, scheme.k + 1, scheme.n, true);
        for (int i = scheme.k + 1; i <= scheme.n; ++i)
            if (t.pred[i] != 0 && t.pred[i] <= scheme.k) dec.marked.push_back(i - scheme.k);
        for (int m : dec.marked) dec.sigma.push_back(t.pred[m + scheme.k]);
    } else {
        const int split = scheme.n1 + scheme.n2;
        require_no_arc_inside(pi, 1, scheme.n1);
        {
            // Arcs inside the second front box violate the domain as well.
            for (const auto& [a, b] : pi.arcs)
                if (a > scheme.n1 && b <= split)
                    throw std::invalid_argument("domain violation: homogeneous arc found (" +
                                                std::to_string(a) + "," + std::to_string(b) + ")");
        }
        dec.tau = restriction(pi, 1, split, false);
        dec.gamma = restriction(pi, split + 1, scheme.n, true);
        for (int i = 1; i <= split; ++i)
            if (t.succ[i] > split) dec.marked.push_back(i);
        for (int i = split + 1; i <= scheme.n; ++i)
            if (t.pred[i] != 0 && t.pred[i] <= split) dec.gamma_marked.push_back(i - split);
        for (int m : dec.marked) {
            const int target = t.succ[m] - split;
            const auto it =
                std::lower_bound(dec.gamma_marked.begin(), dec.gamma_marked.end(), target);
            dec.sigma.push_back(static_cast<int>(it - dec.gamma_marked.begin()) + 1);
        }
    }
    return dec;
}

DiagramObject recompose(const Decomposition& dec, const DecompositionScheme& scheme) {
    require_scheme(scheme);
    const int k = static_cast<int>(dec.marked.size());
    if (static_cast<int>(dec.sigma.size()) != k)
        throw std::invalid_argument("sigma size does not match the number of marks");
    require_permutation(dec.sigma);

    std::vector<std::pair<int, int>> arcs;
    if (scheme.kind == SchemeKind::back_box) {
        if (k != scheme.k) throw std::invalid_argument("mark count does not match the box size");
        if (dec.tau.n != scheme.n - scheme.k)
            throw std::invalid_argument("inner partition has the wrong size");
        require_marks(dec.tau, dec.marked, true, "recompose");
        arcs = dec.tau.arcs;
        for (int i = 0; i < k; ++i)
            arcs.emplace_back(dec.marked[i], dec.tau.n + dec.sigma[i]);
    } else if (scheme.kind == SchemeKind::front_box) {
        if (k != scheme.k) throw std::invalid_argument("mark count does not match the box size");
        if (dec.tau.n != scheme.n - scheme.k)
            throw std::invalid_argument("inner partition has the wrong size");
        require_marks(dec.tau, dec.marked, false, "recompose");
        for (const auto& [a, b] : dec.tau.arcs) arcs.emplace_back(a + scheme.k, b + scheme.k);
        for (int i = 0; i < k; ++i)
            arcs.emplace_back(dec.sigma[i], dec.marked[i] + scheme.k);
    } else {
        const int split = scheme.n1 + scheme.n2;
        if (dec.tau.n != split || dec.gamma.n != scheme.n - split)
            throw std::invalid_argument("inner partition has the wrong size");
        if (static_cast<int>(dec.gamma_marked.size()) != k)
            throw std::invalid_argument("the two marked sets must have equal size");
        require_marks(dec.tau, dec.marked, true, "recompose");
        require_marks(dec.gamma, dec.gamma_marked, false, "recompose");
        require_no_arc_inside(dec.tau, 1, scheme.n1);
        for (const auto& [a, b] : dec.tau.arcs)
            if (a > scheme.n1)
                throw std::invalid_argument("domain violation: homogeneous arc found (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
        arcs = dec.tau.arcs;
        for (const auto& [a, b] : dec.gamma.arcs) arcs.emplace_back(a + split, b + split);
        for (int i = 0; i < k; ++i)
            arcs.emplace_back(dec.marked[i], dec.gamma_marked[dec.sigma[i] - 1] + split);
    }
    return partition_from_arcs(scheme.n, std::move(arcs));
}

std::pair<DiagramObject, std::vector<int>> reverse_box_pair(const DiagramObject& pi,
                                                            const std::vector<int>& marks,
                                                            int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("box sizes must be positive");
    if (pi.n != n1 + n2) throw std::invalid_argument("partition size does not match the boxes");
    const int total = n1 + n2;
    for (const auto& [a, b] : pi.arcs)
        if (b <= n1 || a > n1)
            throw std::invalid_argument("domain violation: homogeneous arc found (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
    require_marks(pi, marks, true, "reverse_box_pair");

    std::vector<int> lefts, rights;
    std::vector<std::pair<int, int>> mirrored;
    for (const auto& [a, b] : pi.arcs) {
        lefts.push_back(a);
        rights.push_back(b);
        mirrored.emplace_back(total + 1 - b, total + 1 - a);
    }
    std::sort(rights.begin(), rights.end());
    // New maxima are the mirrored left endpoints; marks transfer by rank.
    std::vector<int> new_rights;
    for (int a : lefts) new_rights.push_back(total + 1 - a);
    std::sort(new_rights.begin(), new_rights.end());

    std::vector<int> new_marks;
    for (int m : marks) {
        const auto it = std::lower_bound(rights.begin(), rights.end(), m);
        if (it != rights.end() && *it == m)
            new_marks.push_back(new_rights[it - rights.begin()]);
        else
            new_marks.push_back(total + 1 - m);  // mirrored singleton
    }
    std::sort(new_marks.begin(), new_marks.end());
    return {partition_from_arcs(total, std::move(mirrored)), std::move(new_marks)};
}

DiagramObject phi(int n, int k, const DiagramObject& pi) {
    if (pi.n != n) throw std::invalid_argument("partition size does not match n");
    Decomposition dec = decompose(pi, front_box_scheme(n, k));
    const std::map<int, int> pairing = psi_pairing(dec.tau);
    // The marked set is replaced by its pairing image and re-sorted; sigma is
    // kept verbatim, its i-th slot now wiring the i-th smallest new mark.
    std::vector<int> images;
    images.reserve(dec.marked.size());
    for (int m : dec.marked) images.push_back(pairing.at(m));
    std::sort(images.begin(), images.end());
    dec.marked = std::move(images);
    return recompose(dec, back_box_scheme(n, k));
}

DiagramObject theta(int n1, int n2, const DiagramObject& pi) {
    Decomposition dec = decompose(pi, front_pair_scheme(pi.n, n1, n2));
    // The inner layer is flipped and re-marked; sigma is kept verbatim, its
    // i-th slot now wiring the i-th smallest new mark.
    auto [flipped, new_marks] = reverse_box_pair(dec.tau, dec.marked, n1, n2);
    dec.tau = std::move(flipped);
    dec.marked = std::move(new_marks);
    return recompose(dec, front_pair_scheme(pi.n, n2, n1));
}

}  // namespace olc
