#include <olc/combinatorics.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace olc {

namespace {

void validate_ground_set(const BoxedGroundSet& g) {
    for (int s : g.sizes)
        if (s < 0) throw std::invalid_argument("box sizes must be nonnegative");
    if (!g.roles.empty() && g.roles.size() != g.sizes.size())
        throw std::invalid_argument("roles must be empty or match the number of boxes");
    if (g.box_count() > 63) throw std::invalid_argument("too many boxes");
}

}  // namespace

int BoxedGroundSet::n() const {
    int total = 0;
    for (int s : sizes) total += s;
    return total;
}

int BoxedGroundSet::box_count() const { return static_cast<int>(sizes.size()); }

BoxRole BoxedGroundSet::role(int box) const {
    if (box < 0 || box >= box_count()) throw std::out_of_range("box index out of range");
    return roles.empty() ? BoxRole::deranged : roles[static_cast<size_t>(box)];
}

int BoxedGroundSet::box_of(int element) const {
    if (element < 1) throw std::out_of_range("elements are 1-based");
    int upper = 0;
    for (int b = 0; b < box_count(); ++b) {
        upper += sizes[static_cast<size_t>(b)];
        if (element <= upper) return b;
    }
    throw std::out_of_range("element beyond the ground set");
}

int BoxedGroundSet::box_start(int box) const {
    if (box < 0 || box >= box_count()) throw std::out_of_range("box index out of range");
    int start = 1;
    for (int b = 0; b < box; ++b) start += sizes[static_cast<size_t>(b)];
    return start;
}

int BoxedGroundSet::box_end(int box) const { return box_start(box) + sizes[static_cast<size_t>(box)] - 1; }

BoxedGroundSet ground_set(std::vector<int> sizes) {
    BoxedGroundSet g;
    g.sizes = std::move(sizes);
    validate_ground_set(g);
    return g;
}

BoxedGroundSet ground_set_with_free_front(int n0, std::vector<int> sizes) {
    BoxedGroundSet g;
    g.sizes.push_back(n0);
    g.roles.push_back(BoxRole::free_box);
    for (int s : sizes) {
        g.sizes.push_back(s);
        g.roles.push_back(BoxRole::deranged);
    }
    validate_ground_set(g);
    return g;
}

std::vector<std::vector<int>> partition_blocks(const DiagramObject& o) {
    std::vector<int> succ(static_cast<size_t>(o.n) + 1, 0);
    std::vector<int> pred(static_cast<size_t>(o.n) + 1, 0);
    for (const auto& [a, b] : o.arcs) {
        if (a < 1 || b <= a || b > o.n) throw std::invalid_argument("malformed arc");
        if (succ[static_cast<size_t>(a)] != 0 || pred[static_cast<size_t>(b)] != 0)
            throw std::invalid_argument("element has two successors or two predecessors");
        succ[static_cast<size_t>(a)] = b;
        pred[static_cast<size_t>(b)] = a;
    }
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= o.n; ++i) {
        if (pred[static_cast<size_t>(i)] != 0) continue;
        std::vector<int> block;
        for (int j = i; j != 0; j = succ[static_cast<size_t>(j)]) block.push_back(j);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

DiagramObject partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    DiagramObject o;
    o.kind = DiagramKind::partition;
    o.n = n;
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty block");
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (int e : sorted) {
            if (e < 1 || e > n || seen[static_cast<size_t>(e)])
                throw std::invalid_argument("blocks must partition the ground set");
            seen[static_cast<size_t>(e)] = 1;
        }
        for (size_t t = 0; t + 1 < sorted.size(); ++t) o.arcs.emplace_back(sorted[t], sorted[t + 1]);
    }
    for (int e = 1; e <= n; ++e)
        if (!seen[static_cast<size_t>(e)]) throw std::invalid_argument("blocks must cover the ground set");
    std::sort(o.arcs.begin(), o.arcs.end());
    return o;
}

StatRecord statistics(const DiagramObject& o, const BoxedGroundSet& g) {
    validate_ground_set(g);
    if (g.n() != o.n) throw std::invalid_argument("ground set size does not match the object");
    StatRecord s;
    const int n = o.n;
    const int m = g.box_count();
    if (o.kind == DiagramKind::permutation) {
        const auto& sig = o.sigma;
        if (static_cast<int>(sig.size()) != n) throw std::invalid_argument("image table size mismatch");
        s.fix_per_box.assign(static_cast<size_t>(m), 0);
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) {
            const int v = sig[static_cast<size_t>(i - 1)];
            if (i < v) ++s.exc;
            if (i <= v) ++s.wex;
            if (i > v) ++s.drop;
            const int bi = g.box_of(i);
            const int bv = g.box_of(v);
            if (bv > bi) ++s.exc_b;
            if (bv < bi) ++s.drop_b;
            if (bv == bi) ++s.fix_per_box[static_cast<size_t>(bi)];
            if (!seen[static_cast<size_t>(i)]) {
                ++s.cyc;
                for (int j = i; !seen[static_cast<size_t>(j)]; j = sig[static_cast<size_t>(j - 1)])
                    seen[static_cast<size_t>(j)] = 1;
            }
        }
        for (int i = 1; i <= n; ++i) {
            const int si = sig[static_cast<size_t>(i - 1)];
            for (int j = 1; j <= n; ++j) {
                const int sj = sig[static_cast<size_t>(j - 1)];
                if (j < i && i <= sj && sj < si) ++s.cr;
                if (j > i && i > sj && sj > si) ++s.cr;
                if (j > i && sj > si) ++s.ninv;
            }
        }
    } else {
        const auto& arcs = o.arcs;
        for (size_t p = 0; p < arcs.size(); ++p)
            for (size_t r = p + 1; r < arcs.size(); ++r) {
                const auto& [a1, b1] = arcs[p];
                const auto& [a2, b2] = arcs[r];
                if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)) ++s.cr;
            }
        const auto blocks = partition_blocks(o);
        s.bl = static_cast<int>(blocks.size());
        for (const auto& block : blocks) {
            if (block.size() == 1) ++s.sg;
            if (block.size() >= 3) s.tr += static_cast<int>(block.size()) - 2;
        }
        s.hom_per_box.assign(static_cast<size_t>(m), 0);
        for (const auto& [a, b] : arcs) {
            const int ba = g.box_of(a);
            if (ba == g.box_of(b)) ++s.hom_per_box[static_cast<size_t>(ba)];
        }
        s.depth.assign(static_cast<size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i)
            for (const auto& [a, b] : arcs)
                if (a < i && i < b) ++s.depth[static_cast<size_t>(i)];
    }
    return s;
}

namespace {

void check_enumerable(const BoxedGroundSet& g, DiagramKind kind, const EnumCaps& caps) {
    validate_ground_set(g);
    for (int b = 0; b < g.box_count(); ++b)
        if (g.role(b) == BoxRole::injection_target)
            throw std::invalid_argument("injection_target boxes are handled by mixed_star_sum only");
    const int n = g.n();
    const int cap = kind == DiagramKind::matching     ? caps.matchings
                    : kind == DiagramKind::partition  ? caps.partitions
                                                      : caps.permutations;
    if (n > cap) {
        std::ostringstream os;
        os << "enumeration size n = " << n << " exceeds cap " << cap;
        throw std::domain_error(os.str());
    }
}

void enumerate_matchings(const BoxedGroundSet& g, EnumFilter filter,
                         const std::function<void(const DiagramObject&)>& visit) {
    const int n = g.n();
    if (n % 2 != 0) return;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> arcs;
    std::function<void(int)> rec = [&](int i) {
        while (i <= n && used[static_cast<size_t>(i)]) ++i;
        if (i > n) {
            visit(DiagramObject{DiagramKind::matching, n, arcs, {}});
            return;
        }
        const int bi = g.box_of(i);
        used[static_cast<size_t>(i)] = 1;
        for (int j = i + 1; j <= n; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            if (filter == EnumFilter::inhomogeneous && g.box_of(j) == bi && g.role(bi) == BoxRole::deranged)
                continue;
            used[static_cast<size_t>(j)] = 1;
            arcs.emplace_back(i, j);
            rec(i + 1);
            arcs.pop_back();
            used[static_cast<size_t>(j)] = 0;
        }
        used[static_cast<size_t>(i)] = 0;
    };
    rec(1);
}

void enumerate_partitions(const BoxedGroundSet& g, EnumFilter filter,
                          const std::function<void(const DiagramObject&)>& visit) {
    const int n = g.n();
    const int last_box = n == 0 ? -1 : g.box_of(n);
    std::vector<std::vector<int>> blocks;
    std::vector<unsigned long long> block_mask;
    std::function<void(int)> rec = [&](int e) {
        if (e > n) {
            if (filter == EnumFilter::inhomogeneous)
                for (const auto& block : blocks)
                    if (block.size() == 1 && g.role(g.box_of(block[0])) != BoxRole::free_box) return;
            std::vector<std::pair<int, int>> arcs;
            for (const auto& block : blocks)
                for (size_t t = 0; t + 1 < block.size(); ++t) arcs.emplace_back(block[t], block[t + 1]);
            std::sort(arcs.begin(), arcs.end());
            visit(DiagramObject{DiagramKind::partition, n, arcs, {}});
            return;
        }
        const int be = g.box_of(e);
        const unsigned long long bit = 1ull << be;
        for (size_t k = 0; k < blocks.size(); ++k) {
            if (filter == EnumFilter::inhomogeneous && (block_mask[k] & bit)) continue;
            blocks[k].push_back(e);
            const auto saved = block_mask[k];
            block_mask[k] |= bit;
            rec(e + 1);
            block_mask[k] = saved;
            blocks[k].pop_back();
        }
        // an element of the final box may not open a block under the
        // inhomogeneous filter: all later elements share its box, so the
        // block would stay a singleton
        if (filter == EnumFilter::inhomogeneous && be == last_box && g.role(be) != BoxRole::free_box)
            return;
        blocks.push_back({e});
        block_mask.push_back(bit);
        rec(e + 1);
        blocks.pop_back();
        block_mask.pop_back();
    };
    rec(1);
}

// Enumerates permutations of an arbitrary sorted element list; img is aligned
// with elements. Deranged boxes forbid images inside the element's own box.
void enumerate_permutations_of(const std::vector<int>& elements, const BoxedGroundSet& g,
                               EnumFilter filter,
                               const std::function<void(const std::vector<int>&)>& visit) {
    const int p = static_cast<int>(elements.size());
    std::vector<char> used(static_cast<size_t>(p), 0);
    std::vector<int> img(static_cast<size_t>(p), 0);
    std::function<void(int)> rec = [&](int t) {
        if (t == p) {
            visit(img);
            return;
        }
        const int bx = g.box_of(elements[static_cast<size_t>(t)]);
        const bool restricted = filter == EnumFilter::inhomogeneous && g.role(bx) != BoxRole::free_box;
        for (int u = 0; u < p; ++u) {
            if (used[static_cast<size_t>(u)]) continue;
            const int v = elements[static_cast<size_t>(u)];
            if (restricted && g.box_of(v) == bx) continue;
            used[static_cast<size_t>(u)] = 1;
            img[static_cast<size_t>(t)] = v;
            rec(t + 1);
            used[static_cast<size_t>(u)] = 0;
        }
    };
    rec(0);
}

}  // namespace

void enumerate(const BoxedGroundSet& g, DiagramKind kind, EnumFilter filter,
               const std::function<void(const DiagramObject&)>& visit, const EnumCaps& caps) {
    check_enumerable(g, kind, caps);
    switch (kind) {
        case DiagramKind::matching:
            enumerate_matchings(g, filter, visit);
            return;
        case DiagramKind::partition:
            enumerate_partitions(g, filter, visit);
            return;
        case DiagramKind::permutation: {
            const int n = g.n();
            std::vector<int> elements(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i) elements[static_cast<size_t>(i - 1)] = i;
            enumerate_permutations_of(elements, g, filter, [&](const std::vector<int>& img) {
                visit(DiagramObject{DiagramKind::permutation, n, {}, img});
            });
            return;
        }
    }
    throw std::invalid_argument("unknown diagram kind");
}

std::vector<DiagramObject> enumerate_all(const BoxedGroundSet& g, DiagramKind kind, EnumFilter filter,
                                         const EnumCaps& caps) {
    std::vector<DiagramObject> out;
    enumerate(g, kind, filter, [&](const DiagramObject& o) { out.push_back(o); }, caps);
    return out;
}

namespace {

constexpr int kStatCount = 11;

int stat_value(const StatRecord& s, Stat st) {
    switch (st) {
        case Stat::cr: return s.cr;
        case Stat::bl: return s.bl;
        case Stat::sg: return s.sg;
        case Stat::tr: return s.tr;
        case Stat::cyc: return s.cyc;
        case Stat::exc: return s.exc;
        case Stat::wex: return s.wex;
        case Stat::drop: return s.drop;
        case Stat::ninv: return s.ninv;
        case Stat::exc_b: return s.exc_b;
        case Stat::drop_b: return s.drop_b;
    }
    throw std::invalid_argument("unknown statistic");
}

GaussianRational rule_weight(const WeightRule& rule, const StatRecord& s, const std::vector<int>& sizes) {
    GaussianRational w(1);
    for (const auto& term : rule.terms) {
        long long e = 0;
        for (const auto& [st, coeff] : term.exponent) e += static_cast<long long>(coeff) * stat_value(s, st);
        w = w * gr_pow(term.base, e);
    }
    if (rule.box_factor == BoxFactorKind::matching_lambda) {
        for (size_t b = 0; b < sizes.size(); ++b) {
            const int hom = b < s.hom_per_box.size() ? s.hom_per_box[b] : 0;
            const auto& lam = rule.lambdas[b];
            w = w * gr_pow(lam * lam - GaussianRational(1), hom) * gr_pow(lam, sizes[b] - 2 * hom);
        }
    } else if (rule.box_factor == BoxFactorKind::permutation_lambda) {
        for (size_t b = 0; b < sizes.size(); ++b) {
            const int fix = b < s.fix_per_box.size() ? s.fix_per_box[b] : 0;
            const auto& lam = rule.lambdas[b];
            w = w * gr_pow(lam - GaussianRational(1), fix) * gr_pow(lam, sizes[b] - fix);
        }
    }
    return w;
}

void check_rule(const WeightRule& rule, const BoxedGroundSet& g) {
    if (rule.box_factor != BoxFactorKind::none &&
        static_cast<int>(rule.lambdas.size()) != g.box_count())
        throw std::invalid_argument("per-box factors need one lambda per box");
}

using AggTable = std::map<std::vector<int>, unsigned long long>;

std::map<std::string, AggTable>& agg_cache() {
    static std::map<std::string, AggTable> cache;
    return cache;
}

std::string agg_key(const BoxedGroundSet& g, DiagramKind kind, EnumFilter filter, unsigned stat_mask,
                    bool per_box) {
    std::ostringstream os;
    os << static_cast<int>(kind) << '|' << static_cast<int>(filter) << '|' << stat_mask << '|' << per_box
       << '|';
    for (int b = 0; b < g.box_count(); ++b)
        os << g.sizes[static_cast<size_t>(b)] << ':' << static_cast<int>(g.role(b)) << ',';
    return os.str();
}

}  // namespace

GaussianRational weighted_sum(const BoxedGroundSet& g, const WeightRule& rule, const EnumCaps& caps) {
    check_rule(rule, g);
    unsigned mask = 0;
    for (const auto& term : rule.terms)
        for (const auto& [st, coeff] : term.exponent) {
            (void)coeff;
            mask |= 1u << static_cast<unsigned>(st);
        }
    const bool per_box = rule.box_factor != BoxFactorKind::none;
    const std::string key = agg_key(g, rule.kind, rule.filter, mask, per_box);
    auto it = agg_cache().find(key);
    if (it == agg_cache().end()) {
        AggTable table;
        enumerate(
            g, rule.kind, rule.filter,
            [&](const DiagramObject& o) {
                const StatRecord s = statistics(o, g);
                std::vector<int> bucket;
                for (int b = 0; b < kStatCount; ++b)
                    if (mask >> static_cast<unsigned>(b) & 1u) bucket.push_back(stat_value(s, static_cast<Stat>(b)));
                if (per_box) {
                    const auto& v = rule.box_factor == BoxFactorKind::matching_lambda ? s.hom_per_box
                                                                                      : s.fix_per_box;
                    bucket.insert(bucket.end(), v.begin(), v.end());
                }
                ++table[bucket];
            },
            caps);
        it = agg_cache().emplace(key, std::move(table)).first;
    }
    GaussianRational total(0);
    for (const auto& [bucket, count] : it->second) {
        StatRecord s;
        size_t pos = 0;
        for (int b = 0; b < kStatCount; ++b)
            if (mask >> static_cast<unsigned>(b) & 1u) {
                const int value = bucket[pos++];
                switch (static_cast<Stat>(b)) {
                    case Stat::cr: s.cr = value; break;
                    case Stat::bl: s.bl = value; break;
                    case Stat::sg: s.sg = value; break;
                    case Stat::tr: s.tr = value; break;
                    case Stat::cyc: s.cyc = value; break;
                    case Stat::exc: s.exc = value; break;
                    case Stat::wex: s.wex = value; break;
                    case Stat::drop: s.drop = value; break;
                    case Stat::ninv: s.ninv = value; break;
                    case Stat::exc_b: s.exc_b = value; break;
                    case Stat::drop_b: s.drop_b = value; break;
                }
            }
        if (per_box) {
            std::vector<int> v(bucket.begin() + static_cast<long>(pos), bucket.end());
            if (rule.box_factor == BoxFactorKind::matching_lambda)
                s.hom_per_box = std::move(v);
            else
                s.fix_per_box = std::move(v);
        }
        total = total + rule_weight(rule, s, g.sizes) * GaussianRational(Rat(Int(count)));
    }
    return total;
}

GaussianRational mixed_star_sum(const BoxedGroundSet& g, const WeightRule& rule, const EnumCaps& caps) {
    validate_ground_set(g);
    check_rule(rule, g);
    if (rule.kind != DiagramKind::permutation)
        throw std::invalid_argument("mixed_star_sum sums over permutations");
    if (g.injection_range < 0) throw std::invalid_argument("injection range must be nonnegative");
    std::vector<int> inj_boxes;
    for (int b = 0; b < g.box_count(); ++b)
        if (g.role(b) == BoxRole::injection_target) inj_boxes.push_back(b);

    std::vector<char> present(static_cast<size_t>(g.n()) + 1, 1);
    GaussianRational total(0);

    std::function<void(size_t, Int)> choose = [&](size_t r, Int mult) {
        if (r == inj_boxes.size()) {
            std::vector<int> elements;
            BoxedGroundSet view;
            view.sizes.assign(static_cast<size_t>(g.box_count()), 0);
            view.roles.resize(static_cast<size_t>(g.box_count()));
            for (int b = 0; b < g.box_count(); ++b)
                view.roles[static_cast<size_t>(b)] =
                    g.role(b) == BoxRole::injection_target ? BoxRole::deranged : g.role(b);
            for (int i = 1; i <= g.n(); ++i)
                if (present[static_cast<size_t>(i)]) {
                    elements.push_back(i);
                    ++view.sizes[static_cast<size_t>(g.box_of(i))];
                }
            if (static_cast<int>(elements.size()) > caps.permutations) {
                std::ostringstream os;
                os << "enumeration size n = " << elements.size() << " exceeds cap " << caps.permutations;
                throw std::domain_error(os.str());
            }
            // compress labels order-isomorphically; order statistics survive
            std::vector<int> rank(static_cast<size_t>(g.n()) + 1, 0);
            for (size_t t = 0; t < elements.size(); ++t) rank[static_cast<size_t>(elements[t])] = static_cast<int>(t) + 1;
            GaussianRational sub(0);
            enumerate_permutations_of(elements, g, rule.filter, [&](const std::vector<int>& img) {
                DiagramObject o;
                o.kind = DiagramKind::permutation;
                o.n = static_cast<int>(elements.size());
                o.sigma.resize(elements.size());
                for (size_t t = 0; t < elements.size(); ++t)
                    o.sigma[t] = rank[static_cast<size_t>(img[t])];
                sub = sub + rule_weight(rule, statistics(o, view), view.sizes);
            });
            total = total + sub * GaussianRational(Rat(mult));
            return;
        }
        const int b = inj_boxes[r];
        const int start = g.box_start(b);
        const int size = g.sizes[static_cast<size_t>(b)];
        for (unsigned subset = 0; subset < (1u << size); ++subset) {
            int absent = 0;
            for (int t = 0; t < size; ++t) {
                const bool in = (subset >> t) & 1u;
                present[static_cast<size_t>(start + t)] = in ? 1 : 0;
                if (!in) ++absent;
            }
            if (absent > g.injection_range) continue;
            Int ways = 1;
            for (int t = 0; t < absent; ++t) ways *= g.injection_range - t;
            choose(r + 1, mult * ways);
        }
        for (int t = 0; t < size; ++t) present[static_cast<size_t>(start + t)] = 1;
    };
    choose(0, Int(1));
    return total;
}

GaussianRational injection_cycle_sum(int m, int extra, const GaussianRational& beta) {
    if (m < 0 || extra < 0) throw std::invalid_argument("set sizes must be nonnegative");
    const int total_range = m + extra;
    std::vector<char> used(static_cast<size_t>(total_range) + 1, 0);
    std::vector<int> img(static_cast<size_t>(m) + 1, 0);
    GaussianRational total(0);
    std::function<void(int)> rec = [&](int i) {
        if (i > m) {
            std::vector<char> visited(static_cast<size_t>(m) + 1, 0);
            int cycles = 0;
            for (int a = 1; a <= m; ++a) {
                if (visited[static_cast<size_t>(a)]) continue;
                // walk the functional path; a lies on a cycle iff it returns to a
                int j = a;
                bool back = false;
                for (int steps = 0; steps <= m; ++steps) {
                    j = img[static_cast<size_t>(j)];
                    if (j < 1 || j > m) break;
                    if (j == a) {
                        back = true;
                        break;
                    }
                }
                if (!back) continue;
                ++cycles;
                for (int j2 = a; !visited[static_cast<size_t>(j2)]; j2 = img[static_cast<size_t>(j2)])
                    visited[static_cast<size_t>(j2)] = 1;
            }
            total = total + gr_pow(beta, cycles);
            return;
        }
        for (int v = 1; v <= total_range; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            img[static_cast<size_t>(i)] = v;
            rec(i + 1);
            used[static_cast<size_t>(v)] = 0;
        }
    };
    rec(1);
    return total;
}

namespace rules {

namespace {
WeightTerm term(const GaussianRational& base, std::vector<std::pair<Stat, int>> exponent) {
    return WeightTerm{base, std::move(exponent)};
}
}  // namespace

WeightRule matching_count() { return {DiagramKind::matching, EnumFilter::inhomogeneous, {}, BoxFactorKind::none, {}}; }

WeightRule matching_crossings(const GaussianRational& q) {
    return {DiagramKind::matching, EnumFilter::inhomogeneous, {term(q, {{Stat::cr, 1}})}, BoxFactorKind::none, {}};
}

WeightRule matching_scaled(const std::vector<GaussianRational>& lambdas) {
    return {DiagramKind::matching, EnumFilter::all, {}, BoxFactorKind::matching_lambda, lambdas};
}

WeightRule partition_block_count(const GaussianRational& a) {
    return {DiagramKind::partition, EnumFilter::inhomogeneous, {term(a, {{Stat::bl, 1}})}, BoxFactorKind::none, {}};
}

WeightRule partition_qweight(const GaussianRational& a, const GaussianRational& b,
                             const GaussianRational& c, const GaussianRational& q, EnumFilter filter) {
    return {DiagramKind::partition,
            filter,
            {term(a, {{Stat::bl, 1}, {Stat::sg, -1}}), term(b, {{Stat::tr, 1}}), term(c, {{Stat::sg, 1}}),
             term(q, {{Stat::cr, 1}})},
            BoxFactorKind::none,
            {}};
}

WeightRule permutation_cycle_weight(const GaussianRational& t, EnumFilter filter) {
    return {DiagramKind::permutation, filter, {term(t, {{Stat::cyc, 1}})}, BoxFactorKind::none, {}};
}

WeightRule permutation_scaled(const GaussianRational& alpha, const std::vector<GaussianRational>& lambdas) {
    return {DiagramKind::permutation,
            EnumFilter::all,
            {term(alpha + GaussianRational(1), {{Stat::cyc, 1}})},
            BoxFactorKind::permutation_lambda,
            lambdas};
}

WeightRule derangement_meixner(const GaussianRational& beta, const GaussianRational& c) {
    return {DiagramKind::permutation,
            EnumFilter::inhomogeneous,
            {term(beta, {{Stat::cyc, 1}}), term(c, {{Stat::exc, 1}})},
            BoxFactorKind::none,
            {}};
}

WeightRule permutation_meixner_moment(const GaussianRational& beta, const GaussianRational& c) {
    return {DiagramKind::permutation,
            EnumFilter::all,
            {term(beta, {{Stat::cyc, 1}}), term(c, {{Stat::wex, 1}})},
            BoxFactorKind::none,
            {}};
}

WeightRule derangement_meixner_pollaczek(const GaussianRational& delta, const GaussianRational& eta) {
    const GaussianRational i = imaginary_unit();
    return {DiagramKind::permutation,
            EnumFilter::inhomogeneous,
            {term(delta + i, {{Stat::drop, 1}}), term(delta - i, {{Stat::exc, 1}}),
             term(eta, {{Stat::cyc, 1}})},
            BoxFactorKind::none,
            {}};
}

WeightRule permutation_meixner_pollaczek_moment(const GaussianRational& delta, const GaussianRational& eta) {
    const GaussianRational i = imaginary_unit();
    return {DiagramKind::permutation,
            EnumFilter::all,
            {term(delta + i, {{Stat::drop, 1}}), term(delta - i, {{Stat::exc, 1}}),
             term(eta, {{Stat::cyc, 1}}), term(delta, {{Stat::wex, 1}, {Stat::exc, -1}})},
            BoxFactorKind::none,
            {}};
}

WeightRule derangement_qlaguerre(const GaussianRational& y, const GaussianRational& q) {
    return {DiagramKind::permutation,
            EnumFilter::inhomogeneous,
            {term(y, {{Stat::exc, 1}}), term(q, {{Stat::cr, 1}})},
            BoxFactorKind::none,
            {}};
}

WeightRule permutation_qlaguerre_moment(const GaussianRational& y, const GaussianRational& q) {
    return {DiagramKind::permutation,
            EnumFilter::all,
            {term(y, {{Stat::wex, 1}}), term(q, {{Stat::cr, 1}})},
            BoxFactorKind::none,
            {}};
}

WeightRule star_meixner(const GaussianRational& beta, const GaussianRational& c) {
    return {DiagramKind::permutation,
            EnumFilter::inhomogeneous,
            {term(beta, {{Stat::cyc, 1}}), term(c, {{Stat::exc_b, -1}})},
            BoxFactorKind::none,
            {}};
}

}  // namespace rules

}  // namespace olc
