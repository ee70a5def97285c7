#include <olc/verify.hpp>

#include <olc/bijections.hpp>
#include <olc/series.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace olc {
namespace {

GaussianRational gr(long long p, long long q = 1) { return GaussianRational{p, q}; }

std::string idx_str(const std::vector<int>& entries) {
    std::string out = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries[i]);
    }
    return out + ")";
}

std::string blocks_str(const DiagramObject& o) {
    std::string out;
    for (const auto& block : partition_blocks(o)) {
        out += "{";
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(block[i]);
        }
        out += "}";
    }
    return out;
}

std::string pairing_str(const std::map<int, int>& pairing) {
    std::string out = "{";
    bool first = true;
    for (const auto& [a, b] : pairing) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(a) + ":" + std::to_string(b);
    }
    return out + "}";
}

void add_row(SuiteReport& rep, std::string check, bool pass, std::string lhs, std::string rhs) {
    rep.checks.push_back(SuiteCheck{std::move(check), pass, std::move(lhs), std::move(rhs)});
}

void add_report_row(SuiteReport& rep, std::string check, const CheckReport& r) {
    if (!r.note.empty()) check += " [" + r.note + "]";
    add_row(rep, std::move(check), r.ok, gr_str(r.lhs), gr_str(r.rhs));
}

/// Defect counter for rows that aggregate many cases; keeps the first defect
/// description so a failing row is actionable.
struct Tally {
    long long cases = 0;
    long long defects = 0;
    std::string first;

    void count(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (!ok) {
            ++defects;
            if (first.empty()) first = describe();
        }
    }
};

void add_tally_row(SuiteReport& rep, std::string check, const Tally& t) {
    std::string lhs = std::to_string(t.defects) + " defects in " + std::to_string(t.cases) + " cases";
    if (!t.first.empty()) lhs += "; first: " + t.first;
    std::string rhs = "0 defects in " + std::to_string(t.cases) + " cases";
    add_row(rep, std::move(check), t.defects == 0, std::move(lhs), std::move(rhs));
}

/// Nonincreasing entry vectors of length 1..max_parts with sum <= max_sum.
/// Zero entries are allowed; the all-zero vector appears only at length 1.
std::vector<std::vector<int>> nonincreasing_indices(int max_parts, int max_sum) {
    std::vector<std::vector<int>> out;
    if (max_parts < 1 || max_sum < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int prev) {
        if (!cur.empty()) {
            bool all_zero = std::all_of(cur.begin(), cur.end(), [](int e) { return e == 0; });
            if (!all_zero || cur.size() == 1) out.push_back(cur);
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int e = std::min(remaining, prev); e >= 0; --e) {
            cur.push_back(e);
            rec(remaining - e, e);
            cur.pop_back();
        }
    };
    rec(max_sum, max_sum);
    return out;
}

/// Argument scalings exercised per factor count; all entries nonzero.
std::vector<std::vector<GaussianRational>> scaling_choices(int m) {
    switch (m) {
        case 1: return {{gr(3, 2)}};
        case 2: return {{gr(2), gr(1)}, {gr(1, 2), gr(5, 3)}};
        case 3: return {{gr(2), gr(1, 3), gr(1)}};
        case 4: return {{gr(2), gr(1), gr(1, 2), gr(1)}};
        default: return {};
    }
}

struct FamilyPoint {
    FamilySpec spec;
    std::string label;
};

std::string spec_label(const FamilySpec& f) {
    if (f.params.empty()) return f.name;
    std::string out = f.name + "(";
    bool first = true;
    for (const auto& [k, v] : f.params) {
        if (!first) out += ", ";
        first = false;
        out += k + "=" + gr_str(v);
    }
    return out + ")";
}

const std::vector<std::string>& product_family_names() {
    static const std::vector<std::string> names = {
        "hermite",   "charlier",  "laguerre",  "meixner",
        "meixner-pollaczek",      "q-hermite", "q-charlier", "q-laguerre"};
    return names;
}

/// Parameter points per family, most-used values first; trimmed by samples.
std::vector<FamilyPoint> family_points(const std::string& name, int samples) {
    using P = std::map<std::string, GaussianRational>;
    std::vector<P> table;
    if (name == "hermite") {
        table = {P{}};
    } else if (name == "charlier") {
        table = {{{"a", gr(2)}}, {{"a", gr(-3, 5)}}, {{"a", gr(7, 3)}},
                 {{"a", gr(1, 2)}}, {{"a", gr(5)}}};
    } else if (name == "laguerre") {
        table = {{{"alpha", gr(0)}}, {{"alpha", gr(3, 7)}}, {{"alpha", gr(2)}},
                 {{"alpha", gr(-1, 3)}}, {{"alpha", gr(5, 2)}}};
    } else if (name == "meixner") {
        table = {{{"beta", gr(2)}, {"c", gr(1, 3)}},
                 {{"beta", gr(-1, 2)}, {"c", gr(5, 2)}},
                 {{"beta", gr(3, 2)}, {"c", gr(1, 2)}},
                 {{"beta", gr(1)}, {"c", gr(2, 5)}},
                 {{"beta", gr(5, 2)}, {"c", gr(-2, 3)}}};
    } else if (name == "meixner-pollaczek") {
        table = {{{"delta", gr(1, 2)}, {"eta", gr(3)}},
                 {{"delta", gr(-2)}, {"eta", gr(1, 5)}},
                 {{"delta", gr(1)}, {"eta", gr(1)}},
                 {{"delta", gr(0)}, {"eta", gr(2)}},
                 {{"delta", gr(3, 2)}, {"eta", gr(-1)}}};
    } else if (name == "q-hermite") {
        table = {{{"q", gr(2, 3)}}, {{"q", gr(-1)}}, {{"q", gr(1, 4)}},
                 {{"q", gr(0)}}, {{"q", gr(3, 2)}}};
    } else if (name == "q-charlier") {
        table = {{{"a", gr(2)}, {"b", gr(1, 2)}, {"c", gr(3)}, {"q", gr(1, 4)}},
                 {{"a", gr(1, 3)}, {"b", gr(2)}, {"c", gr(1, 2)}, {"q", gr(0)}},
                 {{"a", gr(3, 2)}, {"b", gr(1, 3)}, {"c", gr(5, 4)}, {"q", gr(2, 7)}},
                 {{"a", gr(1)}, {"b", gr(1)}, {"c", gr(2)}, {"q", gr(1, 2)}},
                 {{"a", gr(2, 5)}, {"b", gr(3)}, {"c", gr(1, 3)}, {"q", gr(3, 2)}}};
    } else if (name == "q-laguerre") {
        table = {{{"y", gr(3, 2)}, {"q", gr(1, 2)}},
                 {{"y", gr(2)}, {"q", gr(1)}},
                 {{"y", gr(1, 2)}, {"q", gr(1, 3)}},
                 {{"y", gr(1)}, {"q", gr(0)}},
                 {{"y", gr(5, 2)}, {"q", gr(2, 5)}}};
    } else if (name == "al-salam-chihara") {
        table = {{{"t1", gr(1, 2)}, {"t2", gr(1, 3)}, {"q", gr(1, 5)}},
                 {{"t1", gr(2)}, {"t2", gr(-1, 2)}, {"q", gr(1, 3)}},
                 {{"t1", gr(1)}, {"t2", gr(1, 4)}, {"q", gr(0)}},
                 {{"t1", gr(3, 2)}, {"t2", gr(1, 2)}, {"q", gr(1, 2)}}};
    } else {
        throw std::invalid_argument("no parameter table for family: " + name);
    }
    int take = std::min(static_cast<int>(table.size()), std::max(1, samples));
    std::vector<FamilyPoint> out;
    for (int i = 0; i < take; ++i) {
        FamilySpec f = make_family(name, table[static_cast<size_t>(i)]);
        std::string label = spec_label(f);
        out.push_back(FamilyPoint{std::move(f), std::move(label)});
    }
    return out;
}

std::vector<FamilyPoint> birth_death_points(int samples) {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"n+1", "n"}, {"2n+3", "n^2"}, {"1/2n+1", "3n"}};
    int take = std::min(static_cast<int>(table.size()), std::max(1, samples));
    std::vector<FamilyPoint> out;
    for (int i = 0; i < take; ++i) {
        const auto& [b, d] = table[static_cast<size_t>(i)];
        out.push_back(FamilyPoint{make_birth_death_family(b, d),
                                  "birth-death(b=" + b + ", d=" + d + ")"});
    }
    return out;
}

/// Every family kind that carries a moment functional: the eight product
/// families, al-salam-chihara, and the birth-death rate choices.
std::vector<FamilyPoint> functional_points(int samples) {
    std::vector<FamilyPoint> out;
    for (const auto& name : product_family_names()) {
        auto pts = family_points(name, samples);
        out.insert(out.end(), std::make_move_iterator(pts.begin()),
                   std::make_move_iterator(pts.end()));
    }
    auto asc = family_points("al-salam-chihara", samples);
    out.insert(out.end(), std::make_move_iterator(asc.begin()),
               std::make_move_iterator(asc.end()));
    auto bd = birth_death_points(samples);
    out.insert(out.end(), std::make_move_iterator(bd.begin()),
               std::make_move_iterator(bd.end()));
    return out;
}

SuiteReport linearization_suite(const SuiteOptions& opt) {
    SuiteReport rep{"linearization", {}};
    auto indices = nonincreasing_indices(4, opt.max_total);
    for (const auto& name : product_family_names()) {
        for (const auto& pt : family_points(name, opt.samples)) {
            Tally t;
            for (const auto& entries : indices) {
                auto r = linearization_matches_combinatorics(pt.spec, multi_index(entries));
                t.count(r.ok, [&] {
                    return "n=" + idx_str(entries) + ": functional " + gr_str(r.lhs) +
                           " vs combinatorial " + gr_str(r.rhs);
                });
            }
            add_tally_row(rep, pt.label + ": products equal the combinatorial sums", t);
        }
    }
    auto scaled_indices = nonincreasing_indices(4, std::min(opt.max_total, 6));
    for (const char* name : {"hermite", "laguerre"}) {
        for (const auto& pt : family_points(name, std::min(opt.samples, 2))) {
            Tally t;
            for (const auto& entries : scaled_indices) {
                for (const auto& lams : scaling_choices(static_cast<int>(entries.size()))) {
                    auto r = linearization_matches_combinatorics(pt.spec,
                                                                 multi_index(entries, lams));
                    t.count(r.ok, [&] {
                        return "n=" + idx_str(entries) + " scaled: functional " + gr_str(r.lhs) +
                               " vs combinatorial " + gr_str(r.rhs);
                    });
                }
            }
            add_tally_row(rep, pt.label + ": scaled products equal the combinatorial sums", t);
        }
    }
    return rep;
}

SuiteReport difference_suite(const SuiteOptions& opt) {
    SuiteReport rep{"difference-system", {}};
    auto indices = nonincreasing_indices(4, opt.max_total);
    for (const auto& pt : functional_points(opt.samples)) {
        MomentFunctional L(pt.spec);
        Tally t;
        for (const auto& entries : indices) {
            int m = static_cast<int>(entries.size());
            if (m < 2) continue;
            MultiIndex idx = multi_index(entries);
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    if (j == k) continue;
                    auto r = check_difference_system(L, idx, j, k);
                    t.count(r.ok, [&] {
                        return "n=" + idx_str(entries) + " (j,k)=(" + std::to_string(j) + "," +
                               std::to_string(k) + "): " + gr_str(r.lhs) + " vs " + gr_str(r.rhs);
                    });
                }
        }
        add_tally_row(rep, pt.label + ": difference system balances", t);
    }
    auto scaled_indices = nonincreasing_indices(4, std::min(opt.max_total, 6));
    for (const char* name : {"hermite", "laguerre"}) {
        for (const auto& pt : family_points(name, 1)) {
            MomentFunctional L(pt.spec);
            Tally t;
            for (const auto& entries : scaled_indices) {
                int m = static_cast<int>(entries.size());
                if (m < 2) continue;
                for (const auto& lams : scaling_choices(m)) {
                    MultiIndex idx = multi_index(entries, lams);
                    for (int j = 0; j < m; ++j)
                        for (int k = 0; k < m; ++k) {
                            if (j == k) continue;
                            auto r = check_difference_system(L, idx, j, k);
                            t.count(r.ok, [&] {
                                return "n=" + idx_str(entries) + " scaled (j,k)=(" +
                                       std::to_string(j) + "," + std::to_string(k) + ")";
                            });
                        }
                }
            }
            add_tally_row(rep, pt.label + ": scaled difference system balances", t);
        }
    }
    return rep;
}

SuiteReport boundary_suite(const SuiteOptions& opt) {
    SuiteReport rep{"boundary", {}};
    int m_max = std::max(2, std::min(4, opt.max_total));
    for (const auto& pt : functional_points(opt.samples)) {
        MomentFunctional L(pt.spec);
        Tally t;
        for (int m = 2; m <= m_max; ++m) {
            auto r = check_boundary(L, m);
            t.count(r.ok, [&] {
                std::string what = "m=" + std::to_string(m);
                if (!r.note.empty()) what += ": " + r.note;
                return what;
            });
        }
        add_tally_row(rep, pt.label + ": boundary values pin the solution", t);
    }
    return rep;
}

SuiteReport moments_suite(const SuiteOptions& opt) {
    SuiteReport rep{"moments", {}};
    int n_comb = std::min(opt.max_total + 2, 8);
    for (const char* name :
         {"charlier", "meixner", "meixner-pollaczek", "q-charlier", "q-laguerre"}) {
        for (const auto& pt : family_points(name, opt.samples)) {
            MomentFunctional L(pt.spec);
            Tally t;
            for (int n = 0; n <= n_comb; ++n) {
                GaussianRational lhs = L.moment(n);
                GaussianRational rhs = moment_combinatorial(pt.spec, n);
                t.count(lhs == rhs, [&] {
                    return "mu_" + std::to_string(n) + ": path " + gr_str(lhs) +
                           " vs combinatorial " + gr_str(rhs);
                });
            }
            add_tally_row(rep, pt.label + ": path moments equal the combinatorial moments", t);
        }
    }
    int n_orth = opt.max_total + 2;
    for (const auto& pt : functional_points(opt.samples)) {
        MomentFunctional L(pt.spec);
        Tally t;
        for (int a = 0; a <= n_orth; ++a)
            for (int b = a; b <= n_orth; ++b) {
                GaussianRational v = linearization(L, multi_index({a, b}));
                GaussianRational want = a == b ? norm_zeta(pt.spec, b) : GaussianRational{0};
                t.count(v == want, [&] {
                    return "L(p_" + std::to_string(a) + " p_" + std::to_string(b) + ") = " +
                           gr_str(v) + ", expected " + gr_str(want);
                });
            }
        add_tally_row(rep, pt.label + ": products of basis pairs are orthogonal with the expected norms",
                      t);
    }
    return rep;
}

SuiteReport bijections_suite(const SuiteOptions& opt) {
    SuiteReport rep{"bijections", {}};
    {
        DiagramObject fixture = partition_from_blocks(
            15, {{1, 4, 15}, {2, 3}, {5, 6}, {7, 10, 13}, {8}, {9, 11}, {12, 14}});
        std::map<int, int> got = psi_pairing(fixture);
        std::map<int, int> want{{1, 15}, {2, 3}, {5, 6}, {7, 14}, {8, 8}, {9, 11}, {12, 13}};
        add_row(rep, "pairing reproduces the pinned fifteen-element example", got == want,
                pairing_str(got), pairing_str(want));
    }
    int psi_n = opt.max_total + 4;
    for (int n = 1; n <= psi_n; ++n) {
        BoxedGroundSet g = ground_set({n});
        Tally t;
        for (const auto& pi : enumerate_all(g, DiagramKind::partition, EnumFilter::all)) {
            StatRecord st = statistics(pi, g);
            std::map<int, int> pairing = psi_pairing(pi);
            std::set<int> mins, maxs;
            for (const auto& block : partition_blocks(pi)) {
                mins.insert(block.front());
                maxs.insert(block.back());
                if (block.size() == 1) {
                    auto it = pairing.find(block.front());
                    if (it == pairing.end() || it->second != block.front()) {
                        t.count(false, [&] { return blocks_str(pi) + ": singleton moved"; });
                        goto next_object;
                    }
                }
            }
            {
                bool ok = pairing.size() == mins.size();
                std::set<int> images;
                for (const auto& [a, b] : pairing) {
                    if (!mins.count(a) || !maxs.count(b)) ok = false;
                    if (st.depth[static_cast<size_t>(a)] != st.depth[static_cast<size_t>(b)])
                        ok = false;
                    images.insert(b);
                }
                if (images != maxs) ok = false;
                t.count(ok, [&] { return blocks_str(pi) + ": pairing " + pairing_str(pairing); });
            }
        next_object:;
        }
        add_tally_row(rep, "pairing maps minima onto maxima at equal depth (n=" + std::to_string(n) + ")",
                      t);
    }
    int bij_n = opt.max_total + 3;
    for (int n = 2; n <= bij_n; ++n) {
        Tally t;
        for (int k = 1; k < n; ++k) {
            std::vector<int> front{k}, back;
            for (int i = 0; i < n - k; ++i) front.push_back(1);
            for (int i = 0; i < n - k; ++i) back.push_back(1);
            back.push_back(k);
            auto domain = enumerate_all(ground_set(front), DiagramKind::partition,
                                        EnumFilter::inhomogeneous);
            auto codomain = enumerate_all(ground_set(back), DiagramKind::partition,
                                          EnumFilter::inhomogeneous);
            std::set<std::vector<std::pair<int, int>>> image, target;
            for (const auto& o : codomain) target.insert(o.arcs);
            BoxedGroundSet plain = ground_set({n});
            for (const auto& pi : domain) {
                DiagramObject img = phi(n, k, pi);
                StatRecord s0 = statistics(pi, plain);
                StatRecord s1 = statistics(img, plain);
                bool ok = s0.bl == s1.bl && s0.cr == s1.cr;
                std::set<std::pair<int, int>> img_arcs(img.arcs.begin(), img.arcs.end());
                for (const auto& [a, b] : pi.arcs)
                    if (a > k && !img_arcs.count({a - k, b - k})) ok = false;
                image.insert(img.arcs);
                t.count(ok, [&] {
                    return "k=" + std::to_string(k) + " " + blocks_str(pi) + " -> " + blocks_str(img);
                });
            }
            t.count(image == target, [&] {
                return "k=" + std::to_string(k) + ": image misses the target class";
            });
        }
        add_tally_row(rep,
                      "front box moves to the back, blocks and crossings fixed (n=" +
                          std::to_string(n) + ")",
                      t);
    }
    for (int n1 = 1; n1 + 1 <= opt.max_total; ++n1)
        for (int n2 = 1; n1 + n2 <= opt.max_total; ++n2) {
            Tally t;
            for (int n = n1 + n2; n <= bij_n; ++n) {
                std::vector<int> fwd{n1, n2}, swp{n2, n1};
                for (int i = 0; i < n - n1 - n2; ++i) {
                    fwd.push_back(1);
                    swp.push_back(1);
                }
                auto domain = enumerate_all(ground_set(fwd), DiagramKind::partition,
                                            EnumFilter::inhomogeneous);
                auto codomain = enumerate_all(ground_set(swp), DiagramKind::partition,
                                              EnumFilter::inhomogeneous);
                std::set<std::vector<std::pair<int, int>>> image, target;
                for (const auto& o : codomain) target.insert(o.arcs);
                BoxedGroundSet plain = ground_set({n});
                int split = n1 + n2;
                for (const auto& pi : domain) {
                    DiagramObject img = theta(n1, n2, pi);
                    StatRecord s0 = statistics(pi, plain);
                    StatRecord s1 = statistics(img, plain);
                    bool ok = s0.bl == s1.bl && s0.cr == s1.cr;
                    std::set<std::pair<int, int>> img_arcs(img.arcs.begin(), img.arcs.end());
                    for (const auto& [a, b] : pi.arcs)
                        if (a > split && !img_arcs.count({a, b})) ok = false;
                    if (theta(n2, n1, img) != pi) ok = false;
                    image.insert(img.arcs);
                    t.count(ok, [&] {
                        return "n=" + std::to_string(n) + " " + blocks_str(pi) + " -> " +
                               blocks_str(img);
                    });
                }
                t.count(image == target, [&] {
                    return "n=" + std::to_string(n) + ": image misses the target class";
                });
            }
            add_tally_row(rep,
                          "front boxes swap, blocks and crossings fixed (n1=" +
                              std::to_string(n1) + ", n2=" + std::to_string(n2) + ")",
                          t);
        }
    return rep;
}

SuiteReport series_suite(const SuiteOptions& opt) {
    SuiteReport rep{"series", {}};
    struct GfRow {
        GfIdentity id;
        std::string label;
        std::map<std::string, GaussianRational> params;
        int vars_a;
        int vars_b;
        int cap;
    };
    const std::vector<std::vector<GfRow>> groups = {
        {{GfIdentity::laguerre_power, "free-power product series, alpha=0", {{"alpha", gr(0)}}, 2, 0, 4},
         {GfIdentity::laguerre_power, "free-power product series, alpha=1/2", {{"alpha", gr(1, 2)}}, 2, 0, 4},
         {GfIdentity::laguerre_power, "free-power product series, alpha=1, three variables", {{"alpha", gr(1)}}, 3, 0, 4}},
        {{GfIdentity::meixner_falling, "falling-power product series, beta=1, c=1/2",
          {{"beta", gr(1)}, {"c", gr(1, 2)}}, 2, 0, 4},
         {GfIdentity::meixner_falling, "falling-power product series, beta=3/2, c=1/3",
          {{"beta", gr(3, 2)}, {"c", gr(1, 3)}}, 2, 0, 4},
         {GfIdentity::meixner_falling, "falling-power product series, beta=2, c=3/4",
          {{"beta", gr(2)}, {"c", gr(3, 4)}}, 2, 0, 4}},
        {{GfIdentity::laguerre_pair, "two-parameter product series, alpha=beta=1/2",
          {{"alpha", gr(1, 2)}, {"beta", gr(1, 2)}}, 1, 1, 4},
         {GfIdentity::laguerre_pair, "two-parameter product series, alpha=3/2, beta=1/2",
          {{"alpha", gr(3, 2)}, {"beta", gr(1, 2)}}, 1, 1, 3},
         {GfIdentity::laguerre_pair, "two-parameter product series, alpha=2, beta=0",
          {{"alpha", gr(2)}, {"beta", gr(0)}}, 2, 1, 3}},
        {{GfIdentity::meixner_pair, "two-parameter falling series, alpha=beta=2",
          {{"alpha", gr(2)}, {"beta", gr(2)}, {"c", gr(1, 2)}}, 1, 1, 3},
         {GfIdentity::meixner_pair, "two-parameter falling series, alpha=3, beta=2",
          {{"alpha", gr(3)}, {"beta", gr(2)}, {"c", gr(1, 2)}}, 1, 1, 3},
         {GfIdentity::meixner_pair, "two-parameter falling series, alpha=5/2, beta=1/2",
          {{"alpha", gr(5, 2)}, {"beta", gr(1, 2)}, {"c", gr(1, 2)}}, 2, 1, 3}},
        {{GfIdentity::hermite_exponential, "pair-product exponential series, two variables", {}, 2, 0, 4},
         {GfIdentity::hermite_exponential, "pair-product exponential series, three variables", {}, 3, 0, 5},
         {GfIdentity::hermite_exponential, "pair-product exponential series, cap five", {}, 2, 0, 5}},
        {{GfIdentity::charlier_exponential, "block-count exponential series, a=2/3",
          {{"a", gr(2, 3)}}, 2, 0, 4},
         {GfIdentity::charlier_exponential, "block-count exponential series, a=3",
          {{"a", gr(3)}}, 2, 0, 4},
         {GfIdentity::charlier_exponential, "block-count exponential series, a=1/2, cap five",
          {{"a", gr(1, 2)}}, 2, 0, 5}}};
    for (const auto& group : groups) {
        int take = std::min(static_cast<int>(group.size()), std::max(1, opt.samples));
        for (int i = 0; i < take; ++i) {
            const GfRow& row = group[static_cast<size_t>(i)];
            add_report_row(rep, row.label,
                           gf_check(row.id, row.params, row.vars_a, row.vars_b, row.cap));
        }
    }
    const std::vector<GaussianRational> pool = {gr(2),  gr(3),     gr(1, 2), gr(-1, 3),
                                                gr(5),  gr(7, 2),  gr(4),    gr(-5, 3)};
    for (int m = 1; m <= 5; ++m) {
        Tally t;
        for (const auto& c : {gr(1, 2), gr(-2, 3)}) {
            auto r = det_identities(m, c, pool);
            t.count(r.ok, [&] {
                std::string what = "c=" + gr_str(c);
                if (!r.note.empty()) what += ": " + r.note;
                return what;
            });
        }
        add_tally_row(rep, "bordered and banded determinants simplify (m=" + std::to_string(m) + ")",
                      t);
    }
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<int> den_pick(1, 5);
    const std::vector<GaussianRational> betas = {gr(1), gr(2), gr(1, 2), gr(-1, 3)};
    std::vector<Tally> beta_tallies(betas.size());
    for (int trial = 0; trial < 20; ++trial) {
        int m = 2 + trial % 2;
        std::vector<std::vector<GaussianRational>> entries(
            static_cast<size_t>(m), std::vector<GaussianRational>(static_cast<size_t>(m)));
        for (auto& row : entries)
            for (auto& e : row) {
                int den = den_pick(rng);
                std::uniform_int_distribution<int> num_pick(-2 * den, 2 * den);
                e = gr(num_pick(rng), den);
            }
        SquareMatrix a = square_matrix(entries);
        for (size_t bi = 0; bi < betas.size(); ++bi) {
            auto r = macmahon_check(a, betas[bi], 4);
            beta_tallies[bi].count(r.ok, [&] {
                std::string what = "matrix " + std::to_string(trial);
                if (!r.note.empty()) what += ": " + r.note;
                return what;
            });
        }
    }
    for (size_t bi = 0; bi < betas.size(); ++bi)
        add_tally_row(rep,
                      "determinant power series matches cycle-weighted sums (beta=" +
                          gr_str(betas[bi]) + ")",
                      beta_tallies[bi]);
    return rep;
}

SuiteReport positivity_suite(const SuiteOptions& opt) {
    SuiteReport rep{"positivity", {}};
    EnumCaps caps;
    caps.permutations = 12;
    const std::vector<GaussianRational> alphas = {gr(0), gr(1, 2), gr(1)};
    int take = std::min(static_cast<int>(alphas.size()), std::max(1, opt.samples));
    WeightRule counter = rules::permutation_cycle_weight(gr(1), EnumFilter::inhomogeneous);
    for (int ai = 0; ai < take; ++ai) {
        const GaussianRational& alpha = alphas[static_cast<size_t>(ai)];
        MomentFunctional L(make_family("laguerre", {{"alpha", alpha}}));
        Tally t;
        for (int n0 = 0; n0 <= opt.max_total; ++n0) {
            for (const auto& entries : nonincreasing_indices(2, opt.max_total - n0)) {
                GaussianRational count =
                    weighted_sum(ground_set_with_free_front(n0, entries), counter, caps);
                GaussianRational val =
                    generalized_moment_product(L, n0, XMode::monomial, multi_index(entries));
                bool ok = count.is_zero() ? val.is_zero() : (val.is_real() && val.re > 0);
                t.count(ok, [&] {
                    return "n0=" + std::to_string(n0) + " n=" + idx_str(entries) + ": value " +
                           gr_str(val) + " over " + gr_str(count) + " objects";
                });
            }
        }
        add_tally_row(rep,
                      "free-power moment products (alpha=" + gr_str(alpha) +
                          "): positive exactly on nonempty classes",
                      t);
    }
    for (int ai = 0; ai < take; ++ai)
        for (int shift = 0; shift <= 2; ++shift) {
            const GaussianRational& alpha = alphas[static_cast<size_t>(ai)];
            GaussianRational beta = alpha - gr(shift);
            FamilySpec fa = make_family("laguerre", {{"alpha", alpha}});
            FamilySpec fb = make_family("laguerre", {{"alpha", beta}});
            Tally t;
            for (int m = 0; m <= 2; ++m) {
                for (const auto& ea : nonincreasing_indices(2, opt.max_total - m)) {
                    int sa = 0;
                    for (int e : ea) sa += e;
                    for (const auto& eb : nonincreasing_indices(2, opt.max_total - m - sa)) {
                        BoxedGroundSet g;
                        g.sizes.push_back(m);
                        g.roles.push_back(BoxRole::free_box);
                        for (int e : ea) {
                            g.sizes.push_back(e);
                            g.roles.push_back(BoxRole::deranged);
                        }
                        for (int e : eb) {
                            g.sizes.push_back(e);
                            g.roles.push_back(BoxRole::injection_target);
                        }
                        g.injection_range = shift;
                        GaussianRational count = mixed_star_sum(g, counter, caps);
                        GaussianRational val =
                            mixed_linearization(fa, fb, m, multi_index(ea), multi_index(eb));
                        bool ok = count.is_zero() ? val.is_zero() : (val.is_real() && val.re > 0);
                        t.count(ok, [&] {
                            return "m=" + std::to_string(m) + " a=" + idx_str(ea) + " b=" +
                                   idx_str(eb) + ": value " + gr_str(val) + " over " +
                                   gr_str(count) + " objects";
                        });
                    }
                }
            }
            add_tally_row(rep,
                          "mixed products (alpha=" + gr_str(alpha) + ", shift=" +
                              std::to_string(shift) + "): positive exactly on nonempty classes",
                          t);
        }
    return rep;
}

}  // namespace

bool SuiteReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int SuiteReport::failed() const {
    int bad = 0;
    for (const auto& c : checks)
        if (!c.pass) ++bad;
    return bad;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "linearization", "difference-system", "boundary", "moments",
        "bijections",    "series",            "positivity"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    if (options.max_total < 0) throw std::invalid_argument("max-total must be nonnegative");
    if (options.samples < 1) throw std::invalid_argument("samples must be positive");
    if (name == "linearization") return linearization_suite(options);
    if (name == "difference-system") return difference_suite(options);
    if (name == "boundary") return boundary_suite(options);
    if (name == "moments") return moments_suite(options);
    if (name == "bijections") return bijections_suite(options);
    if (name == "series") return series_suite(options);
    if (name == "positivity") return positivity_suite(options);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options) {
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& suite : suite_names()) out.push_back(run_suite(suite, options));
    } else {
        out.push_back(run_suite(name, options));
    }
    return out;
}

}  // namespace olc
