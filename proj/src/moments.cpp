#include <olc/moments.hpp>

#include <sstream>
#include <stdexcept>

namespace olc {

MomentFunctional::MomentFunctional(FamilySpec family) : family_(std::move(family)) {
    moment_memo_.push_back(GaussianRational(1));
}

GaussianRational MomentFunctional::monic_b(int n) {
    if (n < 0) throw std::invalid_argument("monic term index must be nonnegative");
    while (static_cast<int>(b_memo_.size()) <= n) {
        const int k = static_cast<int>(b_memo_.size());
        const auto abc = recurrence_coeffs(family_, k);
        b_memo_.push_back(GaussianRational(0) - abc[1] / abc[0]);
    }
    return b_memo_[static_cast<size_t>(n)];
}

GaussianRational MomentFunctional::monic_lambda(int n) {
    if (n < 1) throw std::invalid_argument("lambda index starts at 1");
    while (static_cast<int>(lambda_memo_.size()) < n) {
        const int k = static_cast<int>(lambda_memo_.size()) + 1;
        const auto prev = recurrence_coeffs(family_, k - 1);
        const auto cur = recurrence_coeffs(family_, k);
        lambda_memo_.push_back(cur[2] / (prev[0] * cur[0]));
    }
    return lambda_memo_[static_cast<size_t>(n - 1)];
}

GaussianRational MomentFunctional::moment(int n) {
    if (n < 0) throw std::invalid_argument("moment index must be nonnegative");
    while (static_cast<int>(moment_memo_.size()) <= n) {
        const int len = static_cast<int>(moment_memo_.size());
        // paths[h] = weighted sum of length-t prefixes ending at height h,
        // pruned to heights that can still return to 0 in the remaining steps
        std::vector<GaussianRational> paths(static_cast<size_t>(len / 2) + 2, GaussianRational(0));
        paths[0] = GaussianRational(1);
        for (int t = 0; t < len; ++t) {
            std::vector<GaussianRational> next(paths.size(), GaussianRational(0));
            const int top = std::min(t, len - t);
            for (int h = 0; h <= top; ++h) {
                const auto& w = paths[static_cast<size_t>(h)];
                if (w == GaussianRational(0)) continue;
                const int remaining = len - t - 1;
                if (h <= remaining) next[static_cast<size_t>(h)] = next[static_cast<size_t>(h)] + w * monic_b(h);
                if (h + 1 <= remaining) next[static_cast<size_t>(h + 1)] = next[static_cast<size_t>(h + 1)] + w;
                if (h >= 1) next[static_cast<size_t>(h - 1)] = next[static_cast<size_t>(h - 1)] + w * monic_lambda(h);
            }
            paths = std::move(next);
        }
        moment_memo_.push_back(paths[0]);
    }
    return moment_memo_[static_cast<size_t>(n)];
}

GaussianRational MomentFunctional::apply(const Poly& p) {
    GaussianRational total(0);
    for (int k = 0; k <= p.degree(); ++k) total = total + p.coeff(k) * moment(k);
    return total;
}

const Poly& MomentFunctional::basis_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    while (static_cast<int>(poly_memo_.size()) <= n)
        poly_memo_.push_back(polynomial(family_, static_cast<int>(poly_memo_.size())));
    return poly_memo_[static_cast<size_t>(n)];
}

Int stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2 needs nonnegative arguments");
    if (k > n) return 0;
    std::vector<Int> row(1, Int(1));  // S(0, 0) = 1
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next(static_cast<size_t>(i) + 1, Int(0));
        for (int j = 1; j <= i; ++j) {
            next[static_cast<size_t>(j)] = Int(j) * (j < i ? row[static_cast<size_t>(j)] : Int(0)) +
                                           row[static_cast<size_t>(j - 1)];
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

GaussianRational moment_combinatorial(const FamilySpec& family, int n) {
    if (n < 0) throw std::invalid_argument("moment index must be nonnegative");
    if (n > 10) {
        std::ostringstream os;
        os << "combinatorial moment degree " << n << " exceeds the enumeration limit 10";
        throw std::domain_error(os.str());
    }
    EnumCaps caps;
    caps.permutations = 10;
    const auto single = ground_set({n});
    if (family.name == "charlier") {
        const auto a = family.params.at("a");
        GaussianRational total(0);
        for (int k = 0; k <= n; ++k)
            total = total + GaussianRational(Rat(stirling2(n, k))) * gr_pow(a, k);
        return total;
    }
    if (family.name == "meixner") {
        const auto beta = family.params.at("beta");
        const auto c = family.params.at("c");
        const auto sum = weighted_sum(single, rules::permutation_meixner_moment(beta, c), caps);
        return sum * gr_pow(GaussianRational(1) - c, -n);
    }
    if (family.name == "meixner-pollaczek") {
        const auto delta = family.params.at("delta");
        const auto eta = family.params.at("eta");
        return weighted_sum(single, rules::permutation_meixner_pollaczek_moment(delta, eta), caps);
    }
    if (family.name == "q-charlier") {
        const auto rule = rules::partition_qweight(family.params.at("a"), family.params.at("b"),
                                                   family.params.at("c"), family.params.at("q"),
                                                   EnumFilter::all);
        return weighted_sum(single, rule, caps);
    }
    if (family.name == "q-laguerre") {
        const auto rule =
            rules::permutation_qlaguerre_moment(family.params.at("y"), family.params.at("q"));
        return weighted_sum(single, rule, caps);
    }
    throw std::invalid_argument("combinatorial moments not available for family " + family.name);
}

}  // namespace olc
