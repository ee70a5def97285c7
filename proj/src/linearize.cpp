#include <olc/linearize.hpp>

#include <sstream>
#include <stdexcept>

namespace olc {

namespace {

constexpr int kEnumerationTotalCap = 10;

void validate_index(const MultiIndex& idx) {
    if (idx.entries.empty()) throw std::invalid_argument("index needs at least one entry");
    for (int e : idx.entries)
        if (e < 0) throw std::invalid_argument("index entries must be nonnegative");
    if (!idx.scalings.empty() && idx.scalings.size() != idx.entries.size())
        throw std::invalid_argument("scalings must be empty or match the number of entries");
}

void require_default_scalings(const FamilySpec& f, const MultiIndex& idx) {
    for (int j = 0; j < idx.m(); ++j)
        if (!(idx.scaling(j) == GaussianRational(1)))
            throw std::invalid_argument("family " + f.name +
                                        " has no combinatorial rule for scaled arguments");
}

GaussianRational sign_pow(int e) { return e % 2 == 0 ? GaussianRational(1) : GaussianRational(-1); }

Poly product_poly(const FamilySpec& f, const MultiIndex& idx) {
    Poly prod{{GaussianRational(1)}};
    for (int j = 0; j < idx.m(); ++j)
        prod = poly_mul(prod, poly_scale_arg(polynomial(f, idx.entries[static_cast<size_t>(j)]),
                                             idx.scaling(j)));
    return prod;
}

Poly product_poly(MomentFunctional& L, const MultiIndex& idx) {
    Poly prod{{GaussianRational(1)}};
    for (int j = 0; j < idx.m(); ++j)
        prod = poly_mul(prod,
                        poly_scale_arg(L.basis_polynomial(idx.entries[static_cast<size_t>(j)]),
                                       idx.scaling(j)));
    return prod;
}

}  // namespace

int MultiIndex::total() const {
    int t = 0;
    for (int e : entries) t += e;
    return t;
}

GaussianRational MultiIndex::scaling(int j) const {
    if (j < 0 || j >= m()) throw std::out_of_range("scaling index out of range");
    return scalings.empty() ? GaussianRational(1) : scalings[static_cast<size_t>(j)];
}

MultiIndex MultiIndex::shifted(int j, int delta) const {
    if (j < 0 || j >= m()) throw std::out_of_range("entry index out of range");
    MultiIndex out = *this;
    out.entries[static_cast<size_t>(j)] += delta;
    if (out.entries[static_cast<size_t>(j)] < 0)
        throw std::invalid_argument("shifted entry would be negative");
    return out;
}

MultiIndex multi_index(std::vector<int> entries, std::vector<GaussianRational> scalings) {
    MultiIndex idx{std::move(entries), std::move(scalings)};
    validate_index(idx);
    return idx;
}

GaussianRational linearization(MomentFunctional& L, const MultiIndex& idx) {
    validate_index(idx);
    return L.apply(product_poly(L, idx));
}

GaussianRational combinatorial_value(const FamilySpec& f, const MultiIndex& idx) {
    validate_index(idx);
    if (idx.total() > kEnumerationTotalCap) {
        std::ostringstream os;
        os << "total degree " << idx.total() << " exceeds the enumeration limit "
           << kEnumerationTotalCap;
        throw std::domain_error(os.str());
    }
    EnumCaps caps;
    caps.permutations = kEnumerationTotalCap;
    caps.matchings = kEnumerationTotalCap;
    caps.partitions = kEnumerationTotalCap;
    const auto g = ground_set(idx.entries);
    std::vector<GaussianRational> lambdas;
    for (int j = 0; j < idx.m(); ++j) lambdas.push_back(idx.scaling(j));

    if (f.name == "hermite") return weighted_sum(g, rules::matching_scaled(lambdas), caps);
    if (f.name == "laguerre")
        return weighted_sum(g, rules::permutation_scaled(f.params.at("alpha"), lambdas), caps);

    require_default_scalings(f, idx);
    if (f.name == "charlier")
        return weighted_sum(g, rules::partition_block_count(f.params.at("a")), caps);
    if (f.name == "meixner")
        return weighted_sum(
            g, rules::derangement_meixner(f.params.at("beta"), f.params.at("c")), caps);
    if (f.name == "meixner-pollaczek")
        return weighted_sum(
            g, rules::derangement_meixner_pollaczek(f.params.at("delta"), f.params.at("eta")),
            caps);
    if (f.name == "q-hermite")
        return weighted_sum(g, rules::matching_crossings(f.params.at("q")), caps);
    if (f.name == "q-charlier")
        return weighted_sum(g,
                            rules::partition_qweight(f.params.at("a"), f.params.at("b"),
                                                     f.params.at("c"), f.params.at("q"),
                                                     EnumFilter::inhomogeneous),
                            caps);
    if (f.name == "q-laguerre")
        return weighted_sum(
            g, rules::derangement_qlaguerre(f.params.at("y"), f.params.at("q")), caps);
    throw std::invalid_argument("no combinatorial rule for family " + f.name);
}

CheckReport linearization_matches_combinatorics(const FamilySpec& f, const MultiIndex& idx) {
    MomentFunctional L(f);
    CheckReport r;
    const auto lin = linearization(L, idx);
    if (f.prefactor == PrefactorRule::meixner_inverse_c) {
        auto params = f.params;
        params.at("c") = GaussianRational(1) / params.at("c");
        r.lhs = sign_pow(idx.total()) * lin;
        r.rhs = combinatorial_value(make_family(f.name, params), idx);
        r.note = "sign (-1)^total applied, sum taken at c -> 1/c";
    } else {
        r.lhs = lin;
        r.rhs = combinatorial_value(f, idx);
        r.note = "direct comparison";
    }
    r.ok = r.lhs == r.rhs;
    return r;
}

GaussianRational generalized_moment_product(MomentFunctional& L, int n0, XMode mode,
                                            const MultiIndex& idx) {
    validate_index(idx);
    if (n0 < 0) throw std::invalid_argument("power must be nonnegative");
    Poly base{{GaussianRational(1)}};
    if (mode == XMode::monomial) {
        std::vector<GaussianRational> c(static_cast<size_t>(n0) + 1, GaussianRational(0));
        c.back() = GaussianRational(1);
        base = Poly{std::move(c)};
    } else if (mode == XMode::falling_factorial) {
        base = falling_factorial_poly(n0);
    }
    const auto value = L.apply(poly_mul(base, product_poly(L, idx)));
    const auto& f = L.family();
    if (f.name == "meixner" && mode == XMode::falling_factorial) {
        const auto c = f.params.at("c");
        return sign_pow(idx.total()) * gr_pow(c, -n0) *
               gr_pow(GaussianRational(1) - c, n0) * value;
    }
    return value;
}

GaussianRational mixed_linearization(const FamilySpec& fA, const FamilySpec& fB, int m,
                                     const MultiIndex& idxA, const MultiIndex& idxB) {
    validate_index(idxA);
    validate_index(idxB);
    if (m < 0) throw std::invalid_argument("power must be nonnegative");
    if (fA.name != fB.name || (fA.name != "laguerre" && fA.name != "meixner"))
        throw std::invalid_argument("mixed products need a laguerre or meixner pair");
    if (fA.name == "meixner" && !(fA.params.at("c") == fB.params.at("c")))
        throw std::invalid_argument("mixed meixner pair must share the parameter c");

    MomentFunctional L(fA);
    Poly prod = poly_mul(product_poly(fA, idxA), product_poly(fB, idxB));
    if (fA.name == "laguerre") {
        std::vector<GaussianRational> c(static_cast<size_t>(m) + 1, GaussianRational(0));
        c.back() = GaussianRational(1);
        return L.apply(poly_mul(Poly{std::move(c)}, prod));
    }
    const auto value = L.apply(poly_mul(falling_factorial_poly(m), prod));
    const auto c = fA.params.at("c");
    return sign_pow(idxA.total() + idxB.total()) * gr_pow(c, -m) *
           gr_pow(GaussianRational(1) - c, m) * value;
}

CheckReport check_difference_system(MomentFunctional& L, const MultiIndex& idx, int j, int k) {
    validate_index(idx);
    if (j == k || j < 0 || k < 0 || j >= idx.m() || k >= idx.m())
        throw std::invalid_argument("need two distinct entry positions");
    CheckReport r;
    const auto& f = L.family();
    const int nj = idx.entries[static_cast<size_t>(j)];
    const int nk = idx.entries[static_cast<size_t>(k)];
    const auto cj = recurrence_coeffs(f, nj);
    const auto ck = recurrence_coeffs(f, nk);
    const auto vj = cj[0] * idx.scaling(j);
    const auto vk = ck[0] * idx.scaling(k);
    if (vj.is_zero() || vk.is_zero()) {
        r.ok = false;
        r.note = "division impossible: a scaled leading coefficient vanishes";
        return r;
    }
    r.lhs = linearization(L, idx.shifted(j, 1)) / vj - linearization(L, idx.shifted(k, 1)) / vk;
    r.rhs = (cj[1] / vj - ck[1] / vk) * linearization(L, idx);
    if (nj > 0) r.rhs = r.rhs - cj[2] / vj * linearization(L, idx.shifted(j, -1));
    if (nk > 0) r.rhs = r.rhs + ck[2] / vk * linearization(L, idx.shifted(k, -1));
    r.ok = r.lhs == r.rhs;
    r.note = r.ok ? "system holds" : "system violated";
    return r;
}

CheckReport check_boundary(MomentFunctional& L, int m) {
    if (m < 2) throw std::invalid_argument("boundary check needs at least two factors");
    CheckReport r;
    r.ok = true;
    int checks = 0;
    const auto& f = L.family();
    const auto c0 = recurrence_coeffs(f, 0);
    const auto c1 = recurrence_coeffs(f, 1);
    const std::vector<GaussianRational> samples = {GaussianRational(1), GaussianRational(2, 3)};
    auto fail = [&](const std::string& what) {
        r.ok = false;
        if (!r.note.empty()) r.note += "; ";
        r.note += what;
    };

    for (const auto& lam : samples) {
        std::vector<GaussianRational> scalings(static_cast<size_t>(m), GaussianRational(1));
        // zero index: value 1 regardless of scalings
        std::vector<int> zeros(static_cast<size_t>(m), 0);
        for (size_t t = 0; t + 1 < scalings.size(); ++t) scalings[t] = lam;
        auto zero_idx = multi_index(zeros, scalings);
        ++checks;
        if (!(linearization(L, zero_idx) == GaussianRational(1))) fail("zero index not 1");

        for (int j = 0; j + 1 < m; ++j)
            for (int n = 0; n <= 1; ++n) {
                auto entries = zeros;
                entries[static_cast<size_t>(m - 1)] = n;
                auto idx = multi_index(entries, scalings);
                const auto got = linearization(L, idx.shifted(j, 1));
                GaussianRational want(0);
                if (n == 1) want = want + idx.scaling(j) * c1[2] * c0[0] / c1[0];
                if (n == 0) want = want + c0[1] * (GaussianRational(1) - idx.scaling(j));
                ++checks;
                if (!(got == want)) {
                    std::ostringstream os;
                    os << "two-point rule fails at position " << j << ", final entry " << n;
                    fail(os.str());
                }
            }

        // vanishing beyond the reachable cone: front entries sum below the last
        for (int last = 1; last <= 3; ++last)
            for (int front = 0; front < last; ++front) {
                auto entries = zeros;
                entries[0] = front;
                entries[static_cast<size_t>(m - 1)] = last;
                auto idx = multi_index(entries, scalings);
                ++checks;
                if (!(linearization(L, idx) == GaussianRational(0))) fail("cone vanishing fails");
            }
    }
    std::ostringstream os;
    os << (r.ok ? "boundary holds" : "boundary violated") << " (" << checks << " values)";
    r.note = r.note.empty() ? os.str() : os.str() + ": " + r.note;
    return r;
}

std::vector<GaussianRational> connection_coefficients(const FamilySpec& f, int n) {
    if (f.name != "meixner")
        throw std::invalid_argument("connection coefficients are defined for meixner only");
    if (n < 0 || n > 10) throw std::domain_error("connection expansion limited to degree 10");
    const auto beta = f.params.at("beta");
    const auto c = f.params.at("c");
    // x^n = sum_j S(n,j) x(x-1)...(x-j+1), and each falling factorial expands
    // in the basis with coefficients (c/(1-c))^j binom(j,k)(beta+k)_{j-k}(-1)^k
    std::vector<GaussianRational> out(static_cast<size_t>(n) + 1, GaussianRational(0));
    for (int j = 0; j <= n; ++j) {
        const GaussianRational s{Rat(stirling2(n, j))};
        if (s.is_zero()) continue;
        const auto scale = s * gr_pow(c / (GaussianRational(1) - c), j);
        for (int k = 0; k <= j; ++k)
            out[static_cast<size_t>(k)] =
                out[static_cast<size_t>(k)] +
                scale * GaussianRational(Rat(binomial(j, k))) *
                    rising_factorial(beta + GaussianRational(k), j - k) * sign_pow(k);
    }
    return out;
}

}  // namespace olc
