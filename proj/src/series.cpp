#include <olc/series.hpp>

#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace olc {

namespace {

int total_degree(const std::vector<int>& expo) {
    return std::accumulate(expo.begin(), expo.end(), 0);
}

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.num_vars() != b.num_vars() || a.cap() != b.cap())
        throw std::invalid_argument("series shapes differ");
}

GaussianRational constant_term(const TruncatedSeries& a) {
    return a.coeff(std::vector<int>(static_cast<size_t>(a.num_vars()), 0));
}

bool is_integer(const GaussianRational& r) {
    return r.im == 0 && boost::multiprecision::denominator(r.re) == 1;
}

long long integer_value(const GaussianRational& r) {
    return static_cast<long long>(boost::multiprecision::numerator(r.re));
}

/// All exponent vectors over `vars` variables with total degree <= cap, in
/// lexicographic order.
void for_each_index(int vars, int cap, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> expo(static_cast<size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == vars) {
            f(expo);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            expo[static_cast<size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
        expo[static_cast<size_t>(pos)] = 0;
    };
    rec(0, cap);
}

GaussianRational factorial_product(const std::vector<int>& expo) {
    GaussianRational acc(1);
    for (int e : expo) acc *= GaussianRational(Rat(factorial(e)));
    return acc;
}

TruncatedSeries one(int vars, int cap) {
    return TruncatedSeries::constant(vars, cap, GaussianRational(1));
}

/// sum over subsets S of var indices in [lo, hi) of weight(|S|) * prod x_i.
TruncatedSeries subset_sum(int vars, int cap, int lo, int hi,
                           const std::function<GaussianRational(int)>& weight) {
    TruncatedSeries out(vars, cap);
    const int width = hi - lo;
    for (int mask = 0; mask < (1 << width); ++mask) {
        std::vector<int> expo(static_cast<size_t>(vars), 0);
        int size = 0;
        for (int b = 0; b < width; ++b)
            if (mask & (1 << b)) {
                expo[static_cast<size_t>(lo + b)] = 1;
                ++size;
            }
        out.add_term(expo, weight(size));
    }
    return out;
}

GaussianRational det_rec(const std::vector<std::vector<GaussianRational>>& a,
                         std::vector<int> cols, int row) {
    if (cols.empty()) return GaussianRational(1);
    GaussianRational acc(0);
    for (size_t j = 0; j < cols.size(); ++j) {
        const auto& pivot = a[static_cast<size_t>(row)][static_cast<size_t>(cols[j])];
        if (pivot.is_zero()) continue;
        std::vector<int> rest;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != j) rest.push_back(cols[t]);
        auto sub = pivot * det_rec(a, std::move(rest), row + 1);
        acc = (j % 2 == 0) ? acc + sub : acc - sub;
    }
    return acc;
}

TruncatedSeries series_det_rec(const std::vector<std::vector<TruncatedSeries>>& a,
                               std::vector<int> cols, int row, int vars, int cap) {
    if (cols.empty()) return one(vars, cap);
    TruncatedSeries acc(vars, cap);
    for (size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> rest;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != j) rest.push_back(cols[t]);
        auto sub = ts_mul(a[static_cast<size_t>(row)][static_cast<size_t>(cols[j])],
                          series_det_rec(a, std::move(rest), row + 1, vars, cap));
        acc = (j % 2 == 0) ? ts_add(acc, sub) : ts_sub(acc, sub);
    }
    return acc;
}

/// Elementary symmetric values e_0..e_m of sample points.
std::vector<GaussianRational> elementary_values(const std::vector<GaussianRational>& xs) {
    std::vector<GaussianRational> e(xs.size() + 1, GaussianRational(0));
    e[0] = GaussianRational(1);
    for (const auto& x : xs)
        for (size_t k = e.size() - 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * x;
    return e;
}

std::string expo_str(const std::vector<int>& expo) {
    std::string s = "(";
    for (size_t i = 0; i < expo.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(expo[i]);
    }
    return s + ")";
}

}  // namespace

TruncatedSeries::TruncatedSeries(int num_vars, int cap) : num_vars_(num_vars), cap_(cap) {
    if (num_vars < 1 || num_vars > 6) throw std::invalid_argument("series variable count out of range");
    if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
}

TruncatedSeries TruncatedSeries::constant(int num_vars, int cap, const GaussianRational& c) {
    TruncatedSeries s(num_vars, cap);
    s.add_term(std::vector<int>(static_cast<size_t>(num_vars), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(int num_vars, int cap, int index) {
    TruncatedSeries s(num_vars, cap);
    if (index < 0 || index >= num_vars) throw std::out_of_range("variable index out of range");
    std::vector<int> expo(static_cast<size_t>(num_vars), 0);
    expo[static_cast<size_t>(index)] = 1;
    s.add_term(expo, GaussianRational(1));
    return s;
}

GaussianRational TruncatedSeries::coeff(const std::vector<int>& expo) const {
    if (static_cast<int>(expo.size()) != num_vars_)
        throw std::invalid_argument("exponent length does not match the variable count");
    auto it = terms_.find(expo);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void TruncatedSeries::add_term(const std::vector<int>& expo, const GaussianRational& c) {
    if (static_cast<int>(expo.size()) != num_vars_)
        throw std::invalid_argument("exponent length does not match the variable count");
    for (int e : expo)
        if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (total_degree(expo) > cap_) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(expo, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b);
    TruncatedSeries out = a;
    for (const auto& [expo, c] : b.terms()) out.add_term(expo, c);
    return out;
}

TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b);
    TruncatedSeries out = a;
    for (const auto& [expo, c] : b.terms()) out.add_term(expo, GaussianRational(0) - c);
    return out;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b);
    TruncatedSeries out(a.num_vars(), a.cap());
    for (const auto& [ea, ca] : a.terms()) {
        const int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) > a.cap()) continue;
            std::vector<int> expo(ea.size());
            for (size_t i = 0; i < ea.size(); ++i) expo[i] = ea[i] + eb[i];
            out.add_term(expo, ca * cb);
        }
    }
    return out;
}

TruncatedSeries ts_scale(const TruncatedSeries& a, const GaussianRational& s) {
    TruncatedSeries out(a.num_vars(), a.cap());
    for (const auto& [expo, c] : a.terms()) out.add_term(expo, c * s);
    return out;
}

TruncatedSeries ts_inverse(const TruncatedSeries& a) {
    const auto c0 = constant_term(a);
    if (c0.is_zero()) throw std::domain_error("series has zero constant term: not invertible");
    // a = c0 (1 - u) with u of positive valuation; 1/a = (1/c0) sum u^k
    auto u = ts_sub(one(a.num_vars(), a.cap()), ts_scale(a, GaussianRational(1) / c0));
    auto acc = one(a.num_vars(), a.cap());
    auto power = one(a.num_vars(), a.cap());
    for (int k = 1; k <= a.cap(); ++k) {
        power = ts_mul(power, u);
        acc = ts_add(acc, power);
    }
    return ts_scale(acc, GaussianRational(1) / c0);
}

TruncatedSeries ts_log(const TruncatedSeries& a) {
    if (!(constant_term(a) == GaussianRational(1)))
        throw std::domain_error("series logarithm needs constant term 1");
    auto u = ts_sub(a, one(a.num_vars(), a.cap()));
    TruncatedSeries acc(a.num_vars(), a.cap());
    auto power = one(a.num_vars(), a.cap());
    for (int k = 1; k <= a.cap(); ++k) {
        power = ts_mul(power, u);
        auto sign = (k % 2 == 1) ? GaussianRational(1) : GaussianRational(-1);
        acc = ts_add(acc, ts_scale(power, sign / GaussianRational(k)));
    }
    return acc;
}

TruncatedSeries ts_exp(const TruncatedSeries& a) {
    if (!constant_term(a).is_zero())
        throw std::domain_error("series exponential needs constant term 0");
    auto acc = one(a.num_vars(), a.cap());
    auto power = one(a.num_vars(), a.cap());
    for (int k = 1; k <= a.cap(); ++k) {
        power = ts_mul(power, a);
        acc = ts_add(acc, ts_scale(power, GaussianRational(1) / GaussianRational(Rat(factorial(k)))));
    }
    return acc;
}

TruncatedSeries ts_pow(const TruncatedSeries& a, const GaussianRational& r) {
    if (r.im != 0) throw std::invalid_argument("series exponents must be real");
    if (is_integer(r)) {
        long long e = integer_value(r);
        auto base = e < 0 ? ts_inverse(a) : a;
        if (e < 0) e = -e;
        auto acc = one(a.num_vars(), a.cap());
        while (e > 0) {
            if (e & 1) acc = ts_mul(acc, base);
            base = ts_mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    if (!(constant_term(a) == GaussianRational(1)))
        throw std::domain_error("fractional series powers need constant term 1");
    return ts_exp(ts_scale(ts_log(a), r));
}

SquareMatrix square_matrix(std::vector<std::vector<GaussianRational>> entries) {
    SquareMatrix a{std::move(entries)};
    if (a.entries.empty() || a.entries.size() > 8)
        throw std::invalid_argument("matrix dimension out of range");
    for (const auto& row : a.entries)
        if (row.size() != a.entries.size()) throw std::invalid_argument("matrix is not square");
    return a;
}

GaussianRational matrix_det(const SquareMatrix& a) {
    std::vector<int> cols(static_cast<size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) cols[static_cast<size_t>(j)] = j;
    return det_rec(a.entries, std::move(cols), 0);
}

CheckReport macmahon_check(const SquareMatrix& a, const GaussianRational& beta, int cap) {
    const int m = a.dim();
    if (m > 3) throw std::invalid_argument("cycle-weight matrix check is limited to dimension 3");
    if (cap < 0 || cap > 5) throw std::invalid_argument("cap must lie in [0, 5]");

    std::vector<std::vector<TruncatedSeries>> entries;
    for (int i = 0; i < m; ++i) {
        std::vector<TruncatedSeries> row;
        for (int j = 0; j < m; ++j) {
            TruncatedSeries cell(m, cap);
            std::vector<int> expo(static_cast<size_t>(m), 0);
            if (i == j) cell.add_term(expo, GaussianRational(1));
            expo[static_cast<size_t>(i)] = 1;
            cell.add_term(expo, GaussianRational(0) - a.entries[static_cast<size_t>(i)]
                                                               [static_cast<size_t>(j)]);
            row.push_back(std::move(cell));
        }
        entries.push_back(std::move(row));
    }
    std::vector<int> cols(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) cols[static_cast<size_t>(j)] = j;
    const auto series = ts_pow(series_det_rec(entries, std::move(cols), 0, m, cap),
                               GaussianRational(0) - beta);

    CheckReport r;
    r.ok = true;
    int checks = 0;
    for_each_index(m, cap, [&](const std::vector<int>& sizes) {
        if (!r.ok) return;
        const auto g = ground_set(sizes);
        std::vector<int> box_of;  // 1-based elements
        for (int bx = 0; bx < m; ++bx)
            for (int t = 0; t < sizes[static_cast<size_t>(bx)]; ++t) box_of.push_back(bx);
        GaussianRational rhs(0);
        enumerate(g, DiagramKind::permutation, EnumFilter::all,
                  [&](const DiagramObject& o) {
                      auto w = gr_pow(beta, statistics(o, g).cyc);
                      for (int i = 0; i < o.n; ++i) {
                          const int bi = box_of[static_cast<size_t>(i)];
                          const int bj = box_of[static_cast<size_t>(o.sigma[static_cast<size_t>(i)] - 1)];
                          w *= a.entries[static_cast<size_t>(bi)][static_cast<size_t>(bj)];
                      }
                      rhs += w;
                  });
        const auto lhs = series.coeff(sizes) * factorial_product(sizes);
        ++checks;
        if (!(lhs == rhs)) {
            r.ok = false;
            r.lhs = lhs;
            r.rhs = rhs;
            r.note = "first mismatch at index " + expo_str(sizes);
        }
    });
    if (r.ok) r.note = "all " + std::to_string(checks) + " coefficients agree";
    return r;
}

CheckReport det_identities(int m, const GaussianRational& c,
                           const std::vector<GaussianRational>& samples) {
    if (m < 1 || m > 5) throw std::invalid_argument("dimension must lie in [1, 5]");
    if (static_cast<int>(samples.size()) < m + 3)
        throw std::invalid_argument("need at least m + 3 sample values");
    const std::vector<GaussianRational> xs(samples.begin(), samples.begin() + m);
    const auto x0 = samples[static_cast<size_t>(m)];
    const auto a = samples[static_cast<size_t>(m) + 1];
    const auto b = samples[static_cast<size_t>(m) + 2];

    CheckReport r;
    r.ok = true;
    int checks = 0;
    auto verify = [&](const GaussianRational& lhs, const GaussianRational& rhs,
                      const std::string& what) {
        ++checks;
        if (r.ok && !(lhs == rhs)) {
            r.ok = false;
            r.lhs = lhs;
            r.rhs = rhs;
            r.note = what + " fails";
        }
    };

    auto phi = [&](const GaussianRational& t) {
        GaussianRational acc(1);
        for (const auto& x : xs) acc *= x - t;
        return acc;
    };
    auto bordered = [&](const GaussianRational& up, const GaussianRational& down) {
        std::vector<std::vector<GaussianRational>> e(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                e[static_cast<size_t>(i)].push_back(i == j ? xs[static_cast<size_t>(i)]
                                                   : i < j ? up
                                                           : down);
        return matrix_det(square_matrix(std::move(e)));
    };

    if (a == b) throw std::invalid_argument("the last two samples must differ");
    for (const auto& x : xs) {
        if (x == a) throw std::invalid_argument("diagonal samples must avoid the off-diagonal one");
        if (x == GaussianRational(-1)) throw std::invalid_argument("samples must avoid -1");
    }
    verify(bordered(a, b), (a * phi(b) - b * phi(a)) / (a - b), "split off-diagonal determinant");
    GaussianRational corr(0);
    for (const auto& x : xs) corr += GaussianRational(1) / (x - a);
    verify(bordered(a, a), phi(a) * (GaussianRational(1) + a * corr),
           "equal off-diagonal determinant limit");

    // banded determinant: rows carry -x_i left of the diagonal, -c x_i right
    // of it, and the final row -x_0 with corner 1 - x_0
    std::vector<std::vector<GaussianRational>> d(static_cast<size_t>(m) + 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= m; ++j)
            d[static_cast<size_t>(i)].push_back(i == j   ? GaussianRational(1)
                                                : j < i  ? GaussianRational(0) - xs[static_cast<size_t>(i)]
                                                         : GaussianRational(0) - c * xs[static_cast<size_t>(i)]);
    for (int j = 0; j <= m; ++j)
        d[static_cast<size_t>(m)].push_back(j == m ? GaussianRational(1) - x0
                                                   : GaussianRational(0) - x0);
    const auto e = elementary_values(xs);
    GaussianRational banded_rhs(1);
    for (int k = 2; k <= m; ++k) {
        GaussianRational geo(0);
        for (int t = 1; t <= k - 1; ++t) geo += gr_pow(c, t);
        banded_rhs -= geo * e[static_cast<size_t>(k)];
    }
    GaussianRational prod(1);
    for (const auto& x : xs) prod *= GaussianRational(1) + c * x;
    banded_rhs -= x0 * prod;
    verify(matrix_det(square_matrix(std::move(d))), banded_rhs, "banded determinant");

    GaussianRational left(1), frac(0);
    for (const auto& x : xs) {
        left *= GaussianRational(1) + x;
        frac += x / (GaussianRational(1) + x);
    }
    left *= GaussianRational(1) - frac;
    GaussianRational right(1);
    for (int k = 2; k <= m; ++k)
        right -= GaussianRational(k - 1) * e[static_cast<size_t>(k)];
    verify(left, right, "product simplification");

    if (r.ok) r.note = "all " + std::to_string(checks) + " identities hold";
    return r;
}

CheckReport gf_check(GfIdentity id, const std::map<std::string, GaussianRational>& params,
                     int vars_a, int vars_b, int cap) {
    const bool pair = id == GfIdentity::laguerre_pair || id == GfIdentity::meixner_pair;
    if (vars_a < 1) throw std::invalid_argument("need at least one product variable");
    if (pair ? vars_b < 1 : vars_b != 0)
        throw std::invalid_argument("second variable block is for pair identities only");
    if (vars_a + vars_b > 3) throw std::invalid_argument("at most 3 product variables");
    if (cap < 0 || cap > 5) throw std::invalid_argument("cap must lie in [0, 5]");

    const bool has_front = id != GfIdentity::hermite_exponential;
    const int boxes = vars_a + vars_b;
    const int vars = boxes + (has_front ? 1 : 0);
    const int lo = has_front ? 1 : 0;  // first box-variable index

    int pair_gap = 0;
    if (pair) {
        const auto diff = params.at("alpha") - params.at("beta");
        if (!is_integer(diff) || integer_value(diff) < 0)
            throw std::invalid_argument("the parameter difference must be a nonnegative integer");
        pair_gap = static_cast<int>(integer_value(diff));
    }

    // closed-form right side
    TruncatedSeries rhs = one(vars, cap);
    auto box_product = [&](const GaussianRational& scale) {
        // prod over box variables of (1 + scale x_i)
        return subset_sum(vars, cap, lo, lo + boxes,
                          [&](int size) { return gr_pow(scale, size); });
    };
    auto weighted_elementary = [&](const std::function<GaussianRational(int)>& w) {
        return subset_sum(vars, cap, lo, lo + boxes, [&](int size) {
            return size < 2 ? (size == 0 ? GaussianRational(1) : GaussianRational(0)) : w(size);
        });
    };
    switch (id) {
        case GfIdentity::laguerre_power:
        case GfIdentity::laguerre_pair: {
            const auto alpha = params.at("alpha");
            auto base = weighted_elementary(
                [&](int l) { return GaussianRational(0) - GaussianRational(l - 1); });
            base = ts_sub(base, ts_mul(TruncatedSeries::variable(vars, cap, 0),
                                       box_product(GaussianRational(1))));
            rhs = ts_pow(base, GaussianRational(0) - alpha - GaussianRational(1));
            break;
        }
        case GfIdentity::meixner_falling:
        case GfIdentity::meixner_pair: {
            const auto expo = id == GfIdentity::meixner_falling ? params.at("beta")
                                                                : params.at("alpha");
            const auto c = params.at("c");
            auto base = weighted_elementary([&](int l) {
                GaussianRational geo(0);  // (1 - c^{1-l}) / (c (1 - 1/c)) = 1/c + ... + c^{1-l}
                for (int t = 1; t <= l - 1; ++t) geo += gr_pow(c, -t);
                return GaussianRational(0) - geo;
            });
            base = ts_sub(base, ts_mul(TruncatedSeries::variable(vars, cap, 0),
                                       box_product(GaussianRational(1) / c)));
            rhs = ts_pow(base, GaussianRational(0) - expo);
            break;
        }
        case GfIdentity::hermite_exponential: {
            rhs = ts_exp(subset_sum(vars, cap, lo, lo + boxes, [](int size) {
                return size == 2 ? GaussianRational(1) : GaussianRational(0);
            }));
            break;
        }
        case GfIdentity::charlier_exponential: {
            const auto av = params.at("a");
            auto tail = weighted_elementary([](int) { return GaussianRational(1); });
            // x_0 (1 + e_1 + ... + e_m) + (e_2 + ... + e_m)
            auto e1 = subset_sum(vars, cap, lo, lo + boxes, [](int size) {
                return size == 1 ? GaussianRational(1) : GaussianRational(0);
            });
            auto front = ts_mul(TruncatedSeries::variable(vars, cap, 0),
                                ts_add(tail, e1));
            rhs = ts_exp(ts_scale(
                ts_add(front, ts_sub(tail, one(vars, cap))), av));
            break;
        }
    }
    if (pair) {
        auto tail_factor = subset_sum(vars, cap, lo + vars_a, lo + boxes,
                                      [](int) { return GaussianRational(1); });
        rhs = ts_mul(rhs, ts_pow(tail_factor, GaussianRational(pair_gap)));
    }

    // functional left side per exponent vector
    std::function<GaussianRational(const std::vector<int>&)> value;
    switch (id) {
        case GfIdentity::laguerre_power: {
            auto L = std::make_shared<MomentFunctional>(
                make_family("laguerre", {{"alpha", params.at("alpha")}}));
            value = [L](const std::vector<int>& e) {
                return generalized_moment_product(
                    *L, e[0], XMode::monomial,
                    multi_index(std::vector<int>(e.begin() + 1, e.end())));
            };
            break;
        }
        case GfIdentity::meixner_falling: {
            auto L = std::make_shared<MomentFunctional>(make_family(
                "meixner", {{"beta", params.at("beta")}, {"c", params.at("c")}}));
            value = [L](const std::vector<int>& e) {
                return generalized_moment_product(
                    *L, e[0], XMode::falling_factorial,
                    multi_index(std::vector<int>(e.begin() + 1, e.end())));
            };
            break;
        }
        case GfIdentity::laguerre_pair: {
            auto fA = make_family("laguerre", {{"alpha", params.at("alpha")}});
            auto fB = make_family("laguerre", {{"alpha", params.at("beta")}});
            value = [fA, fB, vars_a](const std::vector<int>& e) {
                return mixed_linearization(
                    fA, fB, e[0],
                    multi_index(std::vector<int>(e.begin() + 1, e.begin() + 1 + vars_a)),
                    multi_index(std::vector<int>(e.begin() + 1 + vars_a, e.end())));
            };
            break;
        }
        case GfIdentity::meixner_pair: {
            auto fA = make_family("meixner",
                                  {{"beta", params.at("alpha")}, {"c", params.at("c")}});
            auto fB = make_family("meixner",
                                  {{"beta", params.at("beta")}, {"c", params.at("c")}});
            value = [fA, fB, vars_a](const std::vector<int>& e) {
                return mixed_linearization(
                    fA, fB, e[0],
                    multi_index(std::vector<int>(e.begin() + 1, e.begin() + 1 + vars_a)),
                    multi_index(std::vector<int>(e.begin() + 1 + vars_a, e.end())));
            };
            break;
        }
        case GfIdentity::hermite_exponential: {
            auto L = std::make_shared<MomentFunctional>(make_family("hermite", {}));
            value = [L](const std::vector<int>& e) {
                return linearization(*L, multi_index(e));
            };
            break;
        }
        case GfIdentity::charlier_exponential: {
            auto L = std::make_shared<MomentFunctional>(
                make_family("charlier", {{"a", params.at("a")}}));
            value = [L](const std::vector<int>& e) {
                return generalized_moment_product(
                    *L, e[0], XMode::falling_factorial,
                    multi_index(std::vector<int>(e.begin() + 1, e.end())));
            };
            break;
        }
    }

    CheckReport r;
    r.ok = true;
    int checks = 0;
    for_each_index(vars, cap, [&](const std::vector<int>& expo) {
        if (!r.ok) return;
        const auto lhs = rhs.coeff(expo) * factorial_product(expo);
        const auto want = value(expo);
        ++checks;
        if (!(lhs == want)) {
            r.ok = false;
            r.lhs = lhs;
            r.rhs = want;
            r.note = "first mismatch at index " + expo_str(expo) + ": series gives " +
                     gr_str(lhs) + ", functional gives " + gr_str(want);
        }
    });
    if (r.ok) r.note = "all " + std::to_string(checks) + " coefficients agree";
    return r;
}

GaussianRational power_product_closed_form(int m, int n, int s) {
    if (m < 0 || n < 0 || s < 0) throw std::invalid_argument("sizes must be nonnegative");
    Int sum = 0;
    for (int j = 0; j <= m; ++j)
        sum += binomial(m, j) * binomial(s, n + j - m) * binomial(s + m - j, m);
    return GaussianRational(Rat(factorial(m) * factorial(n) * factorial(s) * sum));
}

GaussianRational falling_product_closed_form(int m, int n, int s, const GaussianRational& c) {
    if (m < 0 || n < 0 || s < 0) throw std::invalid_argument("sizes must be nonnegative");
    if (c.is_zero()) throw std::invalid_argument("c must be nonzero");
    GaussianRational sum(0);
    for (int j = 0; j <= m; ++j) {
        const Int k = binomial(m, j) * binomial(s, n + j - m) * binomial(s + m - j, m);
        if (k == 0) continue;
        sum += GaussianRational(Rat(k)) * gr_pow(c, -n - j);
    }
    return GaussianRational(Rat(factorial(m) * factorial(n) * factorial(s))) * sum;
}

}  // namespace olc
