#include <olc/family.hpp>

#include <cctype>
#include <stdexcept>

namespace olc {

namespace {

const GaussianRational kOne{1};
const GaussianRational kZero{0};

void require_params(const FamilySpec& f, const std::vector<std::string>& keys) {
    for (const auto& k : keys)
        if (!f.params.count(k))
            throw std::invalid_argument("family " + f.name + " requires parameter " + k);
    if (f.params.size() != keys.size())
        throw std::invalid_argument("family " + f.name + " given an unknown parameter");
}

}  // namespace

std::vector<std::string> family_names() {
    return {"hermite",   "charlier",  "laguerre",          "meixner",
            "meixner-pollaczek",      "q-hermite",         "q-charlier",
            "q-laguerre", "al-salam-chihara", "birth-death"};
}

std::vector<std::string> family_param_keys(const std::string& name) {
    if (name == "hermite") return {};
    if (name == "charlier") return {"a"};
    if (name == "laguerre") return {"alpha"};
    if (name == "meixner") return {"beta", "c"};
    if (name == "meixner-pollaczek") return {"delta", "eta"};
    if (name == "q-hermite") return {"q"};
    if (name == "q-charlier") return {"a", "b", "c", "q"};
    if (name == "q-laguerre") return {"y", "q"};
    if (name == "al-salam-chihara") return {"t1", "t2", "q"};
    if (name == "birth-death") return {"b", "d"};
    throw std::invalid_argument("unknown family: " + name);
}

FamilySpec make_family(const std::string& name,
                       const std::map<std::string, GaussianRational>& params) {
    FamilySpec f;
    f.name = name;
    f.params = params;

    if (name == "hermite") {
        require_params(f, {});
        f.coeff_fn = [](int n) {
            return std::array<GaussianRational, 3>{kOne, kZero, GaussianRational{n}};
        };
    } else if (name == "charlier") {
        require_params(f, {"a"});
        GaussianRational a = params.at("a");
        f.coeff_fn = [a](int n) {
            return std::array<GaussianRational, 3>{
                kOne, -(GaussianRational{n} + a), a * GaussianRational{n}};
        };
    } else if (name == "laguerre") {
        require_params(f, {"alpha"});
        GaussianRational al = params.at("alpha");
        f.coeff_fn = [al](int n) {
            return std::array<GaussianRational, 3>{
                kOne, -(GaussianRational{2 * n + 1} + al),
                GaussianRational{n} * (GaussianRational{n} + al)};
        };
    } else if (name == "meixner") {
        require_params(f, {"beta", "c"});
        GaussianRational be = params.at("beta");
        GaussianRational c = params.at("c");
        if (c == kZero || c == kOne)
            throw std::invalid_argument("family meixner requires c not in {0, 1}");
        f.prefactor = PrefactorRule::meixner_inverse_c;
        f.coeff_fn = [be, c](int n) {
            GaussianRational nn{n};
            return std::array<GaussianRational, 3>{
                kOne - kOne / c, be + nn + nn / c,
                nn * (be + nn - kOne) / c};
        };
    } else if (name == "meixner-pollaczek") {
        require_params(f, {"delta", "eta"});
        GaussianRational de = params.at("delta");
        GaussianRational et = params.at("eta");
        f.coeff_fn = [de, et](int n) {
            GaussianRational nn{n};
            return std::array<GaussianRational, 3>{
                kOne, -de * (et + GaussianRational{2 * n}),
                nn * (et + nn - kOne) * (kOne + de * de)};
        };
    } else if (name == "q-hermite") {
        require_params(f, {"q"});
        GaussianRational q = params.at("q");
        f.coeff_fn = [q](int n) {
            return std::array<GaussianRational, 3>{kOne, kZero, q_integer(n, q)};
        };
    } else if (name == "q-charlier") {
        require_params(f, {"a", "b", "c", "q"});
        GaussianRational a = params.at("a");
        GaussianRational b = params.at("b");
        GaussianRational c = params.at("c");
        GaussianRational q = params.at("q");
        f.coeff_fn = [a, b, c, q](int n) {
            return std::array<GaussianRational, 3>{
                kOne, -(c + b * q_integer(n, q)), a * q_integer(n, q)};
        };
    } else if (name == "q-laguerre") {
        require_params(f, {"y", "q"});
        GaussianRational y = params.at("y");
        GaussianRational q = params.at("q");
        f.coeff_fn = [y, q](int n) {
            GaussianRational qn = q_integer(n, q);
            return std::array<GaussianRational, 3>{
                kOne, -(y * q_integer(n + 1, q) + qn), y * qn * qn};
        };
    } else if (name == "al-salam-chihara") {
        require_params(f, {"t1", "t2", "q"});
        GaussianRational t1 = params.at("t1");
        GaussianRational t2 = params.at("t2");
        GaussianRational q = params.at("q");
        f.coeff_fn = [t1, t2, q](int n) {
            GaussianRational a{2};
            GaussianRational b = -(t1 + t2) * gr_pow(q, n);
            GaussianRational c =
                n == 0 ? kZero
                       : (kOne - gr_pow(q, n)) * (kOne - t1 * t2 * gr_pow(q, n - 1));
            return std::array<GaussianRational, 3>{a, b, c};
        };
    } else if (name == "birth-death") {
        throw std::invalid_argument(
            "birth-death families take textual rate rules; use make_birth_death_family");
    } else {
        throw std::invalid_argument("unknown family: " + name);
    }
    return f;
}

std::array<GaussianRational, 3> recurrence_coeffs(const FamilySpec& f, int n) {
    if (n < 0 || n > f.max_degree_validated)
        throw std::invalid_argument("family " + f.name + ": degree out of validated range");
    auto abc = f.coeff_fn(n);
    if (abc[0].is_zero())
        throw std::domain_error("family " + f.name + " invalid: A_n = 0 at n = " +
                                std::to_string(n));
    return abc;
}

FamilySpec from_birth_death(const BirthDeathSpec& bd) {
    FamilySpec f;
    f.name = "birth-death";
    auto b_fn = bd.b_fn;
    auto d_fn = bd.d_fn;
    f.coeff_fn = [b_fn, d_fn](int n) {
        GaussianRational b = b_fn(n);
        GaussianRational d = d_fn(n);
        if (b.is_zero())
            throw std::domain_error("birth-death rates invalid: b_n = 0 at n = " +
                                    std::to_string(n));
        return std::array<GaussianRational, 3>{-kOne / b, (b + d) / b, d / b};
    };
    return f;
}

Poly parse_rate_rule(const std::string& rule) {
    std::string s;
    for (char ch : rule)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty rate rule");

    std::vector<GaussianRational> coeffs;
    auto add_term = [&](const GaussianRational& c, int deg) {
        if (deg >= static_cast<int>(coeffs.size()))
            coeffs.resize(static_cast<size_t>(deg) + 1);
        coeffs[static_cast<size_t>(deg)] += c;
    };

    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::string numeric;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            numeric += s[i++];
        GaussianRational coeff =
            numeric.empty() ? kOne : GaussianRational{parse_rational(numeric)};
        if (sign < 0) coeff = -coeff;
        if (i < s.size() && s[i] == '*') ++i;
        int deg = 0;
        if (i < s.size() && s[i] == 'n') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string exp;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    exp += s[i++];
                if (exp.empty()) throw std::invalid_argument("malformed rate rule: " + rule);
                deg = std::stoi(exp);
            }
        } else if (numeric.empty()) {
            throw std::invalid_argument("malformed rate rule: " + rule);
        }
        add_term(coeff, deg);
    }
    return Poly{std::move(coeffs)};
}

FamilySpec make_birth_death_family(const std::string& b_rule, const std::string& d_rule) {
    Poly bp = parse_rate_rule(b_rule);
    Poly dp = parse_rate_rule(d_rule);
    BirthDeathSpec bd;
    bd.b_fn = [bp](int n) { return poly_eval(bp, GaussianRational{n}); };
    bd.d_fn = [dp](int n) { return poly_eval(dp, GaussianRational{n}); };
    return from_birth_death(bd);
}

Poly polynomial(const FamilySpec& f, int n) {
    if (n < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
    Poly prev;                                    // p_{-1} = 0
    Poly cur = Poly::constant(kOne);              // p_0 = 1
    for (int k = 0; k < n; ++k) {
        auto [a, b, c] = recurrence_coeffs(f, k);
        Poly axb{{b, a}};
        Poly next = poly_sub(poly_mul(axb, cur), poly_scalar_mul(prev, c));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

GaussianRational norm_zeta(const FamilySpec& f, int n) {
    GaussianRational acc = recurrence_coeffs(f, 0)[0];
    for (int i = 1; i <= n; ++i) acc *= recurrence_coeffs(f, i)[2];
    return acc / recurrence_coeffs(f, n)[0];
}

std::vector<GaussianRational> multiplication_expand(const FamilySpec& f,
                                                    const GaussianRational& c, int n) {
    std::vector<GaussianRational> out(static_cast<size_t>(n) + 1, kZero);
    if (f.name == "laguerre") {
        GaussianRational al = f.params.at("alpha");
        for (int k = 0; k <= n; ++k)
            out[static_cast<size_t>(k)] =
                GaussianRational{Rat(binomial(n, k))} *
                rising_factorial(al + GaussianRational{1 + k}, n - k) * gr_pow(c, k) *
                gr_pow(c - kOne, n - k);
    } else if (f.name == "hermite") {
        GaussianRational half_shift = (c * c - kOne) / GaussianRational{2};
        for (int k = 0; 2 * k <= n; ++k) {
            GaussianRational mult{Rat(factorial(n) / (factorial(k) * factorial(n - 2 * k)))};
            out[static_cast<size_t>(n - 2 * k)] =
                mult * gr_pow(half_shift, k) * gr_pow(c, n - 2 * k);
        }
    } else {
        throw std::invalid_argument("multiplication_expand supports laguerre and hermite only");
    }
    return out;
}

}  // namespace olc
