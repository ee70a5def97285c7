#include <olc/series.hpp>
#include <olc/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace olc;

json scalar_json(const GaussianRational& z) {
    return json{{"re", rat_str(z.re)}, {"im", rat_str(z.im)}};
}

json envelope(const std::string& command, json inputs, json value, json verdicts) {
    json e;
    e["command"] = command;
    e["inputs"] = std::move(inputs);
    e["value"] = std::move(value);
    e["verdicts"] = std::move(verdicts);
    e["elapsed_ms"] = 0;
    return e;
}

std::map<std::string, std::string> parse_param_pairs(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("malformed --param, expected key=value: " + kv);
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

/// Builds the family and echoes its normalized parameters into inputs["param"].
/// birth-death takes textual rate rules b and d; every other family takes
/// rational values in lowest-terms "p/q" form.
FamilySpec family_from_cli(const std::string& name,
                           const std::map<std::string, std::string>& raw, json& inputs) {
    if (name == "birth-death") {
        auto b = raw.find("b");
        auto d = raw.find("d");
        if (b == raw.end() || d == raw.end() || raw.size() != 2)
            throw std::invalid_argument(
                "family birth-death takes exactly --param b=<rule> --param d=<rule>");
        inputs["param"] = json{{"b", b->second}, {"d", d->second}};
        return make_birth_death_family(b->second, d->second);
    }
    std::map<std::string, GaussianRational> params;
    json echo = json::object();
    for (const auto& [key, value] : raw) {
        GaussianRational v{parse_rational(value)};
        params[key] = v;
        echo[key] = rat_str(v.re);
    }
    inputs["param"] = std::move(echo);
    return make_family(name, params);
}

EnumCaps caps_from_env() {
    EnumCaps caps;
    if (const char* raw = std::getenv("OLC_MAX_TOTAL")) {
        int v = 0;
        try {
            v = std::stoi(raw);
        } catch (const std::exception&) {
            throw std::invalid_argument("OLC_MAX_TOTAL must be a positive integer");
        }
        if (v < 1) throw std::invalid_argument("OLC_MAX_TOTAL must be a positive integer");
        caps.matchings = caps.partitions = caps.permutations = v;
    }
    return caps;
}

struct ComputeArgs {
    std::string family;
    std::vector<std::string> params;
    std::vector<int> entries;
    std::vector<std::string> lambdas;
    int x_power = 0;
    std::string x_mode = "monomial";
    bool x_given = false;
};

std::pair<json, int> run_compute(const ComputeArgs& a) {
    json inputs;
    inputs["family"] = a.family;
    FamilySpec f = family_from_cli(a.family, parse_param_pairs(a.params), inputs);
    inputs["n"] = a.entries;
    std::vector<GaussianRational> lams;
    if (!a.lambdas.empty()) {
        json lecho = json::array();
        for (const auto& s : a.lambdas) {
            lams.emplace_back(parse_rational(s));
            lecho.push_back(rat_str(lams.back().re));
        }
        inputs["lambda"] = std::move(lecho);
    }
    if (a.x_given) {
        inputs["x-power"] = a.x_power;
        inputs["x-mode"] = a.x_mode;
    }
    MultiIndex idx = multi_index(a.entries, std::move(lams));
    MomentFunctional L(f);
    XMode mode = a.x_mode == "falling" ? XMode::falling_factorial : XMode::monomial;
    GaussianRational value = generalized_moment_product(L, a.x_power, mode, idx);
    return {envelope("compute", std::move(inputs), scalar_json(value), json::array()), 0};
}

struct EnumerateArgs {
    std::string kind;
    std::vector<int> boxes;
    bool count = false;
    bool stats = false;
};

std::pair<json, int> run_enumerate(const EnumerateArgs& a) {
    static const std::map<std::string, std::pair<DiagramKind, EnumFilter>> kinds = {
        {"matchings", {DiagramKind::matching, EnumFilter::all}},
        {"partitions", {DiagramKind::partition, EnumFilter::all}},
        {"permutations", {DiagramKind::permutation, EnumFilter::all}},
        {"derangements", {DiagramKind::permutation, EnumFilter::inhomogeneous}},
        {"inhomogeneous-matchings", {DiagramKind::matching, EnumFilter::inhomogeneous}},
        {"inhomogeneous-partitions", {DiagramKind::partition, EnumFilter::inhomogeneous}}};
    auto it = kinds.find(a.kind);
    if (it == kinds.end()) throw std::invalid_argument("unknown kind: " + a.kind);
    json inputs;
    inputs["kind"] = a.kind;
    inputs["boxes"] = a.boxes;
    inputs["count"] = a.count;
    inputs["stats"] = a.stats;
    BoxedGroundSet g = ground_set(a.boxes);
    auto objects = enumerate_all(g, it->second.first, it->second.second, caps_from_env());
    json value;
    if (a.count) {
        value = scalar_json(GaussianRational{static_cast<long long>(objects.size())});
    } else {
        value = json::array();
        for (const auto& o : objects) {
            json row;
            if (o.kind == DiagramKind::permutation) {
                row["sigma"] = o.sigma;
            } else {
                json arcs = json::array();
                for (const auto& [x, y] : o.arcs) arcs.push_back(json::array({x, y}));
                row["arcs"] = std::move(arcs);
            }
            if (a.stats) {
                StatRecord st = statistics(o, g);
                row["stats"] = json{{"cr", st.cr},     {"bl", st.bl},   {"sg", st.sg},
                                    {"tr", st.tr},     {"cyc", st.cyc}, {"exc", st.exc},
                                    {"wex", st.wex},   {"drop", st.drop}, {"ninv", st.ninv},
                                    {"exc_b", st.exc_b}, {"drop_b", st.drop_b}};
            }
            value.push_back(std::move(row));
        }
    }
    return {envelope("enumerate", std::move(inputs), std::move(value), json::array()), 0};
}

struct MomentsArgs {
    std::string family;
    std::vector<std::string> params;
    int to = 8;
};

std::pair<json, int> run_moments(const MomentsArgs& a) {
    json inputs;
    inputs["family"] = a.family;
    FamilySpec f = family_from_cli(a.family, parse_param_pairs(a.params), inputs);
    inputs["to"] = a.to;
    MomentFunctional L(f);
    json value = json::array();
    for (int n = 0; n <= a.to; ++n) value.push_back(scalar_json(L.moment(n)));
    return {envelope("moments", std::move(inputs), std::move(value), json::array()), 0};
}

struct VerifyArgs {
    std::string suite = "all";
    int max_total = 6;
    int samples = 3;
};

std::pair<json, int> run_verify(const VerifyArgs& a) {
    json inputs;
    inputs["suite"] = a.suite;
    inputs["max-total"] = a.max_total;
    inputs["samples"] = a.samples;
    SuiteOptions opt;
    opt.max_total = a.max_total;
    opt.samples = a.samples;
    auto reports = run_suites(a.suite, opt);
    json verdicts = json::array();
    bool all_pass = true;
    for (const auto& rep : reports)
        for (const auto& c : rep.checks) {
            all_pass = all_pass && c.pass;
            verdicts.push_back(json{{"check", rep.suite + ": " + c.check},
                                    {"pass", c.pass},
                                    {"lhs", c.lhs},
                                    {"rhs", c.rhs}});
        }
    return {envelope("verify", std::move(inputs), nullptr, std::move(verdicts)),
            all_pass ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linearization, moment, and enumeration calculator for orthogonal "
                 "polynomial families"};
    app.require_subcommand(1);
    bool quiet = false;
    bool json_out = true;

    ComputeArgs ca;
    auto* compute = app.add_subcommand(
        "compute", "evaluate L(x^k prod_j p_{n_j}(lambda_j x)) for a family");
    compute->add_option("--family", ca.family, "family name")->required();
    compute->add_option("--param", ca.params, "family parameter key=value (repeatable)");
    compute->add_option("--n", ca.entries, "comma-separated factor degrees")
        ->required()
        ->delimiter(',');
    compute->add_option("--lambda", ca.lambdas, "comma-separated argument scalings")
        ->delimiter(',');
    compute->add_option("--x-power", ca.x_power, "power of the free factor (default 0)")
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--x-mode", ca.x_mode, "free factor form: monomial or falling")
        ->check(CLI::IsMember({"monomial", "falling"}));

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "list or count diagrams over boxes");
    enumerate
        ->add_option("--kind", ea.kind,
                     "matchings | partitions | permutations | derangements | "
                     "inhomogeneous-matchings | inhomogeneous-partitions")
        ->required();
    enumerate->add_option("--boxes", ea.boxes, "comma-separated box sizes")
        ->required()
        ->delimiter(',');
    enumerate->add_flag("--count", ea.count, "report the count only");
    enumerate->add_flag("--stats", ea.stats, "include per-object statistics");

    MomentsArgs ma;
    auto* moments = app.add_subcommand("moments", "list mu_0..mu_N of a family's functional");
    moments->add_option("--family", ma.family, "family name")->required();
    moments->add_option("--param", ma.params, "family parameter key=value (repeatable)");
    moments->add_option("--to", ma.to, "highest moment degree (default 8)")
        ->check(CLI::NonNegativeNumber);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", va.suite,
                       "all | linearization | difference-system | boundary | moments | "
                       "bijections | series | positivity");
    verify->add_option("--max-total", va.max_total, "index total / ground size bound (default 6)");
    verify->add_option("--samples", va.samples, "parameter points per family (default 3)");

    for (auto* sub : {compute, enumerate, moments, verify}) {
        sub->add_flag("--json", json_out, "emit the JSON envelope (default)");
        sub->add_flag("--quiet", quiet, "suppress standard output, keep the exit code");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        std::pair<json, int> result;
        if (compute->parsed()) {
            ca.x_given = compute->count("--x-power") > 0 || compute->count("--x-mode") > 0;
            result = run_compute(ca);
        } else if (enumerate->parsed()) {
            result = run_enumerate(ea);
        } else if (moments->parsed()) {
            result = run_moments(ma);
        } else {
            result = run_verify(va);
        }
        if (!quiet) std::cout << result.first.dump(2) << "\n";
        return result.second;
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
