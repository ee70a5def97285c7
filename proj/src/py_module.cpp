#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <olc/series.hpp>
#include <olc/verify.hpp>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace olc;

/// Parameters arrive as "p/q" strings; birth-death takes textual rate rules.
FamilySpec build_family(const std::string& name,
                        const std::map<std::string, std::string>& params) {
    if (name == "birth-death") {
        auto b = params.find("b");
        auto d = params.find("d");
        if (b == params.end() || d == params.end() || params.size() != 2)
            throw std::invalid_argument(
                "family birth-death takes exactly the parameters b and d (rate rules)");
        return make_birth_death_family(b->second, d->second);
    }
    std::map<std::string, GaussianRational> parsed;
    for (const auto& [key, value] : params) parsed[key] = GaussianRational{parse_rational(value)};
    return make_family(name, parsed);
}

std::vector<GaussianRational> parse_scalings(const std::vector<std::string>& lambdas) {
    std::vector<GaussianRational> out;
    for (const auto& s : lambdas) out.emplace_back(parse_rational(s));
    return out;
}

XMode parse_x_mode(const std::string& x_mode) {
    if (x_mode == "monomial") return XMode::monomial;
    if (x_mode == "falling") return XMode::falling_factorial;
    throw std::invalid_argument("x_mode must be 'monomial' or 'falling'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact linearization, moment, and enumeration calculator for orthogonal "
              "polynomial families";

    m.def("family_names", &family_names, "registered family names");
    m.def("family_param_keys", &family_param_keys, py::arg("name"),
          "parameter keys a family requires");

    m.def(
        "linearization",
        [](const std::string& family, const std::map<std::string, std::string>& params,
           const std::vector<int>& n, const std::vector<std::string>& lambdas, int x_power,
           const std::string& x_mode) {
            FamilySpec f = build_family(family, params);
            MomentFunctional L(f);
            MultiIndex idx = multi_index(n, parse_scalings(lambdas));
            return gr_str(generalized_moment_product(L, x_power, parse_x_mode(x_mode), idx));
        },
        py::arg("family"), py::arg("params"), py::arg("n"),
        py::arg("lambdas") = std::vector<std::string>{}, py::arg("x_power") = 0,
        py::arg("x_mode") = "monomial",
        "L(x^k prod_j p_{n_j}(lambda_j x)) as an exact rational string");

    m.def(
        "moments",
        [](const std::string& family, const std::map<std::string, std::string>& params, int to) {
            FamilySpec f = build_family(family, params);
            MomentFunctional L(f);
            std::vector<std::string> out;
            for (int k = 0; k <= to; ++k) out.push_back(gr_str(L.moment(k)));
            return out;
        },
        py::arg("family"), py::arg("params"), py::arg("to") = 8,
        "mu_0..mu_to of the family's normalized moment functional");

    m.def(
        "enumerate_count",
        [](const std::string& kind, const std::vector<int>& boxes) {
            static const std::map<std::string, std::pair<DiagramKind, EnumFilter>> kinds = {
                {"matchings", {DiagramKind::matching, EnumFilter::all}},
                {"partitions", {DiagramKind::partition, EnumFilter::all}},
                {"permutations", {DiagramKind::permutation, EnumFilter::all}},
                {"derangements", {DiagramKind::permutation, EnumFilter::inhomogeneous}},
                {"inhomogeneous-matchings", {DiagramKind::matching, EnumFilter::inhomogeneous}},
                {"inhomogeneous-partitions",
                 {DiagramKind::partition, EnumFilter::inhomogeneous}}};
            auto it = kinds.find(kind);
            if (it == kinds.end()) throw std::invalid_argument("unknown kind: " + kind);
            auto objects =
                enumerate_all(ground_set(boxes), it->second.first, it->second.second, EnumCaps{});
            return static_cast<long long>(objects.size());
        },
        py::arg("kind"), py::arg("boxes"), "number of diagrams of the kind over the boxes");

    m.def(
        "verify",
        [](const std::string& suite, int max_total, int samples) {
            SuiteOptions opt;
            opt.max_total = max_total;
            opt.samples = samples;
            py::list out;
            for (const auto& rep : run_suites(suite, opt)) {
                py::list checks;
                for (const auto& c : rep.checks) {
                    py::dict row;
                    row["check"] = c.check;
                    row["pass"] = c.pass;
                    row["lhs"] = c.lhs;
                    row["rhs"] = c.rhs;
                    checks.append(row);
                }
                py::dict r;
                r["suite"] = rep.suite;
                r["ok"] = rep.ok();
                r["checks"] = checks;
                out.append(r);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("max_total") = 6, py::arg("samples") = 3,
        "run a verification suite ('all' runs every suite) and report the verdict rows");
}
