/// @file verify.hpp
/// @brief Named verification suites: each sweeps one slice of the engine
///        (products, difference systems, boundaries, moments, bijections,
///        series, positivity) and reports machine-readable verdicts.

#pragma once

#include <string>
#include <vector>

namespace olc {

/// One verdict row: what was checked plus both sides rendered exactly.
/// Aggregate rows render defect/case counts; scalar rows render rationals.
struct SuiteCheck {
    std::string check;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

/// Shared knobs. max_total bounds the index totals and ground-set sizes a
/// suite sweeps (suites derive their own ranges from it; the bijection and
/// moment sweeps run a few degrees above it). samples bounds the number of
/// parameter points tried per family.
struct SuiteOptions {
    int max_total = 6;
    int samples = 3;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool ok() const;
    int failed() const;
};

/// Suite names in fixed execution order ("all" is not listed).
const std::vector<std::string>& suite_names();

/// Runs one named suite; unknown names throw std::invalid_argument.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Runs the named suite, or every suite in order when name is "all".
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options = {});

}  // namespace olc
