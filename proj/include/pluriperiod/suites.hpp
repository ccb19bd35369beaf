#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pluriperiod/report.hpp"

namespace pluriperiod {

struct RunConfig {
    std::string suite = "all";
    int m = -1;               ///< primary weight index, k = 2 - 2m
    int n = -2;               ///< secondary index for cross-weight, n < m
    double radius = 8.0;      ///< orbit ball radius
    std::size_t cap = 1000000;
    double tol = 1e-8;        ///< outer quadrature tolerance
    bool parallel = true;     ///< use the OpenMP kernel path
    std::uint32_t seed = 20240817;
};

/// The verification suites in canonical order.
const std::vector<std::string>& suite_names();

/// Run one named suite.  Throws ConfigError for unknown names or parameter
/// combinations the suite rejects (e.g. m > -1 where series convergence is
/// required, or n >= m for cross-weight).
Report run_suite(const std::string& name, const RunConfig& cfg);

/// Run cfg.suite (or every suite for "all") and collect one deterministic
/// JSON document: schema_version, config echo, one report per suite, and the
/// aggregate all_pass flag.  No timing data is included here.
Json run_suites(const RunConfig& cfg);

}  // namespace pluriperiod
