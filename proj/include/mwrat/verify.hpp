#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mwrat {

struct CriterionResult {
    std::string id;
    std::string title;
    bool primary = true;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int g_min = 1;
    int g_max = 3;
    std::uint64_t seed = 7;
    int discriminant_trials = 100;  ///< per genus
    int isometry_trials = 100;      ///< per genus
    int oracle_trials = 50;
    int germ_trials = 10;           ///< random pencils per genus for the germ criterion
};

/// One result per acceptance criterion, in a fixed order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

/// Catalog-wide consistency checks beyond the acceptance list.
std::vector<CriterionResult> run_supplementary(const VerifyOptions& options);

}  // namespace mwrat
