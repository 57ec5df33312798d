#pragma once

#include "mwrat/mordell_weil.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mwrat {

struct CatalogEntry {
    std::string name;
    Scenario scenario;
    std::optional<bool> expect_mw_trivial;
    std::optional<int> expect_mw_rank;
};

/// Constructor scenarios, hand-built reducible-fiber scenarios and their images under the
/// elementary transformation, for every genus in [g_min, g_max]. Names are unique.
std::vector<CatalogEntry> scenario_catalog(int g_min = 1, int g_max = 3);

/// Σ_g model with a single fiber whose only component 2E_1 − 2E_2 makes T non-saturated.
Scenario synthetic_index_two_scenario(int genus);

}  // namespace mwrat
