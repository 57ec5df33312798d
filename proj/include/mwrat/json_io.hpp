#pragma once

// JSON encodings: integers and rationals as decimal / "p/q" strings inside matrices,
// scenario files, pencil coefficient files and polynomial term lists.

#include "mwrat/germ.hpp"
#include "mwrat/mordell_weil.hpp"
#include "mwrat/pencil.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace mwrat {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become InputError with line and column.
Json load_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& source = "<input>");

Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const AbelianGroupInvariants& g);

/// Accepts JSON integers or decimal strings; `where` prefixes error messages.
Int int_from_json(const Json& j, const std::string& where);
Rat rat_from_json(const Json& j, const std::string& where);
IntVector int_vector_from_json(const Json& j, const std::string& where);
IntMatrix int_matrix_from_json(const Json& j, const std::string& where);

/// { "name"?, "genus", "degree", "n", "fiber", "sections", "fibers": [ { "components", "names"? } ] }
Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);

/// { "genus"?, "c": { "i,j": "p/q", ... } }. A `genus` argument overrides the file.
PencilCoefficients pencil_from_json(const Json& j, std::optional<int> genus = std::nullopt);
Json pencil_to_json(const PencilCoefficients& pc);

Json double_cover_to_json(const DoubleCoverCoefficients& dc);

/// [ { "exp": [t, x, y, z], "coef": "p/q" }, ... ]; shorter exponent lists are zero-padded.
SparsePoly poly_from_json(const Json& j);
Json poly_to_json(const SparsePoly& p);

}  // namespace mwrat
