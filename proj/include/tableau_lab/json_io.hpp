#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tableau_lab/core.hpp"
#include "tableau_lab/rsk.hpp"

namespace tableau_lab {

/// Canonical JSON forms:
///   Tableau  {"columns": [[...], ...], "width": w}  (columns left-to-right,
///            entries top-to-bottom; width equals the trimmed column count)
///   Diagram  {"columns": [l1, ..., lw]}
///   Permutation  [s1, ..., sm]
nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const Permutation& p);

/// Accepts a "width" greater than the stored columns (the extra columns are
/// empty and structurally absent after parsing).
Tableau tableau_from_json(const nlohmann::json& j);
Diagram diagram_from_json(const nlohmann::json& j);
Permutation permutation_from_json(const nlohmann::json& j);

/// One-line notation from space-separated text, e.g. "3 1 4 2".
Permutation permutation_from_string(const std::string& text);

/// Reads, parses and validates a tableau file; the result always classifies
/// as semistandard or standard. Failures carry cell-level diagnostics.
Tableau parse_tableau_file(const std::string& path);

std::string canonical_dump(const nlohmann::json& j);

}  // namespace tableau_lab
