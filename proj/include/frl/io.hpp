#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "frl/graph.hpp"
#include "frl/period.hpp"
#include "frl/polynomial.hpp"
#include "frl/power_counting.hpp"
#include "frl/residue.hpp"
#include "frl/rg_comb.hpp"

namespace frl {

using Json = nlohmann::ordered_json;

/// Parses either the text form "n=<int>; e=<i>-<j>[,<i>-<j>...]" (whitespace
/// ignored, repeated pairs add multiplicity) or the JSON form
/// {"vertices": n, "edges": [[i, j], ...]}. Throws Parse with a position.
Multigraph parse_graph(std::string_view text);

/// Serializes with 17 significant digits for every floating-point value.
std::string dump_json(const Json& j, int indent = 2);

Json graph_to_json(const Multigraph& g);
Json to_json(const PowerCountReport& r);
Json to_json(const PeriodEstimate& e);
PeriodEstimate period_estimate_from_json(const Json& j);
Json to_json(const ResidueValue& v);
ResidueValue residue_from_json(const Json& j);
Json to_json(const DiffOpResidue& d);
Json to_json(const CoproductTerm& t);
Json to_json(const BetaTerm& t);

}  // namespace frl
