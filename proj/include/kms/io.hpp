#pragma once

#include "kms/dl_operators.hpp"
#include "kms/recursion_tables.hpp"
#include "kms/root_datum.hpp"
#include "kms/satake.hpp"
#include "kms/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kms {

using Json = nlohmann::json;

RootDatum root_datum_from_json(const Json& config);
RootDatum load_root_datum(const std::string& path);

IntVec parse_weight(const std::string& text);

VarStyle sigma_style(const RootDatum& rd);
VarStyle q_style(const RootDatum& rd);
VarStyle t_style(const RootDatum& rd);

Json coeff_to_json(const ParamCoeff& c, const VarStyle& style);
ParamCoeff coeff_from_json(const Json& j, const VarStyle& style);

Json series_to_json(const TruncSeries& s, const VarStyle& style);
TruncSeries series_from_json(const Json& j, std::shared_ptr<const Lattice> lat, const VarStyle& style);

Json group_series_to_json(const GroupSeries& g, const VarStyle& style);
Json satake_to_json(const SatakeResult& r, const VarStyle& style);
Json datum_to_json(const RootDatum& rd);
Json table_to_json(const RecursionTable& t);

// Terms by depth below the ceiling, then by exponent: "c·e^{(x,y)} + ...".
std::string pretty(const TruncSeries& s, const VarStyle& style);

// Coefficients evaluated at a rational q (all q-variables equal). Works when
// q is a rational square or only integral powers of q occur.
struct NumericTerm {
  IntVec exponent;
  Rational value;
};
std::vector<NumericTerm> evaluate_at_q(const TruncSeries& s, const Rational& q, int num_vars);
Json numeric_to_json(const TruncSeries& shape, const std::vector<NumericTerm>& terms);
std::string pretty_numeric(const TruncSeries& shape, const std::vector<NumericTerm>& terms);

}  // namespace kms
