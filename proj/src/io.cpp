#include "kms/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace kms {

namespace {

IntMat int_matrix(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + " must be an array of rows");
  IntMat m;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(what + " must be an array of rows");
    IntVec r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(what + " entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

Rational json_rational(const Json& x) {
  if (x.is_number_integer()) return Rational(x.get<std::int64_t>());
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_float()) {
    const double d = x.get<double>();
    if (d * 2 != std::round(d * 2)) throw Error("rho entries must be integers, halves, or rational strings");
    return Rational(static_cast<std::int64_t>(std::round(d * 2)), 2);
  }
  throw Error("rho entries must be numbers or rational strings");
}

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error("coefficient must be an integer or a decimal string");
}

std::string vec_str(const IntVec& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  s << ")";
  return s.str();
}

}  // namespace

RootDatum root_datum_from_json(const Json& config) {
  if (!config.is_object()) throw Error("configuration must be a JSON object");
  for (const auto& [key, value] : config.items())
    if (key != "schema" && key != "cartan" && key != "lattice" && key != "rho" && key != "parameters")
      throw Error("unknown configuration key '" + key + "'");
  if (config.contains("schema") && config["schema"] != 1) throw Error("unsupported configuration schema");
  if (!config.contains("cartan")) throw Error("configuration needs a 'cartan' matrix");
  const IntMat cartan = int_matrix(config["cartan"], "cartan");
  LatticeSpec lat;
  if (config.contains("lattice")) {
    const Json& l = config["lattice"];
    if (l.is_string()) {
      if (l != "coweight") throw Error("lattice must be \"coweight\" or an explicit object");
    } else if (l.is_object()) {
      if (!l.contains("roots_on_basis") || !l.contains("coroots_in_basis"))
        throw Error("explicit lattice needs roots_on_basis and coroots_in_basis");
      lat.coweight = false;
      lat.roots_on_basis = int_matrix(l["roots_on_basis"], "roots_on_basis");
      lat.coroots_in_basis = int_matrix(l["coroots_in_basis"], "coroots_in_basis");
    } else {
      throw Error("lattice must be \"coweight\" or an explicit object");
    }
  }
  std::optional<std::vector<Rational>> rho;
  if (config.contains("rho")) {
    if (!config["rho"].is_array()) throw Error("rho must be an array");
    rho.emplace();
    for (const auto& x : config["rho"]) rho->push_back(json_rational(x));
  }
  ParamMode mode = ParamMode::Equal;
  if (config.contains("parameters")) {
    const Json& p = config["parameters"];
    if (p == "auto") mode = ParamMode::Auto;
    else if (p != "equal") throw Error("parameters must be \"equal\" or \"auto\"");
  }
  return build_root_datum(cartan, lat, rho, mode);
}

RootDatum load_root_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open configuration '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error("configuration is not valid JSON: " + std::string(e.what()));
  }
  return root_datum_from_json(j);
}

IntVec parse_weight(const std::string& text) {
  IntVec v;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error("weight coordinates must be integers: '" + text + "'");
    }
  }
  if (v.empty()) throw Error("empty weight");
  return v;
}

VarStyle sigma_style(const RootDatum& rd) { return {rd.classes.sigma_names, false}; }
VarStyle q_style(const RootDatum& rd) { return {rd.classes.q_names, true}; }
VarStyle t_style(const RootDatum& rd) { return {rd.classes.t_names, false}; }

Json coeff_to_json(const ParamCoeff& c, const VarStyle& style) {
  Json out = Json::array();
  for (const auto& [m, k] : c.terms()) {
    Json mono = Json::object();
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      const std::string& name = style.names.at(v);
      if (style.half && m[v] % 2 != 0) mono[name] = m[v] / 2.0;
      else mono[name] = style.half ? m[v] / 2 : m[v];
    }
    out.push_back({{"mono", mono}, {"int", big_to_json(k)}});
  }
  return out;
}

ParamCoeff coeff_from_json(const Json& j, const VarStyle& style) {
  ParamCoeff c;
  for (const auto& t : j) {
    Mono m(style.names.size(), 0);
    for (const auto& [name, e] : t.at("mono").items()) {
      auto it = std::find(style.names.begin(), style.names.end(), name);
      if (it == style.names.end()) throw Error("unknown variable '" + name + "'");
      const double x = e.get<double>() * (style.half ? 2 : 1);
      if (x != std::round(x)) throw Error("fractional exponent in '" + name + "'");
      m[it - style.names.begin()] = static_cast<int>(std::round(x));
    }
    mono_trim(m);
    c.add_term(m, big_from_json(t.at("int")));
  }
  return c;
}

Json series_to_json(const TruncSeries& s, const VarStyle& style) {
  std::vector<std::pair<IntVec, const ParamCoeff*>> terms;
  for (const auto& [nu, c] : s.terms()) terms.emplace_back(s.exponent(nu), &c);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out;
  out["ceiling"] = s.ceiling();
  out["depth"] = s.depth() ? Json(*s.depth()) : Json("exact");
  out["terms"] = Json::array();
  for (const auto& [mu, c] : terms) out["terms"].push_back({{"exp", mu}, {"coeff", coeff_to_json(*c, style)}});
  return out;
}

TruncSeries series_from_json(const Json& j, std::shared_ptr<const Lattice> lat, const VarStyle& style) {
  const IntVec ceiling = j.at("ceiling").get<IntVec>();
  TruncSeries::Depth depth;
  if (j.at("depth").is_number_integer()) depth = j["depth"].get<int>();
  else if (j["depth"] != "exact") throw Error("depth must be an integer or \"exact\"");
  TruncSeries s(lat, ceiling, depth);
  for (const auto& t : j.at("terms")) {
    auto nu = s.offset_of(t.at("exp").get<IntVec>());
    if (!nu) throw Error("term lies above the ceiling");
    s.add_term(*nu, coeff_from_json(t.at("coeff"), style));
  }
  return s;
}

Json group_series_to_json(const GroupSeries& g, const VarStyle& style) {
  Json out;
  out["length_bound"] = g.length_bound;
  out["depth"] = g.depth;
  out["terms"] = Json::array();
  for (const auto& [word, f] : g.terms) {
    std::vector<int> w;
    for (int i : word) w.push_back(i + 1);
    out["terms"].push_back({{"word", w}, {"series", series_to_json(f, style)}});
  }
  return out;
}

Json satake_to_json(const SatakeResult& r, const VarStyle& style) {
  static const char* names[] = {"recursion", "closed", "both"};
  Json out;
  out["route"] = names[static_cast<int>(r.route)];
  if (r.delta_half) out["delta_half_exponent"] = coeff_to_json(*r.delta_half, style).at(0).at("mono");
  else out["delta_half_exponent"] = nullptr;
  out["routes_agree"] = r.routes_agree;
  out["series"] = series_to_json(r.series, style);
  return out;
}

Json datum_to_json(const RootDatum& rd) {
  Json out;
  out["rank"] = rd.rank();
  out["lattice_rank"] = rd.dim();
  out["cartan"] = rd.cartan;
  out["roots_on_basis"] = rd.lattice->R;
  out["coroots_in_basis"] = rd.lattice->C;
  Json rho = Json::array();
  for (const auto& x : rd.rho) rho.push_back(to_string(x));
  out["rho"] = rho;
  Json classes = Json::array();
  for (int i = 0; i < rd.rank(); ++i)
    classes.push_back({{"sigma", rd.classes.sigma_names[rd.classes.sigma[i]]},
                       {"sigma_prime", rd.classes.sigma_names[rd.classes.sigma_prime[i]]}});
  out["parameter_classes"] = classes;
  out["equal_parameters"] = rd.equal_parameters();
  return out;
}

Json table_to_json(const RecursionTable& t) {
  const VarStyle style{{"q", "q'"}, true};
  Json out;
  out["n"] = t.n;
  out["same_side"] = t.same_side;
  out["equal_q"] = t.equal_q;
  out["vanishes"] = t.vanishes();
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json g = Json::object();
    for (const auto& [k, c] : r.gamma_numerator) g[std::to_string(k)] = to_string(c, style);
    rows.push_back({{"k", r.k}, {"count", to_string(r.count, style)}, {"delta_half", to_string(r.delta, style)},
                    {"gamma_times_1_minus_z2", g}});
  }
  out["rows"] = rows;
  return out;
}

namespace {

template <class Term, class Fmt>
std::string pretty_terms(const TruncSeries& shape, std::vector<Term> terms, Fmt fmt) {
  auto depth_of = [&](const IntVec& mu) { return height(*shape.offset_of(mu)); };
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    const auto da = depth_of(a.exponent), db = depth_of(b.exponent);
    if (da != db) return da < db;
    return a.exponent > b.exponent;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    auto [negative, text] = fmt(t);
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    out << text << "·e^{" << vec_str(t.exponent) << "}";
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

std::string pretty(const TruncSeries& s, const VarStyle& style) {
  struct Term {
    IntVec exponent;
    ParamCoeff coeff;
  };
  std::vector<Term> terms;
  for (const auto& [nu, c] : s.terms()) terms.push_back({s.exponent(nu), c});
  return pretty_terms(s, terms, [&](const Term& t) {
    const ParamCoeff& c = t.coeff;
    const bool negative = c.terms().size() == 1 && c.terms().begin()->second < 0;
    const std::string body = to_string(negative ? -c : c, style);
    return std::make_pair(negative, c.terms().size() > 1 ? "(" + body + ")" : body);
  });
}

std::vector<NumericTerm> evaluate_at_q(const TruncSeries& s, const Rational& q, int num_vars) {
  if (q <= 0) throw Error("q must be positive");
  // Exact square root of a rational when it exists.
  auto isqrt = [](const BigInt& v, BigInt& r) {
    r = sqrt(v);
    return r * r == v;
  };
  BigInt rn, rd;
  const bool square = isqrt(numerator(q), rn) && isqrt(denominator(q), rd);
  std::vector<NumericTerm> out;
  for (const auto& [nu, c] : s.terms()) {
    Rational v;
    if (square) {
      v = evaluate(c, std::vector<Rational>(num_vars, Rational(rn, rd)));
    } else {
      std::vector<VarSub> subs;
      for (int k = 0; k < num_vars; ++k) subs.push_back({k, 1, 2});
      ParamCoeff in_q;
      try {
        in_q = substitute(c, subs);
      } catch (const Error&) {
        throw Error("q^(1/2) is irrational for this q and odd powers occur; use --q symbolic");
      }
      v = evaluate(in_q, std::vector<Rational>(num_vars, q));
    }
    if (v != 0) out.push_back({s.exponent(nu), v});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  return out;
}

Json numeric_to_json(const TruncSeries& shape, const std::vector<NumericTerm>& terms) {
  Json out;
  out["ceiling"] = shape.ceiling();
  out["depth"] = shape.depth() ? Json(*shape.depth()) : Json("exact");
  out["terms"] = Json::array();
  for (const auto& t : terms) out["terms"].push_back({{"exp", t.exponent}, {"value", to_string(t.value)}});
  return out;
}

std::string pretty_numeric(const TruncSeries& shape, const std::vector<NumericTerm>& terms) {
  return pretty_terms(shape, terms, [](const NumericTerm& t) {
    return std::make_pair(t.value < 0, to_string(t.value < 0 ? Rational(-t.value) : t.value));
  });
}

}  // namespace kms
