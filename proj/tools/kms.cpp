#include "kms/io.hpp"
#include "kms/recursion_tables.hpp"
#include "kms/satake.hpp"
#include "kms/symmetrizers.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace kms;

struct Options {
  std::string config;
  std::string lambda;
  int depth = 4;
  std::string q = "symbolic";
  std::string t = "symbolic";
  std::string route = "recursion";
  std::string format = "pretty";
  int nmax = 4;
  int max_length = 2;
  bool adaptive = false;
  std::size_t cap = WeylBall::kDefaultCap;
};

// Exit codes: 0 success, 1 a check or route comparison failed, 2 bad input.
struct Outcome {
  std::string text;
  int code = 0;
};

std::string render(const Json& j, const std::string& pretty_text, const Options& o) {
  return o.format == "json" ? j.dump(2) : pretty_text;
}

std::string report_text(const CherednikReport& r, const std::string& what) {
  std::ostringstream s;
  s << what << ": " << (r.ok ? "ok" : "FAILED") << " (" << r.checked << " checks, depth " << r.depth << ")";
  for (const auto& f : r.failures) s << "\n  " << f;
  return s.str();
}

Json report_json(const CherednikReport& r) {
  return {{"ok", r.ok}, {"checked", r.checked}, {"depth", r.depth}, {"failures", r.failures}};
}

Outcome run(const std::string& cmd, const Options& o) {
  if (cmd == "tables-check") {
    Json all = Json::array();
    std::ostringstream text;
    bool ok = true;
    for (const auto& t : recursion_tables(o.nmax)) {
      all.push_back(table_to_json(t));
      ok &= t.vanishes();
      text << "n=" << t.n << (t.n == 0 ? "" : t.same_side ? " same side" : " opposite sides")
           << (t.equal_q ? " (q=q')" : "") << ": " << (t.vanishes() ? "sums to 0" : "NONZERO") << "\n";
    }
    text << (ok ? "all tables verified" : "table verification FAILED");
    return {render(Json{{"ok", ok}, {"tables", all}}, text.str(), o), ok ? 0 : 1};
  }

  const RootDatum rd = load_root_datum(o.config);
  if (cmd == "inspect") {
    Json j = datum_to_json(rd);
    Json coroots = Json::array();
    for (const auto& b : positive_real_coroots(rd, o.depth))
      coroots.push_back({{"coords", b.coords}, {"height", b.height}, {"simple", b.simple + 1}});
    j["positive_real_coroots"] = coroots;
    WeylBall ball(rd, o.cap);
    ball.extend_to(o.depth);
    Json sizes = Json::array();
    for (int l = 0; l <= o.depth; ++l) sizes.push_back(ball.layer_end(l) - ball.layer_end(l - 1));
    j["elements_by_length"] = sizes;
    j["weyl_group_finite"] = ball.exhausted();
    return {j.dump(2), 0};
  }

  const auto need_lambda = [&] {
    if (o.lambda.empty()) throw Error("--lambda is required");
    return parse_weight(o.lambda);
  };

  if (cmd == "satake") {
    const IntVec lambda = need_lambda();
    SatakeContext ctx(rd, o.cap);
    ctx.sym().set_adaptive(o.adaptive);
    const SatakeRoute route = o.route == "closed" ? SatakeRoute::Closed
                              : o.route == "both" ? SatakeRoute::Both
                                                  : SatakeRoute::Recursion;
    const SatakeResult r = ctx.satake(lambda, o.depth, route);
    std::string body;
    if (o.q == "symbolic") {
      std::string text = pretty(r.series, q_style(rd));
      if (!r.delta_half) text = "delta^(1/2)(lambda) * [" + text + "]";
      body = render(satake_to_json(r, q_style(rd)), text, o);
    } else {
      if (!r.delta_half) throw Error("delta^(1/2)(lambda) is undetermined here; use --q symbolic");
      const auto terms = evaluate_at_q(r.series, parse_rational(o.q), rd.classes.count);
      Json j = satake_to_json(r, q_style(rd));
      j["series"] = numeric_to_json(r.series, terms);
      body = render(j, pretty_numeric(r.series, terms), o);
    }
    if (!r.routes_agree) return {body + "\nroute disagreement: recursion and closed forms differ", 1};
    return {body, 0};
  }

  if (cmd == "hall-littlewood") {
    const IntVec lambda = need_lambda();
    SatakeContext ctx(rd, o.cap);
    ctx.sym().set_adaptive(o.adaptive);
    TruncSeries hl = ctx.hall_littlewood(lambda, o.depth);
    if (o.t != "symbolic") hl = evaluate_integral(hl, std::vector<Rational>(rd.classes.count, parse_rational(o.t)));
    return {render(series_to_json(hl, t_style(rd)), pretty(hl, t_style(rd)), o), 0};
  }

  if (cmd == "character") {
    const IntVec lambda = need_lambda();
    SatakeContext ctx(rd, o.cap);
    const TruncSeries ch = ctx.character_t0(lambda, o.depth);
    Json j = series_to_json(ch, t_style(rd));
    std::string text = pretty(ch, t_style(rd));
    int code = 0;
    WeylBall ball(rd, o.cap);
    ball.extend_to(64);
    if (ball.exhausted()) {
      const TruncSeries oracle = weyl_character(rd, lambda);
      const int d = std::min(o.depth, *oracle.depth());
      const bool agree = agree_through(ch.truncated(d), oracle.truncated(d), d);
      j["matches_weyl_character"] = agree;
      text += agree ? "\nmatches the Weyl character formula" : "\nDIFFERS from the Weyl character formula";
      code = agree ? 0 : 1;
    }
    return {render(j, text, o), code};
  }

  if (cmd == "mzero") {
    SymContext sym(rd, o.cap);
    sym.set_adaptive(o.adaptive);
    const TruncSeries m = sym.m_sigma(o.depth);
    const bool is_one = agree_through(m, TruncSeries::one(rd.lattice).truncated(o.depth), o.depth);
    return {render(series_to_json(m, sigma_style(rd)), is_one ? "1" : pretty(m, sigma_style(rd)), o), 0};
  }

  if (cmd == "cherednik-check") {
    SymContext sym(rd, o.cap);
    const CherednikReport a = sym.cherednik_check(o.depth, o.max_length);
    const CherednikReport b = sym.eigen_check(o.depth, o.max_length);
    Json j{{"cherednik", report_json(a)}, {"eigenvector", report_json(b)}};
    std::string text = report_text(a, "C_v Delta = Gamma v(Delta)") + "\n" + report_text(b, "H_i P = sigma_i P");
    return {render(j, text, o), a.ok && b.ok ? 0 : 1};
  }

  throw Error("unknown command '" + cmd + "'");
}

// FNV-1a over the configuration text and the arguments.
std::string cache_key(const std::string& config_path, int argc, char** argv) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    h = (h ^ 0xff) * 1099511628211ull;
  };
  std::ifstream in(config_path);
  std::stringstream content;
  content << in.rdbuf();
  mix(content.str());
  for (int k = 1; k < argc; ++k) mix(argv[k]);
  std::ostringstream s;
  s << std::hex << h;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical functions and the Satake transform for Kac-Moody root data"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool lambda) {
    sub->add_option("--config", o.config, "root datum JSON")->required()->check(CLI::ExistingFile);
    if (lambda) sub->add_option("--lambda", o.lambda, "dominant weight, comma separated")->required();
    sub->add_option("--depth", o.depth, "truncation depth")->check(CLI::Range(0, 64));
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "pretty"}));
    sub->add_option("--element-cap", o.cap, "bound on enumerated Weyl group elements");
  };

  auto* inspect = app.add_subcommand("inspect", "summarise a root datum");
  add_common(inspect, false);
  auto* satake = app.add_subcommand("satake", "Satake image of a spherical basis element");
  add_common(satake, true);
  satake->add_option("--q", o.q, "symbolic or a positive rational");
  satake->add_option("--route", o.route)->check(CLI::IsMember({"recursion", "closed", "both"}));
  satake->add_flag("--adaptive-cutoff", o.adaptive);
  auto* hl = app.add_subcommand("hall-littlewood", "Hall-Littlewood function H_lambda with sigma^2 = t");
  add_common(hl, true);
  hl->add_option("--t", o.t, "symbolic or a rational");
  hl->add_flag("--adaptive-cutoff", o.adaptive);
  auto* ch = app.add_subcommand("character", "H_lambda at t = 0");
  add_common(ch, true);
  auto* mz = app.add_subcommand("mzero", "the W-invariant factor Gamma / Delta");
  add_common(mz, false);
  mz->add_flag("--adaptive-cutoff", o.adaptive);
  auto* chk = app.add_subcommand("cherednik-check", "verify the symmetrizer identities");
  add_common(chk, false);
  chk->add_option("--max-length", o.max_length, "longest v checked");
  auto* tab = app.add_subcommand("tables-check", "verify the rank-one recursion tables");
  tab->add_option("--nmax", o.nmax)->check(CLI::Range(0, 200));
  tab->add_option("--format", o.format)->check(CLI::IsMember({"json", "pretty"}));

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  namespace fs = std::filesystem;
  const char* cache_dir = std::getenv("KMS_CACHE_DIR");
  fs::path cached;
  if (cache_dir && *cache_dir) {
    cached = fs::path(cache_dir) / (cache_key(o.config, argc, argv) + ".out");
    std::ifstream in(cached);
    if (in) {
      std::cout << in.rdbuf() << "\n";
      return 0;
    }
  }

  try {
    const Outcome out = run(cmd, o);
    std::cout << out.text << "\n";
    if (!cached.empty() && out.code == 0) {
      fs::create_directories(cached.parent_path());
      std::ofstream(cached) << out.text;
    }
    return out.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
