#include "cdc/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cdc/error.hpp"
#include "cdc/io.hpp"

namespace cdc {

namespace {

// Parameter combinations rejected before any computation (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;

  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned delta = 0;
  unsigned l = 0;
  unsigned k = 0;

  std::string in;
  std::string out;
  std::optional<unsigned> steiner_t;
  bool punctured = false;

  bool all_optima = false;
  bool symmetry = false;
  std::uint64_t budget = kDefaultSearchBudget;

  std::vector<std::uint64_t> q_list;
  unsigned digits = 2;
};

CodeParams checked_params(const Options& o) {
  if (o.q < 2) throw UsageError("--q must be at least 2");
  if (o.delta < 1) throw UsageError("--delta must be at least 1");
  if (o.delta > o.l) throw UsageError("--delta must not exceed --l");
  if (o.l > o.n) throw UsageError("--l must not exceed --n");
  return CodeParams{o.q, o.n, o.delta, o.l};
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void print_orientation(std::ostream& out, const OrientationBounds& o, const BoundReport& r, bool dual) {
  const auto row = [&](BoundKind kind, const std::string& value) {
    const bool best = r.best_kind == kind && r.dual_params_used == dual;
    out << pad(std::string(bound_name(kind)), 12) << pad(std::to_string(o.l), 4) << value
        << (best ? "  *best" : "") << '\n';
  };
  row(BoundKind::Singleton, o.singleton.str());
  row(BoundKind::Wxs, o.wxs.floor.str() + " (exact " + to_fraction_string(o.wxs.exact) + ")");
  row(BoundKind::JohnsonI, o.johnson_i ? o.johnson_i->str() : "n/a");
  row(BoundKind::JohnsonII, o.johnson_ii.str());
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto report = bound_report(checked_params(o));
  if (o.json) {
    out << bound_report_to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  out << "bounds on A_" << o.q << "[" << o.n << ", " << 2 * o.delta << ", " << o.l << "]\n";
  out << pad("bound", 12) << pad("l", 4) << "value\n";
  print_orientation(out, report.primary, report, false);
  if (report.dual) print_orientation(out, *report.dual, report, true);
  out << "best: " << report.best.str() << " (" << bound_name(report.best_kind) << ", l=" << report.best_l
      << (report.dual_params_used ? ", dual orientation" : "") << ")\n";
  return kExitOk;
}

int cmd_spread(const Options& o, std::ostream& out) {
  if (o.l < 1) throw UsageError("--l must be at least 1");
  if (o.k < 2) throw UsageError("--k must be at least 2");
  const auto [p, e] = prime_power_parts(o.q);
  const auto spread = construct_spread(make_field(p, e), o.l, o.k);
  const auto steiner = is_steiner_structure(spread.code, 1);
  const Json code_json = spread_to_json(spread);
  if (!o.out.empty()) write_text_file(o.out, code_json.dump(2) + "\n");

  if (o.json) {
    Json j;
    j["code"] = code_json;
    Json v;
    v["blocks"] = std::to_string(spread.code.size());
    v["parameters"] = parameter_string(spread.code);
    v["min_distance"] = std::to_string(min_distance(spread.code));
    v["steiner_t1"] = steiner.is_steiner;
    j["verification"] = std::move(v);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "spread S[1," << o.l << "," << o.k * o.l << "]_" << o.q << ": " << spread.code.size() << " blocks\n";
  out << "parameters: " << parameter_string(spread.code) << '\n';
  out << "min_distance: " << min_distance(spread.code) << '\n';
  out << "steiner: " << (steiner.is_steiner ? "verified t=1" : "FAILED t=1") << '\n';
  if (o.out.empty()) {
    out << code_json.dump(2) << '\n';
  } else {
    out << "wrote " << o.out << '\n';
  }
  return kExitOk;
}

ConstantDimensionCode load_code(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return code_from_json(j);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto code = load_code(o.in);
  std::optional<SteinerCheck> steiner;
  if (o.steiner_t) {
    if (*o.steiner_t < 1 || *o.steiner_t > code.dim()) throw UsageError("--steiner must satisfy 1 <= T <= l");
    steiner = is_steiner_structure(code, *o.steiner_t);
  }
  if (o.json) {
    Json j;
    j["parameters"] = parameter_string(code);
    j["n"] = std::to_string(code.ambient());
    j["M"] = std::to_string(code.size());
    j["min_distance"] = code.cached_min_distance() ? Json(std::to_string(*code.cached_min_distance())) : Json(nullptr);
    j["l"] = std::to_string(code.dim());
    j["q"] = std::to_string(code.field().order());
    if (steiner) {
      Json s;
      s["t"] = std::to_string(*o.steiner_t);
      s["is_steiner"] = steiner->is_steiner;
      s["witness"] = steiner->witness ? Json(steiner->witness->rows()) : Json(nullptr);
      s["witness_count"] = std::to_string(steiner->witness_count);
      j["steiner"] = std::move(s);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "parameters: " << parameter_string(code) << '\n';
  out << "min_distance: "
      << (code.cached_min_distance() ? std::to_string(*code.cached_min_distance()) : std::string("undefined")) << '\n';
  if (steiner) {
    out << "steiner: " << (steiner->is_steiner ? "true" : "false") << " (t=" << *o.steiner_t << ")\n";
    if (steiner->witness) {
      out << "witness: " << Json(steiner->witness->rows()).dump() << " covered " << steiner->witness_count
          << " times\n";
    }
  }
  return kExitOk;
}

int cmd_derive_cwc(const Options& o, std::ostream& out) {
  const auto code = load_code(o.in);
  const auto cwc = o.punctured ? punctured_cwc(code) : derived_cwc(code);
  const std::string text = to_cwc_text(cwc);
  write_text_file(o.out, text);
  const std::string header = text.substr(0, text.find('\n'));
  if (o.json) {
    Json j;
    j["N"] = std::to_string(cwc.length());
    j["M"] = std::to_string(cwc.size());
    j["w"] = std::to_string(cwc.weight());
    j["d"] = std::to_string(cwc.min_distance().value_or(0));
    j["out"] = o.out;
    out << j.dump(2) << '\n';
  } else {
    out << header << '\n' << "wrote " << o.out << '\n';
  }
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchOptions options;
  options.budget = o.budget;
  options.symmetry_reduction = o.symmetry;
  const auto result = brute_force_optimum(checked_params(o), o.all_optima, options);
  out << search_result_to_json(result).dump(2) << '\n';
  return kExitOk;
}

int cmd_ratio(const Options& o, std::ostream& out) {
  if (o.q_list.empty()) throw UsageError("--q-list must name at least one q");
  for (const auto q : o.q_list) {
    Options per = o;
    per.q = q;
    checked_params(per);
  }
  const auto values = bound_ratio_table(o.n, o.l, o.delta, o.q_list, o.digits);
  if (o.json) {
    Json j;
    j["n"] = std::to_string(o.n);
    j["l"] = std::to_string(o.l);
    j["delta"] = std::to_string(o.delta);
    j["digits"] = std::to_string(o.digits);
    Json rows = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      Json r;
      r["q"] = std::to_string(o.q_list[i]);
      r["ratio"] = values[i];
      rows.push_back(std::move(r));
    }
    j["ratios"] = std::move(rows);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "B_S/B_WXS for n=" << o.n << " l=" << o.l << " delta=" << o.delta << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) out << "q=" << o.q_list[i] << ' ' << values[i] << '\n';
  return kExitOk;
}

void report_error(std::ostream& err, bool json, const std::string& kind, const std::string& message) {
  if (json) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    err << j.dump() << '\n';
  } else {
    err << "error: " << kind << ": " << message << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant dimension code bounds, spreads, and exact search", "cdc"};
  app.require_subcommand(1);
  Options o;

  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "field order (prime power)")->required();
    sub->add_option("--n", o.n, "ambient dimension")->required();
    sub->add_option("--delta", o.delta, "half of the minimum distance")->required();
    sub->add_option("--l", o.l, "codeword dimension")->required();
  };

  auto* bounds = app.add_subcommand("bounds", "upper bounds on A_q[n, 2delta, l]");
  add_params(bounds);

  auto* spread = app.add_subcommand("spread", "construct and verify the spread S[1, l, kl]_q");
  spread->add_option("--q", o.q, "field order (prime power)")->required();
  spread->add_option("--l", o.l, "block dimension")->required();
  spread->add_option("--k", o.k, "n = k * l")->required();
  spread->add_option("--out", o.out, "write the code JSON here");

  auto* verify = app.add_subcommand("verify", "report the parameters of a code file");
  verify->add_option("--in", o.in, "code JSON")->required();
  verify->add_option("--steiner", o.steiner_t, "check for a Steiner structure S[T, l, n]_q");

  auto* derive = app.add_subcommand("derive-cwc", "binary constant weight code of a code file");
  derive->add_option("--in", o.in, "code JSON")->required();
  derive->add_option("--out", o.out, "output text file")->required();
  derive->add_flag("--punctured", o.punctured, "index by projective points instead of nonzero vectors");

  auto* search = app.add_subcommand("search", "exact A_q[n, 2delta, l] by clique search");
  add_params(search);
  search->add_flag("--all-optima", o.all_optima, "enumerate every optimum and test each for Steiner structure");
  search->add_option("--budget", o.budget, "maximum number of graph vertices");
  search->add_flag("--symmetry", o.symmetry, "fix the first codeword when searching for the optimum");

  auto* ratio = app.add_subcommand("ratio", "Singleton / WXS ratio table");
  ratio->add_option("--n", o.n, "ambient dimension")->required();
  ratio->add_option("--l", o.l, "codeword dimension")->required();
  ratio->add_option("--delta", o.delta, "half of the minimum distance")->required();
  ratio->add_option("--q-list", o.q_list, "comma-separated field orders")->required()->delimiter(',');
  ratio->add_option("--digits", o.digits, "decimal places");

  for (auto* sub : {bounds, spread, verify, derive, search, ratio}) {
    sub->add_flag("--json", o.json, "machine-readable output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    report_error(err, o.json, "UsageError", e.what());
    return kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(o, out);
    if (*spread) return cmd_spread(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*derive) return cmd_derive_cwc(o, out);
    if (*search) return cmd_search(o, out);
    if (*ratio) return cmd_ratio(o, out);
  } catch (const UsageError& e) {
    report_error(err, o.json, "UsageError", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    report_error(err, o.json, std::string(e.kind_name()), e.what());
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace cdc
