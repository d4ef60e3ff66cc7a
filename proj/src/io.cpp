#include "cdc/io.hpp"

#include <fstream>
#include <sstream>

#include "cdc/error.hpp"

namespace cdc {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::ParseError, std::string("key \"") + key + "\" has the wrong type");
  }
}

Json orientation_to_json(const OrientationBounds& o) {
  Json j;
  j["l"] = o.l;
  j["singleton"] = o.singleton.str();
  j["wxs"] = o.wxs.floor.str();
  j["wxs_exact"] = to_fraction_string(o.wxs.exact);
  j["johnson_i"] = o.johnson_i ? Json(o.johnson_i->str()) : Json(nullptr);
  j["johnson_ii"] = o.johnson_ii.str();
  return j;
}

}  // namespace

Json field_to_json(const FieldSpec& field) {
  Json j;
  j["p"] = field.characteristic();
  j["e"] = field.degree();
  j["modulus"] = field.modulus();
  return j;
}

FieldSpec field_from_json(const Json& j) {
  const auto p = get_field<std::uint64_t>(j, "p");
  const auto e = get_field<unsigned>(j, "e");
  const auto modulus = get_field<Polynomial>(j, "modulus");
  return make_field(p, e, modulus);
}

Json code_to_json(const ConstantDimensionCode& code) {
  Json j = field_to_json(code.field());
  j["n"] = code.ambient();
  j["l"] = code.dim();
  Json blocks = Json::array();
  for (const auto& x : code.codewords()) blocks.push_back(x.rows());
  j["blocks"] = std::move(blocks);
  return j;
}

ConstantDimensionCode code_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j);
  const auto n = get_field<unsigned>(j, "n");
  const auto l = get_field<unsigned>(j, "l");
  const auto blocks = get_field<std::vector<std::vector<Vector>>>(j, "blocks");
  std::vector<Subspace> words;
  words.reserve(blocks.size());
  for (const auto& rows : blocks) words.push_back(subspace_from_rows(field, n, rows));
  return new_code(field, n, l, std::move(words));
}

Json spread_to_json(const SpreadConstruction& spread) {
  Json j = code_to_json(spread.code);
  Json c;
  c["type"] = "cyclotomic_spread";
  c["q"] = spread.q;
  c["l"] = spread.l;
  c["k"] = spread.k;
  c["modulus"] = spread.big_modulus;
  c["alpha"] = spread.alpha;
  j["construction"] = std::move(c);
  return j;
}

Json bound_report_to_json(const BoundReport& report) {
  Json j;
  j["q"] = std::to_string(report.params.q);
  j["n"] = std::to_string(report.params.n);
  j["delta"] = std::to_string(report.params.delta);
  j["l"] = std::to_string(report.params.l);
  j["primary"] = orientation_to_json(report.primary);
  j["dual"] = report.dual ? orientation_to_json(*report.dual) : Json(nullptr);
  j["best"] = report.best.str();
  j["best_bound"] = std::string(bound_name(report.best_kind));
  j["best_l"] = std::to_string(report.best_l);
  j["dual_params_used"] = report.dual_params_used;
  return j;
}

Json search_result_to_json(const SearchResult& result) {
  Json j;
  j["q"] = std::to_string(result.params.q);
  j["n"] = std::to_string(result.params.n);
  j["delta"] = std::to_string(result.params.delta);
  j["l"] = std::to_string(result.params.l);
  j["optimum"] = std::to_string(result.optimum);
  j["vertices"] = std::to_string(result.vertices);
  j["upper_bound"] = std::to_string(result.upper_bound);
  j["lower_bound"] = std::to_string(result.lower_bound);
  j["all_optima_steiner"] = result.all_optima_steiner ? Json(*result.all_optima_steiner) : Json(nullptr);
  j["optima_count"] = result.optima_count ? Json(std::to_string(*result.optima_count)) : Json(nullptr);
  j["nodes_explored"] = std::to_string(result.nodes_explored);
  j["elapsed_ms"] = std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(result.elapsed).count());
  j["witness"] = code_to_json(result.witness);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorKind::ParseError, "failed writing " + path);
}

}  // namespace cdc
