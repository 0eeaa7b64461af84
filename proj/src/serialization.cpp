#include "hardy/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hardy {

namespace {

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw std::invalid_argument(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

json to_json(const DiskPoint& z) { return json{{"re", z.re}, {"im", z.im}}; }

DiskPoint diskpoint_from_json(const json& j) {
  return DiskPoint(require_number(j, "re"), require_number(j, "im"));
}

json to_json(const Arc& a) {
  return json{{"center", a.center_angle}, {"half_width", a.half_width}};
}

Arc arc_from_json(const json& j) {
  return Arc(require_number(j, "center"), require_number(j, "half_width"));
}

json to_json(const ArcSet& s) {
  json arr = json::array();
  for (const Arc& a : s.arcs()) arr.push_back(to_json(a));
  return json{{"arcs", arr}};
}

ArcSet arcset_from_json(const json& j) {
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw std::invalid_argument("ArcSet: missing 'arcs' array");
  std::vector<Arc> arcs;
  for (const json& a : j["arcs"]) arcs.push_back(arc_from_json(a));
  return ArcSet::from_arcs(arcs);
}

json to_json(const BoundaryData& d) {
  if (d.is_piecewise()) {
    json arr = json::array();
    for (const BoundaryData::Piece& p : d.pieces())
      arr.push_back(json{{"center", p.arc.center_angle},
                         {"half_width", p.arc.half_width},
                         {"level", p.level}});
    return json{{"arcs", arr}, {"background", d.background()}};
  }
  return json{{"grid_size", d.grid_size()}, {"values", d.values()}};
}

BoundaryData boundarydata_from_json(const json& j) {
  if (j.contains("grid_size")) {
    if (!j.contains("values") || !j["values"].is_array())
      throw std::invalid_argument("BoundaryData: sampled form needs 'values'");
    return BoundaryData::sampled(CircleGrid(require_int(j, "grid_size")),
                                 j["values"].get<std::vector<double>>());
  }
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw std::invalid_argument("BoundaryData: need 'arcs' or 'grid_size'");
  std::vector<BoundaryData::Piece> pieces;
  for (const json& p : j["arcs"])
    pieces.push_back({Arc(require_number(p, "center"), require_number(p, "half_width")),
                      require_number(p, "level")});
  return BoundaryData::piecewise(std::move(pieces), require_number(j, "background"));
}

json to_json(const FunctionSpec& f) {
  json arr = json::array();
  for (const FunctionSpec::Term& t : f.terms) {
    json e;
    e["power"] = t.power;
    if (const auto* m = std::get_if<Monomial>(&t.factor)) {
      e["type"] = "monomial";
      e["degree"] = m->degree;
    } else if (const auto* b = std::get_if<BlaschkeProduct>(&t.factor)) {
      e["type"] = "blaschke";
      json zeros = json::array();
      for (const DiskPoint& z : b->zeros) zeros.push_back(to_json(z));
      e["zeros"] = zeros;
    } else if (const auto* o = std::get_if<OuterFromData>(&t.factor)) {
      e["type"] = "outer";
      e["log_modulus"] = to_json(o->log_modulus);
    } else if (const auto* s = std::get_if<SingularInnerAtPoint>(&t.factor)) {
      e["type"] = "singular_inner";
      e["zeta_angle"] = s->zeta_angle;
      e["mass"] = s->mass;
    } else if (const auto* c = std::get_if<ConstantFactor>(&t.factor)) {
      e["type"] = "constant";
      e["re"] = c->value.real();
      e["im"] = c->value.imag();
    }
    arr.push_back(e);
  }
  return json{{"factors", arr}};
}

FunctionSpec functionspec_from_json(const json& j) {
  if (!j.contains("factors") || !j["factors"].is_array())
    throw std::invalid_argument("FunctionSpec: missing 'factors' array");
  FunctionSpec f;
  for (const json& e : j["factors"]) {
    if (!e.contains("type") || !e["type"].is_string())
      throw std::invalid_argument("FunctionSpec: factor without 'type'");
    int power = e.contains("power") ? require_int(e, "power") : 1;
    std::string type = e["type"].get<std::string>();
    if (type == "monomial") {
      f.multiply(Monomial{require_int(e, "degree")}, power);
    } else if (type == "blaschke") {
      if (!e.contains("zeros") || !e["zeros"].is_array())
        throw std::invalid_argument("FunctionSpec: blaschke factor needs 'zeros'");
      std::vector<DiskPoint> zeros;
      for (const json& z : e["zeros"]) zeros.push_back(diskpoint_from_json(z));
      f.multiply(BlaschkeProduct{std::move(zeros)}, power);
    } else if (type == "outer") {
      if (!e.contains("log_modulus"))
        throw std::invalid_argument("FunctionSpec: outer factor needs 'log_modulus'");
      f.multiply(OuterFromData{boundarydata_from_json(e["log_modulus"])}, power);
    } else if (type == "singular_inner") {
      f.multiply(SingularInnerAtPoint{require_number(e, "zeta_angle"),
                                      require_number(e, "mass")},
                 power);
    } else if (type == "constant") {
      f.multiply(ConstantFactor{{require_number(e, "re"), require_number(e, "im")}}, power);
    } else {
      throw std::invalid_argument("FunctionSpec: unknown factor type '" + type + "'");
    }
  }
  return f;
}

json to_json(const PointSet& a) {
  json arr = json::array();
  for (const PointSet::Entry& e : a.entries()) {
    json p{{"re", e.z.re}, {"im", e.z.im}};
    if (e.generation >= 0) p["gen"] = e.generation;
    arr.push_back(p);
  }
  return json{{"points", arr}};
}

PointSet pointset_from_json(const json& j) {
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("PointSet: missing 'points' array");
  PointSet a;
  for (const json& p : j["points"]) {
    int gen = p.contains("gen") ? require_int(p, "gen") : -1;
    a.add(diskpoint_from_json(p), gen);
  }
  return a;
}

json to_json(const SamplingReport& r) {
  json j{{"p", r.p},
         {"alpha", r.alpha},
         {"grid_size", r.grid_size},
         {"f_norm", r.f_norm},
         {"maximal_norm", r.maximal_norm},
         {"ratio", r.ratio},
         {"ceiling", r.ceiling},
         {"ceiling_ok", r.ceiling_ok}};
  if (!r.theta_dump.empty()) {
    json arr = json::array();
    for (const auto& td : r.theta_dump) arr.push_back(json::array({td.first, td.second}));
    j["theta_dump"] = arr;
  }
  return j;
}

json to_json(const Prop3Params& p) {
  json gens = json::array();
  for (int n = p.n_min; n <= p.n_max; ++n)
    gens.push_back(json{{"n", n},
                        {"p_n", p.points(n)},
                        {"gamma_n", p.gamma(n)},
                        {"ell_n", p.ell(n)},
                        {"radius_n", p.radius(n)},
                        {"span_n", p.span(n)}});
  return json{{"n_min", p.n_min},
              {"n_max", p.n_max},
              {"schedule", p.schedule},
              {"generations", gens}};
}

Prop3Params prop3params_from_json(const json& j) {
  if (!j.contains("n_min") || !j.contains("schedule"))
    throw std::invalid_argument("Prop3Params: need n_min and schedule");
  return Prop3Params::from_schedule(j["n_min"].get<int>(),
                                    j["schedule"].get<std::vector<std::int64_t>>());
}

json to_json(const CertificateRecord& r) {
  return json{{"n", r.n},
              {"p_n", r.p_n},
              {"gamma_n", r.gamma_n},
              {"ell_n", r.ell_n},
              {"s_n", r.s_n},
              {"count_bound", r.count_bound},
              {"count_above", r.count_above},
              {"premise", r.premise},
              {"covered_measure", r.covered_measure},
              {"per_point_log_bound", r.per_point_log_bound},
              {"integral_upper_bound", r.integral_upper_bound},
              {"target_rate", r.target_rate}};
}

json to_json(const FloorEstimate& e) {
  return json{{"floor", e.floor},
              {"samples_outside", e.samples_outside},
              {"budget", e.budget}};
}

json to_json(const DivergenceReport& r) {
  json rows = json::array();
  for (const DivergenceRow& row : r.rows) {
    json e = to_json(row.cert);
    e["measured_log_integral"] = row.measured_log_integral;
    rows.push_back(e);
  }
  return json{{"rows", rows},
              {"certificate_sound", r.certificate_sound},
              {"s_summable", r.s_summable},
              {"soundness_tol", r.soundness_tol},
              {"summable_budget", r.summable_budget},
              {"rescale", r.rescale}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

json parse_json_file(const std::string& path) {
  json j = json::parse(read_text_file(path), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON in " + path);
  return j;
}

std::string format_sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

namespace {

double parse_angle_token(std::string tok) {
  auto pos = tok.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad angle token: " + tok);
    return v;
  }
  if (pos + 2 != tok.size()) throw std::invalid_argument("bad angle token: " + tok);
  std::string head = tok.substr(0, pos);
  double mult = head.empty() ? 1.0 : std::stod(head);
  return mult * kPi;
}

}  // namespace

ArcSet parse_arc_list(const std::string& text) {
  std::vector<Arc> arcs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("arc must be 'lo:hi': " + item);
    double lo = parse_angle_token(item.substr(0, colon));
    double hi = parse_angle_token(item.substr(colon + 1));
    if (!(hi > lo)) throw std::invalid_argument("arc needs hi > lo: " + item);
    if (hi - lo > kTwoPi + 1e-12) throw std::invalid_argument("arc longer than 2pi: " + item);
    arcs.emplace_back(0.5 * (lo + hi), std::min(0.5 * (hi - lo), kPi));
  }
  if (arcs.empty()) throw std::invalid_argument("empty arc list");
  return ArcSet::from_arcs(arcs);
}

}  // namespace hardy
