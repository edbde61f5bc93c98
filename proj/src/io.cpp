#include "minterp/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace minterp {

using nlohmann::json;

namespace {

void check_known_fields(const json& obj, const std::set<std::string>& known,
                        const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key())) {
      raise(Errc::schema_error, "unknown field '" + it.key() + "' in " + where);
    }
  }
}

json parse_json_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::parse_error, "malformed JSON in " + what);
  return j;
}

double require_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number()) {
    raise(Errc::schema_error, "field '" + field + "' must be a number");
  }
  return j[field].get<double>();
}

Eigen::VectorXcd coeffs_from_lists(const json& re, const json* im,
                                   const std::string& where) {
  if (!re.is_array() || re.empty()) {
    raise(Errc::schema_error, "coefficient list in " + where + " must be nonempty");
  }
  Eigen::VectorXcd c(re.size());
  for (size_t k = 0; k < re.size(); ++k) {
    if (!re[k].is_number()) raise(Errc::schema_error, "non-numeric coefficient in " + where);
    c[k] = Cplx(re[k].get<double>(), 0.0);
  }
  if (im) {
    if (!im->is_array() || im->size() != re.size()) {
      raise(Errc::schema_error,
            "cheb_coeffs_im in " + where + " must match cheb_coeffs_re in length");
    }
    for (size_t k = 0; k < im->size(); ++k) {
      if (!(*im)[k].is_number()) raise(Errc::schema_error, "non-numeric coefficient in " + where);
      c[k] += Cplx(0.0, (*im)[k].get<double>());
    }
  }
  return c;
}

// Builtins are whole-curve shapes; a component entry picks its coordinate by
// position in the file.
Cplx builtin_component(const std::string& name, int m, double pitch, double x) {
  if (name == "line") {
    return m == 0 ? Cplx(x) : Cplx(0.0);
  }
  if (name == "circle") {
    if (m == 0) return Cplx(std::cos(x));
    if (m == 1) return Cplx(std::sin(x));
    return Cplx(0.0);
  }
  if (name == "helix_like") {
    if (m == 0) return Cplx(std::cos(x));
    if (m == 1) return Cplx(std::sin(x));
    return Cplx(pitch * x);
  }
  raise(Errc::schema_error, "unknown builtin '" + name + "'");
}

}  // namespace

SolverConfig RunConfig::solver() const {
  SolverConfig s;
  s.max_iter = max_iter;
  s.tol = newton_tol;
  return s;
}

PipelineConfig RunConfig::pipeline() const {
  PipelineConfig p;
  p.solver = solver();
  p.perm = perm;
  p.anchor_u0 = anchor_u0;
  p.printed_v3_sign = printed_v3_sign;
  return p;
}

ProbeConfig RunConfig::probe() const {
  ProbeConfig p;
  p.direction = probe_direction;
  p.s_min = probe_s_min;
  p.bisect_tol = probe_bisect_tol;
  p.solver = solver();
  return p;
}

RunConfig parse_config(const std::string& path) {
  return parse_config_json(read_file(path));
}

RunConfig parse_config_json(const std::string& text) {
  const json j = parse_json_text(text, "config file");
  if (!j.is_object()) raise(Errc::schema_error, "config must be a JSON object");
  check_known_fields(
      j,
      {"fit_tol", "degree_cap", "newton_tol", "max_iter", "anchor_u0", "epsilon0",
       "safety", "grid_nu", "grid_nv", "v_span", "perm", "printed_v3_sign",
       "range_margin", "boundary_samples", "zero_tol", "arcsin_margin",
       "inf_grid_angular", "inf_grid_radial", "probe_s_min", "probe_bisect_tol",
       "probe_direction"},
      "config");

  RunConfig cfg;
  auto num = [&](const char* f, double& out) {
    if (j.contains(f)) out = require_number(j, f);
  };
  auto integer = [&](const char* f, int& out) {
    if (j.contains(f)) out = int(require_number(j, f));
  };
  num("fit_tol", cfg.fit_tol);
  integer("degree_cap", cfg.degree_cap);
  num("newton_tol", cfg.newton_tol);
  integer("max_iter", cfg.max_iter);
  num("safety", cfg.safety);
  integer("grid_nu", cfg.grid_nu);
  integer("grid_nv", cfg.grid_nv);
  num("v_span", cfg.v_span);
  num("range_margin", cfg.range_margin);
  integer("boundary_samples", cfg.boundary_samples);
  num("zero_tol", cfg.zero_tol);
  num("arcsin_margin", cfg.arcsin_margin);
  integer("inf_grid_angular", cfg.inf_grid_angular);
  integer("inf_grid_radial", cfg.inf_grid_radial);
  num("probe_s_min", cfg.probe_s_min);
  num("probe_bisect_tol", cfg.probe_bisect_tol);
  if (j.contains("anchor_u0")) cfg.anchor_u0 = require_number(j, "anchor_u0");
  if (j.contains("epsilon0")) cfg.epsilon0 = require_number(j, "epsilon0");
  if (j.contains("printed_v3_sign")) {
    if (!j["printed_v3_sign"].is_boolean()) {
      raise(Errc::schema_error, "printed_v3_sign must be a boolean");
    }
    cfg.printed_v3_sign = j["printed_v3_sign"].get<bool>();
  }
  if (j.contains("perm")) {
    const auto& p = j["perm"];
    if (!p.is_array() || p.size() != 3) {
      raise(Errc::schema_error, "perm must be an array of three indices");
    }
    IndexPermutation perm{p[0].get<int>(), p[1].get<int>(), p[2].get<int>()};
    if (!perm.valid()) raise(Errc::schema_error, "perm is not a permutation of {1,2,3}");
    cfg.perm = perm;
  }
  if (j.contains("probe_direction")) {
    const auto& p = j["probe_direction"];
    if (!p.is_array() || p.size() != 3) {
      raise(Errc::schema_error, "probe_direction must be an array of three numbers");
    }
    for (int m = 0; m < 3; ++m) cfg.probe_direction[m] = p[m].get<double>();
  }

  if (!(cfg.fit_tol > 0 && cfg.fit_tol < 1) || !(cfg.newton_tol > 0 && cfg.newton_tol < 1)) {
    raise(Errc::schema_error, "tolerances must lie in (0,1)");
  }
  if (cfg.max_iter < 1) raise(Errc::schema_error, "max_iter must be >= 1");
  return cfg;
}

namespace {

DomainPtr domain_from_config(double lo, double hi, double rho, const RunConfig& cfg) {
  DomainSpec spec;
  spec.lo = lo;
  spec.hi = hi;
  spec.rho = rho;
  spec.boundary_samples = cfg.boundary_samples;
  spec.fit_tol = cfg.fit_tol;
  spec.degree_cap = cfg.degree_cap;
  spec.range_margin = cfg.range_margin;
  spec.zero_tol = cfg.zero_tol;
  spec.arcsin_margin = cfg.arcsin_margin;
  spec.inf_grid_angular = cfg.inf_grid_angular;
  spec.inf_grid_radial = cfg.inf_grid_radial;
  return make_domain(spec);
}

}  // namespace

ParsedCurve parse_curve(const std::string& path, const RunConfig& cfg) {
  return parse_curve_json(read_file(path), cfg);
}

ParsedCurve parse_curve_json(const std::string& text, const RunConfig& cfg) {
  const json j = parse_json_text(text, "curve file");
  if (!j.is_object()) raise(Errc::schema_error, "curve file must be a JSON object");
  check_known_fields(j, {"interval", "rho", "components", "perturbation"}, "curve file");

  if (!j.contains("interval") || !j["interval"].is_array() || j["interval"].size() != 2) {
    raise(Errc::schema_error, "interval must be [lo, hi]");
  }
  const double lo = j["interval"][0].get<double>();
  const double hi = j["interval"][1].get<double>();
  const double rho = require_number(j, "rho");
  DomainPtr dom = domain_from_config(lo, hi, rho, cfg);

  if (!j.contains("components") || !j["components"].is_array() ||
      j["components"].size() != 3) {
    raise(Errc::schema_error, "curve file needs exactly 3 components");
  }

  std::array<AnalyticScalar, 3> comp;
  for (int m = 0; m < 3; ++m) {
    const json& cj = j["components"][m];
    if (!cj.is_object()) raise(Errc::schema_error, "component entries must be objects");
    const std::string where = "component " + std::to_string(m);
    if (cj.contains("builtin")) {
      check_known_fields(cj, {"builtin", "params"}, where);
      const std::string name = cj["builtin"].get<std::string>();
      double pitch = 0.25;
      if (cj.contains("params")) {
        check_known_fields(cj["params"], {"pitch"}, where + " params");
        if (cj["params"].contains("pitch")) pitch = cj["params"]["pitch"].get<double>();
      }
      // expanded to coefficients by node sampling
      comp[m] = AnalyticScalar::fit(
          dom, [&, m](double x) { return builtin_component(name, m, pitch, x); });
    } else {
      check_known_fields(cj, {"cheb_coeffs_re", "cheb_coeffs_im"}, where);
      if (!cj.contains("cheb_coeffs_re")) {
        raise(Errc::schema_error, where + " needs cheb_coeffs_re or builtin");
      }
      const json* im = cj.contains("cheb_coeffs_im") ? &cj["cheb_coeffs_im"] : nullptr;
      comp[m] = AnalyticScalar::from_coeffs(
          dom, coeffs_from_lists(cj["cheb_coeffs_re"], im, where));
    }
  }
  AnalyticCurve3 curve{std::move(comp)};

  if (j.contains("perturbation")) {
    const json& pj = j["perturbation"];
    check_known_fields(pj, {"direction", "magnitude"}, "perturbation");
    if (!pj.contains("direction") || !pj["direction"].is_array() ||
        pj["direction"].size() != 3) {
      raise(Errc::schema_error, "perturbation.direction must hold 3 coefficient lists");
    }
    const double magnitude = require_number(pj, "magnitude");
    if (magnitude < 0.0) raise(Errc::schema_error, "perturbation.magnitude must be >= 0");
    std::array<AnalyticScalar, 3> dir;
    for (int m = 0; m < 3; ++m) {
      dir[m] = AnalyticScalar::from_coeffs(
          dom, coeffs_from_lists(pj["direction"][m], nullptr, "perturbation"));
    }
    curve = curve + Cplx(magnitude) * AnalyticCurve3{std::move(dir)};
  }
  return ParsedCurve{std::move(curve), std::move(dom)};
}

std::string curve_to_json(const AnalyticCurve3& curve) {
  const auto& dom = curve.domain();
  json j;
  j["interval"] = {dom->lo, dom->hi};
  j["rho"] = dom->rho;
  j["components"] = json::array();
  for (int m = 0; m < 3; ++m) {
    json cj;
    std::vector<double> re, im;
    for (int k = 0; k < curve[m].coeffs().size(); ++k) {
      re.push_back(std::real(curve[m].coeffs()[k]));
      im.push_back(std::imag(curve[m].coeffs()[k]));
    }
    cj["cheb_coeffs_re"] = re;
    cj["cheb_coeffs_im"] = im;
    j["components"].push_back(cj);
  }
  return j.dump(2);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string mesh_to_obj(const SurfaceGrid& g) {
  std::string out;
  out.reserve(size_t(g.nu) * g.nv * 80);
  for (int iu = 0; iu < g.nu; ++iu) {
    for (int iv = 0; iv < g.nv; ++iv) {
      const Eigen::Vector3d p = g.at(iu, iv);
      out += "v " + format_double(p[0]) + " " + format_double(p[1]) + " " +
             format_double(p[2]) + "\n";
    }
  }
  auto idx = [&](int iu, int iv) { return iu * g.nv + iv + 1; };  // OBJ is 1-based
  for (int iu = 0; iu + 1 < g.nu; ++iu) {
    for (int iv = 0; iv + 1 < g.nv; ++iv) {
      const int a = idx(iu, iv), b = idx(iu + 1, iv), c = idx(iu, iv + 1),
                d = idx(iu + 1, iv + 1);
      out += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(d) +
             "\n";
      out += "f " + std::to_string(a) + " " + std::to_string(d) + " " + std::to_string(c) +
             "\n";
    }
  }
  return out;
}

void write_mesh(const SurfaceGrid& g, const std::string& path) {
  write_file(path, mesh_to_obj(g));
}

Report::Report(const RunConfig& cfg) {
  add("config.fit_tol", cfg.fit_tol);
  add("config.degree_cap", double(cfg.degree_cap));
  add("config.newton_tol", cfg.newton_tol);
  add("config.max_iter", double(cfg.max_iter));
  add("config.anchor_u0", cfg.anchor_u0 ? format_double(*cfg.anchor_u0) : "default");
  add("config.epsilon0", cfg.epsilon0 ? format_double(*cfg.epsilon0) : "probe");
  add("config.safety", cfg.safety);
  add("config.grid_nu", double(cfg.grid_nu));
  add("config.grid_nv", double(cfg.grid_nv));
  add("config.v_span", cfg.v_span);
  if (cfg.perm) {
    add("config.perm",
        std::to_string(cfg.perm->i) + ";" + std::to_string(cfg.perm->j) + ";" +
            std::to_string(cfg.perm->k));
  } else {
    add("config.perm", "auto");
  }
  add("config.printed_v3_sign", cfg.printed_v3_sign ? "true" : "false");
  add("config.range_margin", cfg.range_margin);
  add("config.boundary_samples", double(cfg.boundary_samples));
  add("config.zero_tol", cfg.zero_tol);
  add("config.arcsin_margin", cfg.arcsin_margin);
  add("config.inf_grid_angular", double(cfg.inf_grid_angular));
  add("config.inf_grid_radial", double(cfg.inf_grid_radial));
  add("config.probe_s_min", cfg.probe_s_min);
  add("config.probe_bisect_tol", cfg.probe_bisect_tol);
  add("config.probe_direction",
      format_double(cfg.probe_direction[0]) + ";" + format_double(cfg.probe_direction[1]) +
          ";" + format_double(cfg.probe_direction[2]));
}

void Report::add(const std::string& name, double value, const std::string& symbol) {
  rows_.push_back({name, format_double(value), symbol});
}

void Report::add(const std::string& name, const std::string& value,
                 const std::string& symbol) {
  rows_.push_back({name, value, symbol});
}

std::string Report::csv() const {
  std::string out = "name,value,symbol\n";
  for (const auto& row : rows_) {
    out += row[0] + "," + row[1] + "," + row[2] + "\n";
  }
  return out;
}

void Report::write(const std::string& path) const { write_file(path, csv()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot write '" + path + "'");
  out << content;
  if (!out) raise(Errc::io_error, "write failed for '" + path + "'");
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::non_convergence:
    case Errc::range_escape:
      return 2;
    case Errc::parse_error:
    case Errc::schema_error:
    case Errc::io_error:
      return 4;
    default:
      return 3;  // validation failures
  }
}

}  // namespace minterp
