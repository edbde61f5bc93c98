#pragma once

#include <string>
#include <vector>

#include "minterp/bounds.hpp"
#include "minterp/verification.hpp"

namespace minterp {

// Tolerance knobs, anchors and output shaping shared by the CLI subcommands.
// Parsed from a strict-schema JSON file; unknown fields are rejected.
struct RunConfig {
  double fit_tol = 1e-13;
  int degree_cap = 4096;
  double newton_tol = 1e-11;
  int max_iter = 50;
  std::optional<double> anchor_u0;
  std::optional<double> epsilon0;
  double safety = 0.9;
  int grid_nu = 64;
  int grid_nv = 32;
  double v_span = 0.6;
  std::optional<IndexPermutation> perm;
  bool printed_v3_sign = false;
  double range_margin = 0.02;
  int boundary_samples = 256;
  double zero_tol = 1e-8;
  double arcsin_margin = 1e-6;
  int inf_grid_angular = 64;
  int inf_grid_radial = 33;
  double probe_s_min = 1e-8;
  double probe_bisect_tol = 0.05;
  Eigen::Vector3d probe_direction = Eigen::Vector3d(1.0, 0.0, 0.0);

  SolverConfig solver() const;
  PipelineConfig pipeline() const;
  ProbeConfig probe() const;
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_json(const std::string& text);

// Curve files: interval + rho + exactly three components, each either explicit
// Chebyshev coefficients or a builtin expanded by node sampling, plus an
// optional additive perturbation (3 coefficient lists and a magnitude).
struct ParsedCurve {
  AnalyticCurve3 curve;
  DomainPtr domain;
};

ParsedCurve parse_curve(const std::string& path, const RunConfig& cfg);
ParsedCurve parse_curve_json(const std::string& text, const RunConfig& cfg);

// Inverse of the explicit-coefficient form of parse_curve.
std::string curve_to_json(const AnalyticCurve3& curve);

// OBJ text: one "v x y z" line per vertex (row-major, 17 significant digits),
// then two 1-based triangle faces per grid quad. Byte-stable.
std::string mesh_to_obj(const SurfaceGrid& g);
void write_mesh(const SurfaceGrid& g, const std::string& path);

// Deterministic CSV: header "name,value,symbol", config echo first.
class Report {
public:
  explicit Report(const RunConfig& cfg);
  void add(const std::string& name, double value, const std::string& symbol = "");
  void add(const std::string& name, const std::string& value,
           const std::string& symbol = "");
  std::string csv() const;
  void write(const std::string& path) const;

private:
  std::vector<std::array<std::string, 3>> rows_;
};

std::string format_double(double x);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

int exit_code_for(const Error& e);

}  // namespace minterp
