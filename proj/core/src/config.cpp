#include <algorithm>
#include <fstream>
#include <sstream>

#include "sh1d/experiment.hpp"

namespace sh1d {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool parse_bool(const std::string& v) {
  const std::string s = lower(v);
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw std::invalid_argument("config: bad boolean '" + v + "'");
}

double parse_double(const std::string& v) {
  std::size_t used = 0;
  const double x = std::stod(v, &used);
  if (used != v.size()) throw std::invalid_argument("config: bad number '" + v + "'");
  return x;
}

std::vector<double> parse_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(item));
  }
  return out;
}

}  // namespace

ExperimentKind parse_experiment(const std::string& name) {
  const std::string s = lower(name);
  if (s == "travelling-shock" || s == "traveling-shock" || s == "shock")
    return ExperimentKind::TravellingShock;
  if (s == "similarity") return ExperimentKind::Similarity;
  if (s == "runout" || s == "run-out") return ExperimentKind::RunOut;
  if (s == "custom") return ExperimentKind::Custom;
  throw std::invalid_argument("config: unknown experiment '" + name + "'");
}

SchemeKind parse_scheme(const std::string& name) {
  const std::string s = lower(name);
  if (s == "lagrangian" || s == "lag") return SchemeKind::Lagrangian;
  if (s == "noc") return SchemeKind::Noc;
  if (s == "noc-front-tracking" || s == "nft") return SchemeKind::NocFrontTracking;
  throw std::invalid_argument("config: unknown scheme '" + name + "'");
}

ReconMethod parse_recon(const std::string& name) {
  const std::string s = lower(name);
  if (s == "minmod") return ReconMethod::MinMod;
  if (s == "superbee") return ReconMethod::Superbee;
  if (s == "central" || s == "unlimited") return ReconMethod::UnlimitedCentral;
  if (s == "weno-linear" || s == "wenol") return ReconMethod::WenoLinear;
  if (s == "weno-quadratic" || s == "wenoq") return ReconMethod::WenoQuadratic;
  throw std::invalid_argument("config: unknown reconstruction '" + name + "'");
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::TravellingShock: return "travelling-shock";
    case ExperimentKind::Similarity: return "similarity";
    case ExperimentKind::RunOut: return "runout";
    case ExperimentKind::Custom: return "custom";
  }
  return "?";
}

std::string to_string(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::Lagrangian: return "lagrangian";
    case SchemeKind::Noc: return "noc";
    case SchemeKind::NocFrontTracking: return "noc-front-tracking";
  }
  return "?";
}

std::string to_string(ReconMethod method) {
  switch (method) {
    case ReconMethod::MinMod: return "minmod";
    case ReconMethod::Superbee: return "superbee";
    case ReconMethod::UnlimitedCentral: return "central";
    case ReconMethod::WenoLinear: return "weno-linear";
    case ReconMethod::WenoQuadratic: return "weno-quadratic";
  }
  return "?";
}

ExperimentConfig default_config(ExperimentKind kind, SchemeKind scheme) {
  ExperimentConfig c;
  c.experiment = kind;
  c.scheme = scheme;
  switch (kind) {
    case ExperimentKind::TravellingShock:
      c.checkpoints = {0.0, 3.0, 6.0};
      break;
    case ExperimentKind::Similarity:
      c.checkpoints = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0};
      break;
    case ExperimentKind::RunOut:
      c.checkpoints.clear();
      for (int t = 0; t <= 27; t += 3) c.checkpoints.push_back(t);
      break;
    case ExperimentKind::Custom:
      c.checkpoints = {0.0, 1.0};
      break;
  }
  if (scheme == SchemeKind::Lagrangian) c.fixed_dt = 1e-3;
  return c;
}

void set_config_key(ExperimentConfig& c, const std::string& key,
                    const std::string& value) {
  const std::string k = lower(trim(key));
  const std::string v = trim(value);
  if (k == "experiment") {
    const ExperimentConfig d = default_config(parse_experiment(v), c.scheme);
    c.experiment = d.experiment;
    c.checkpoints = d.checkpoints;
  } else if (k == "scheme") {
    c.scheme = parse_scheme(v);
    if (c.scheme == SchemeKind::Lagrangian && c.fixed_dt == 0.0) c.fixed_dt = 1e-3;
  } else if (k == "recon") {
    c.recon = parse_recon(v);
  } else if (k == "derivative") {
    const std::string s = lower(v);
    if (s == "jacobian") c.derivative = DerivativeForm::Jacobian;
    else if (s == "jacobian-free" || s == "flux") c.derivative = DerivativeForm::JacobianFree;
    else throw std::invalid_argument("config: unknown derivative form '" + v + "'");
  } else if (k == "n") {
    c.n_cells = static_cast<int>(parse_double(v));
  } else if (k == "cfl") {
    c.cfl = parse_double(v);
  } else if (k == "dt") {
    c.fixed_dt = parse_double(v);
  } else if (k == "t_end" || k == "t-end") {
    c.t_end = parse_double(v);
  } else if (k == "checkpoints") {
    c.checkpoints = parse_list(v);
  } else if (k == "out") {
    c.out_dir = v;
  } else if (k == "seed") {
    c.seed = static_cast<unsigned long>(parse_double(v));
  } else if (k == "margin_order" || k == "margin-order") {
    c.margin_order = static_cast<int>(parse_double(v));
  } else if (k == "mu") {
    c.mu = parse_double(v);
  } else if (k == "pressure_gradient_term") {
    c.pressure_gradient_term = parse_bool(v);
  } else if (k == "swap_angles" || k == "swap-angles") {
    c.swap_friction_angles = parse_bool(v);
  } else if (k == "profile") {
    c.custom.profile = lower(v);
  } else if (k == "step_x0") {
    c.custom.step_x0 = parse_double(v);
  } else if (k == "step_h_left") {
    c.custom.step_h_left = parse_double(v);
  } else if (k == "step_u_left") {
    c.custom.step_u_left = parse_double(v);
  } else if (k == "step_h_right") {
    c.custom.step_h_right = parse_double(v);
  } else if (k == "step_u_right") {
    c.custom.step_u_right = parse_double(v);
  } else if (k == "cap_center") {
    c.custom.cap_center = parse_double(v);
  } else if (k == "cap_half_width") {
    c.custom.cap_half_width = parse_double(v);
  } else if (k == "cap_peak") {
    c.custom.cap_peak = parse_double(v);
  } else if (k == "cap_u") {
    c.custom.cap_u = parse_double(v);
  } else if (k == "phi_deg") {
    c.custom.phi_deg = parse_double(v);
  } else if (k == "delta_deg") {
    c.custom.delta_deg = parse_double(v);
  } else if (k == "zeta_deg") {
    c.custom.zeta_deg = parse_double(v);
  } else if (k == "epsilon") {
    c.custom.epsilon = parse_double(v);
  } else if (k == "domain_left") {
    c.custom.domain_left = parse_double(v);
  } else if (k == "domain_right") {
    c.custom.domain_right = parse_double(v);
  } else if (k == "runout_track") {
    c.custom.runout_track = parse_bool(v);
  } else if (k == "trans_begin") {
    c.custom.trans_begin = parse_double(v);
  } else if (k == "trans_end") {
    c.custom.trans_end = parse_double(v);
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  ExperimentConfig c = default_config(ExperimentKind::Similarity,
                                      SchemeKind::NocFrontTracking);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: missing '=' on line " +
                                  std::to_string(lineno));
    set_config_key(c, line.substr(0, eq), line.substr(eq + 1));
  }
  return c;
}

}  // namespace sh1d
