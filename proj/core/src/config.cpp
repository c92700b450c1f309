#include "sdwt/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace sdwt {
namespace {

using detail::json;

json to_object(const RunConfig& c) {
  const auto& w = c.wavelet;
  const auto& g = c.grid;
  const auto& s = c.sampling;
  const auto& q = c.quadrature;
  const auto& f = c.fock;
  const auto& k = c.kernel;
  json fixed = json::object();
  for (const auto& [key, v] : c.plot.fixed) fixed[key] = v;
  return json{
      {"seed", c.seed},
      {"input", c.input},
      {"output_dir", c.output_dir},
      {"wavelet",
       {{"name", w.name},
        {"scale", w.scale},
        {"normalize", w.normalize},
        {"norm_beta", {w.norm_beta.real(), w.norm_beta.imag()}},
        {"norm_p", w.norm_p}}},
      {"grid",
       {{"alpha_radius", g.alpha_radius},
        {"alpha_count", g.alpha_count},
        {"x_radius", g.x_radius},
        {"x_count", g.x_count}}},
      {"sampling",
       {{"mu_count", s.mu_count},
        {"mu_max", s.mu_max},
        {"phi_count", s.phi_count},
        {"theta", s.theta},
        {"a_count", s.a_count},
        {"a_lo", s.a_lo},
        {"a_hi", s.a_hi},
        {"mirror_negative", s.mirror_negative},
        {"a_min", s.a_min},
        {"kappa_radius", s.kappa_radius},
        {"kappa_count", s.kappa_count},
        {"b_radius", s.b_radius},
        {"b_count", s.b_count}}},
      {"quadrature",
       {{"r_alpha", q.r_alpha},
        {"r_x", q.r_x},
        {"stride", q.stride},
        {"error_mode", q.error_mode == ErrorMode::Doubling ? "doubling" : "none"}}},
      {"fock",
       {{"cutoff", f.cutoff},
        {"operator_cutoff", f.operator_cutoff},
        {"quad_nodes", f.quad_nodes},
        {"quad_radius", f.quad_radius},
        {"quad_kind", f.quad_kind},
        {"mu", f.mu},
        {"phi", f.phi},
        {"theta", f.theta},
        {"a", f.a}}},
      {"kernel",
       {{"A", k.abcd.A},
        {"B", k.abcd.B},
        {"C", k.abcd.C},
        {"D", k.abcd.D},
        {"a", k.a},
        {"eta_radius", k.eta_radius},
        {"eta_count", k.eta_count}}},
      {"transform", {{"method", c.transform_method}}},
      {"plot", {{"input", c.plot.input}, {"axis1", c.plot.axis1}, {"axis2", c.plot.axis2}, {"fixed", fixed}}},
  };
}

template <class T>
void get(const json& j, const char* key, T& out) {
  out = j.at(key).get<T>();
}

RunConfig from_object(const json& j) {
  RunConfig c;
  get(j, "seed", c.seed);
  get(j, "input", c.input);
  get(j, "output_dir", c.output_dir);

  const json& w = j.at("wavelet");
  get(w, "name", c.wavelet.name);
  get(w, "scale", c.wavelet.scale);
  get(w, "normalize", c.wavelet.normalize);
  const auto nb = w.at("norm_beta").get<std::vector<double>>();
  if (nb.size() != 2) throw Error(ErrorCode::InvalidArgument, "wavelet.norm_beta must be [re, im]");
  c.wavelet.norm_beta = {nb[0], nb[1]};
  get(w, "norm_p", c.wavelet.norm_p);

  const json& g = j.at("grid");
  get(g, "alpha_radius", c.grid.alpha_radius);
  get(g, "alpha_count", c.grid.alpha_count);
  get(g, "x_radius", c.grid.x_radius);
  get(g, "x_count", c.grid.x_count);

  const json& s = j.at("sampling");
  auto& sp = c.sampling;
  get(s, "mu_count", sp.mu_count);
  get(s, "mu_max", sp.mu_max);
  get(s, "phi_count", sp.phi_count);
  get(s, "theta", sp.theta);
  get(s, "a_count", sp.a_count);
  get(s, "a_lo", sp.a_lo);
  get(s, "a_hi", sp.a_hi);
  get(s, "mirror_negative", sp.mirror_negative);
  get(s, "a_min", sp.a_min);
  get(s, "kappa_radius", sp.kappa_radius);
  get(s, "kappa_count", sp.kappa_count);
  get(s, "b_radius", sp.b_radius);
  get(s, "b_count", sp.b_count);

  const json& q = j.at("quadrature");
  get(q, "r_alpha", c.quadrature.r_alpha);
  get(q, "r_x", c.quadrature.r_x);
  get(q, "stride", c.quadrature.stride);
  const auto mode = q.at("error_mode").get<std::string>();
  if (mode == "doubling") {
    c.quadrature.error_mode = ErrorMode::Doubling;
  } else if (mode == "none") {
    c.quadrature.error_mode = ErrorMode::None;
  } else {
    throw Error(ErrorCode::InvalidArgument, "quadrature.error_mode must be none or doubling");
  }

  const json& f = j.at("fock");
  get(f, "cutoff", c.fock.cutoff);
  get(f, "operator_cutoff", c.fock.operator_cutoff);
  get(f, "quad_nodes", c.fock.quad_nodes);
  get(f, "quad_radius", c.fock.quad_radius);
  get(f, "quad_kind", c.fock.quad_kind);
  get(f, "mu", c.fock.mu);
  get(f, "phi", c.fock.phi);
  get(f, "theta", c.fock.theta);
  get(f, "a", c.fock.a);

  const json& k = j.at("kernel");
  get(k, "A", c.kernel.abcd.A);
  get(k, "B", c.kernel.abcd.B);
  get(k, "C", c.kernel.abcd.C);
  get(k, "D", c.kernel.abcd.D);
  get(k, "a", c.kernel.a);
  get(k, "eta_radius", c.kernel.eta_radius);
  get(k, "eta_count", c.kernel.eta_count);

  get(j.at("transform"), "method", c.transform_method);

  const json& p = j.at("plot");
  get(p, "input", c.plot.input);
  get(p, "axis1", c.plot.axis1);
  get(p, "axis2", c.plot.axis2);
  for (const auto& [key, v] : p.at("fixed").items()) c.plot.fixed[key] = v.get<double>();
  return c;
}

// Recursive merge that only accepts keys already present in `base`
// (free-form maps such as plot.fixed accept anything).
void merge_known(json& base, const json& patch, const std::string& path) {
  if (!patch.is_object()) throw Error(ErrorCode::InvalidArgument, "config section '" + path + "' must be an object");
  for (const auto& [key, v] : patch.items()) {
    const std::string sub = path.empty() ? key : path + "." + key;
    if (path == "plot.fixed") {
      base[key] = v;
      continue;
    }
    if (!base.contains(key)) throw Error(ErrorCode::InvalidArgument, "unknown config key '" + sub + "'");
    if (base[key].is_object()) {
      merge_known(base[key], v, sub);
    } else {
      base[key] = v;
    }
  }
}

void apply_override(json& root, const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorCode::InvalidArgument, "override must be key.path=value: '" + item + "'");
  }
  const std::string path = item.substr(0, eq);
  const std::string text = item.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  // Build a nested patch so the same key checks apply.
  json patch = value;
  std::string rest = path;
  std::vector<std::string> keys;
  for (std::size_t pos; (pos = rest.find('.')) != std::string::npos; rest = rest.substr(pos + 1)) {
    keys.push_back(rest.substr(0, pos));
  }
  keys.push_back(rest);
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) patch = json{{*it, patch}};
  merge_known(root, patch, "");
}

}  // namespace

MotherWavelet WaveletSpec::build() const {
  MotherWavelet psi = make_wavelet(name, scale);
  if (normalize) psi = normalize_admissible(psi, norm_beta, norm_p);
  return psi;
}

Grid3D GridSpec::grid() const {
  auto axis = [](double radius, std::size_t n) {
    Axis a = Axis::from_radius(radius, n);
    a.validate();
    return a;
  };
  return Grid3D{axis(alpha_radius, alpha_count), axis(alpha_radius, alpha_count), axis(x_radius, x_count)};
}

ParameterSampling SamplingSpec::build(double refine) const {
  auto scaled = [refine](std::size_t n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(static_cast<double>(n) * refine)));
  };
  auto lattice = [](double radius, std::size_t n) { return Axis::from_radius(radius, n); };
  ParameterSampling out = ParameterSampling::make(
      scaled(mu_count), mu_max, scaled(phi_count), theta, scaled(a_count), a_lo, a_hi, mirror_negative,
      lattice(kappa_radius, kappa_count), lattice(kappa_radius, kappa_count), lattice(b_radius, b_count), a_min);
  out.validate();
  return out;
}

FockQuadrature FockSpec::quadrature() const {
  FockQuadrature q;
  if (quad_kind == "gauss-hermite") {
    q.kind = FockQuadrature::Kind::GaussHermite;
  } else if (quad_kind == "trapezoid") {
    q.kind = FockQuadrature::Kind::Trapezoid;
  } else {
    throw Error(ErrorCode::InvalidArgument, "fock.quad_kind must be gauss-hermite or trapezoid");
  }
  q.nodes = quad_nodes;
  q.radius = quad_radius;
  return q;
}

std::string RunConfig::to_json() const { return to_object(*this).dump(2) + "\n"; }

void RunConfig::validate() const {
  (void)grid.grid();
  (void)sampling.build();
  (void)fock.quadrature();
  if (fock.cutoff < 1 || fock.operator_cutoff < 1) throw Error(ErrorCode::InvalidArgument, "fock cutoffs must be >= 1");
  if (transform_method != "fourier" && transform_method != "direct") {
    throw Error(ErrorCode::InvalidArgument, "transform.method must be fourier or direct");
  }
  if (!(kernel.a > 0.0)) throw Error(ErrorCode::InvalidArgument, "kernel.a must be positive", kernel.a);
  (void)sr_from_abcd(kernel.abcd);
  if (kernel.eta_count < 2) throw Error(ErrorCode::InvalidGrid, "kernel.eta_count must be at least 2");
  if (output_dir.empty()) throw Error(ErrorCode::InvalidArgument, "output_dir is empty");
}

RunConfig parse_config(std::string_view json_text, const std::vector<std::string>& overrides) {
  json root = to_object(RunConfig{});
  try {
    if (!json_text.empty()) merge_known(root, json::parse(json_text), "");
    for (const auto& item : overrides) apply_override(root, item);
    RunConfig c = from_object(root);
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad config: ") + e.what());
  }
}

RunConfig load_config(const std::optional<std::filesystem::path>& path, const std::vector<std::string>& overrides) {
  std::string text;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw Error(ErrorCode::Io, "cannot read config " + path->string());
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_config(text, overrides);
}

}  // namespace sdwt
