#include "sdwt/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json_util.hpp"
#include "sdwt/field_io.hpp"
#include "sdwt/fock.hpp"
#include "sdwt/fresnel.hpp"
#include "sdwt/suites.hpp"
#include "sdwt/transform.hpp"

namespace sdwt {
namespace {

using detail::json;

std::filesystem::path out_dir(const RunConfig& c) {
  std::filesystem::path dir(c.output_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + path.string());
  return f;
}

SampledField load_signal(const RunConfig& c) {
  const std::string prefix = "fixture:";
  if (c.input.rfind(prefix, 0) != 0) return read_field(c.input);
  const std::string name = c.input.substr(prefix.size());
  const Grid3D grid = c.grid.grid();
  if (name == "gaussian") {
    return SampledField::tabulate(grid, [](cplx al, double x) { return cplx{std::exp(-0.5 * std::norm(al) - 0.5 * x * x)}; });
  }
  if (name == "zero") return SampledField::zeros(grid);
  if (name == "exponential") {
    const cplx beta{0.5, 0.0};
    return SampledField::tabulate(grid, [beta](cplx al, double x) {
      return std::exp(std::conj(al) * beta - al * std::conj(beta) - cplx{0.0, x});
    });
  }
  throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

json provenance(const RunConfig& c) { return json{{"seed", c.seed}, {"config", json::parse(c.to_json())}}; }

// Coefficient CSV columns that can span a plot axis.
const std::vector<std::string> kSliceColumns{"mu", "phi", "theta", "kappa_re", "kappa_im", "a", "b"};

bool close(double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

std::string error_json(std::string_view code, const std::string& message) {
  return json{{"error", std::string(code)}, {"message", message}}.dump();
}

std::string error_json(const Error& e) {
  json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (e.value()) j["value"] = std::isfinite(*e.value()) ? json(*e.value()) : json(std::to_string(*e.value()));
  if (e.point_index()) j["point_index"] = *e.point_index();
  return j.dump();
}

int cmd_transform(const RunConfig& config, std::ostream& out) {
  const SampledField g = load_signal(config);
  const MotherWavelet psi = config.wavelet.build();
  const ParameterSampling sampling = config.sampling.build();
  const BatchMethod method = config.transform_method == "direct" ? BatchMethod::Direct : BatchMethod::Fourier;
  const CoefficientField W = sdwt_batch(g, psi, sampling, config.quadrature, method);
  const auto stem = out_dir(config) / "coefficients";
  json extra = provenance(config);
  extra["input"] = config.input;
  extra["wavelet"] = psi.name();
  extra["points"] = W.size();
  write_coefficients(stem, W, extra.dump());
  double peak = 0.0;
  for (const cplx& v : W.values) peak = std::max(peak, std::abs(v));
  out << json{{"verb", "transform"}, {"points", W.size()}, {"max_abs", peak}, {"csv", stem.string() + ".csv"}}.dump()
      << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& config, const std::string& suite, std::ostream& out) {
  const VerificationReport rep = run_suite(suite, config);
  write_report(out_dir(config), rep);
  json failed = json::array();
  for (const auto& c : rep.checks) {
    if (!c.informational && !c.pass) failed.push_back(c.id);
  }
  out << json{{"verb", "verify"}, {"suite", suite}, {"pass", rep.pass()}, {"checks", rep.checks.size()}, {"failed", failed}}
             .dump()
      << "\n";
  return rep.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_plotdata(const RunConfig& config, std::ostream& out) {
  const auto& spec = config.plot;
  auto column = [](const std::string& name) -> std::size_t {
    const auto it = std::find(kSliceColumns.begin(), kSliceColumns.end(), name);
    if (it == kSliceColumns.end()) throw Error(ErrorCode::BadSlice, "'" + name + "' is not a coefficient axis");
    return static_cast<std::size_t>(it - kSliceColumns.begin());
  };
  const std::size_t c1 = column(spec.axis1), c2 = column(spec.axis2);
  if (c1 == c2) throw Error(ErrorCode::BadSlice, "slice axes must differ");
  for (const auto& [key, v] : spec.fixed) {
    const std::size_t c = column(key);
    if (c == c1 || c == c2) throw Error(ErrorCode::BadSlice, "'" + key + "' is both a slice axis and fixed");
  }
  if (spec.input.empty()) throw Error(ErrorCode::InvalidArgument, "plot.input is not set");

  std::ifstream in(spec.input, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + spec.input);
  std::vector<std::vector<double>> rows;
  std::string line;
  if (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "mu,phi,theta,kappa_re,kappa_im,a,b,W_re,W_im,err_est") {
      throw Error(ErrorCode::Io, "unexpected coefficient CSV header");
    }
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto cells = split(line);
      if (cells.size() != 10) throw Error(ErrorCode::Io, "coefficient row with " + std::to_string(cells.size()) + " columns");
      std::vector<double> row;
      for (const auto& cell : cells) row.push_back(std::stod(cell));
      rows.push_back(std::move(row));
    }
  }

  // Unset non-slice columns are pinned to the first row's value.
  std::vector<std::pair<std::size_t, double>> pins;
  for (std::size_t c = 0; c < kSliceColumns.size(); ++c) {
    if (c == c1 || c == c2) continue;
    const auto it = spec.fixed.find(kSliceColumns[c]);
    if (it != spec.fixed.end()) {
      pins.emplace_back(c, it->second);
    } else if (!rows.empty()) {
      pins.emplace_back(c, rows.front()[c]);
    }
  }

  const auto path = out_dir(config) / "plotdata.csv";
  std::ofstream f = open_out(path);
  f << spec.axis1 << "," << spec.axis2 << ",abs,arg\n";
  std::size_t n = 0;
  for (const auto& row : rows) {
    const bool keep = std::all_of(pins.begin(), pins.end(), [&](const auto& p) { return close(row[p.first], p.second); });
    if (!keep) continue;
    const cplx w{row[7], row[8]};
    f << format_double(row[c1]) << "," << format_double(row[c2]) << "," << format_double(std::abs(w)) << ","
      << format_double(std::arg(w)) << "\n";
    ++n;
  }
  if (!f) throw Error(ErrorCode::Io, "write failed for " + path.string());
  out << json{{"verb", "plotdata"}, {"rows", n}, {"csv", path.string()}}.dump() << "\n";
  return kExitOk;
}

int cmd_kernel(const RunConfig& config, std::ostream& out) {
  const LensFresnelKernel k{config.kernel.abcd, config.kernel.a};
  k.validate();
  const SymplecticParams sym = sr_from_abcd(k.abcd);
  const Axis eta = Axis::from_radius(config.kernel.eta_radius, config.kernel.eta_count);
  const auto dir = out_dir(config);
  {
    std::ofstream f = open_out(dir / "kernel.csv");
    f << "i,j,eta1,eta1p,re,im\n";
    for (std::size_t i = 0; i < eta.count; ++i) {
      for (std::size_t j = 0; j < eta.count; ++j) {
        const cplx v = kernel_eval(k, eta.node(i), eta.node(j));
        f << i << "," << j << "," << format_double(eta.node(i)) << "," << format_double(eta.node(j)) << ","
          << format_double(v.real()) << "," << format_double(v.imag()) << "\n";
      }
    }
    if (!f) throw Error(ErrorCode::Io, "write failed for kernel.csv");
  }
  json meta = provenance(config);
  meta["abcd"] = {k.abcd.A, k.abcd.B, k.abcd.C, k.abcd.D};
  meta["det_minus_one"] = k.abcd.det() - 1.0;
  meta["a"] = k.a;
  meta["s"] = {sym.s().real(), sym.s().imag()};
  meta["r"] = {sym.r().real(), sym.r().imag()};
  meta["branch"] = k.branch;
  meta["eta"] = detail::axis_to_json(eta);
  std::ofstream(dir / "kernel.json", std::ios::binary) << meta.dump(2) << "\n";
  out << json{{"verb", "kernel"}, {"entries", eta.count * eta.count}, {"csv", (dir / "kernel.csv").string()}}.dump()
      << "\n";
  return kExitOk;
}

int cmd_fock(const RunConfig& config, std::ostream& out) {
  constexpr double kTolerance = 1e-3;
  constexpr std::size_t kBlock = 3;
  const auto& fs = config.fock;
  const FockSpace space(fs.operator_cutoff);
  const SymplecticParams sym = symplectic_from_hyperbolic(fs.mu, fs.phi, fs.theta);
  const TransformPoint tp{sym, DilationParams::make(fs.a), {}};
  const FockOperator U = build_U_quadrature(tp, space, fs.quadrature());
  const FockOperator V = build_U_normal_ordered(sym.s(), sym.r(), fs.a, space);
  const double dev = U.block_deviation(V.mat, kBlock);

  const auto dir = out_dir(config);
  {
    std::ofstream f = open_out(dir / "operator.csv");
    f << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < U.mat.rows(); ++i) {
      for (Eigen::Index j = 0; j < U.mat.cols(); ++j) {
        const cplx v = U.mat(i, j);
        f << i << "," << j << "," << format_double(v.real()) << "," << format_double(v.imag()) << "\n";
      }
    }
    if (!f) throw Error(ErrorCode::Io, "write failed for operator.csv");
  }
  const bool pass = dev <= kTolerance;
  json meta = provenance(config);
  meta["check"] = "quadrature vs normal-ordered operator";
  meta["N"] = fs.operator_cutoff;
  meta["quad"] = {{"kind", fs.quad_kind}, {"nodes", fs.quad_nodes}, {"radius", fs.quad_radius}};
  meta["block_total"] = kBlock;
  meta["deviation"] = dev;
  meta["tolerance"] = kTolerance;
  meta["pass"] = pass;
  std::ofstream(dir / "operator.json", std::ios::binary) << meta.dump(2) << "\n";
  out << json{{"verb", "fock"}, {"deviation", dev}, {"pass", pass}, {"csv", (dir / "operator.csv").string()}}.dump()
      << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace sdwt
