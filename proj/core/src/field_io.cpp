#include "sdwt/field_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json_util.hpp"
#include "sdwt/errors.hpp"

namespace sdwt {

using detail::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Io, "cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void write_field(const std::filesystem::path& path, const SampledField& field,
                 FieldEncoding encoding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  json header{{"format", "sdwt-field"},
              {"version", 1},
              {"encoding", encoding == FieldEncoding::Csv ? "csv" : "binary"},
              {"order", "alpha1,alpha2,x"},
              {"axes", detail::grid_to_json(field.grid())}};
  out << header.dump() << '\n';
  if (encoding == FieldEncoding::Csv) {
    for (const cplx& v : field.values()) {
      out << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
  } else {
    static_assert(std::endian::native == std::endian::little, "binary payload assumes little-endian");
    out.write(reinterpret_cast<const char*>(field.values().data()),
              static_cast<std::streamsize>(field.values().size() * sizeof(cplx)));
  }
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

SampledField read_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, "bad field header in " + path.string() + ": " + e.what());
  }
  const Grid3D grid = detail::grid_from_json(header.at("axes"));
  const std::string encoding = header.value("encoding", "csv");
  std::vector<cplx> values(grid.size());
  if (encoding == "csv") {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!std::getline(in, line)) throw Error(ErrorCode::Io, "field payload too short");
      line = strip_cr(line);
      const auto cols = split_csv(line);
      if (cols.size() != 2) throw Error(ErrorCode::Io, "field rows must be 're,im'");
      values[i] = {parse_double(cols[0]), parse_double(cols[1])};
    }
  } else if (encoding == "binary") {
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(cplx)));
    if (in.gcount() != static_cast<std::streamsize>(values.size() * sizeof(cplx))) {
      throw Error(ErrorCode::Io, "binary field payload too short");
    }
  } else {
    throw Error(ErrorCode::Io, "unknown field encoding '" + encoding + "'");
  }
  return SampledField(grid, std::move(values));
}

void write_coefficient_csv(std::ostream& out, const CoefficientField& field) {
  field.validate();
  out << "mu,phi,theta,kappa_re,kappa_im,a,b,W_re,W_im,err_est\n";
  for (std::size_t i = 0; i < field.size(); ++i) {
    const TransformPoint& tp = field.points[i];
    const SurfaceCoords c = surface_coords(tp.sym, field.meta.theta);
    out << format_double(c.mu) << ',' << format_double(c.phi) << ',' << format_double(c.theta)
        << ',' << format_double(tp.tr.kappa.real()) << ',' << format_double(tp.tr.kappa.imag())
        << ',' << format_double(tp.dil.a()) << ',' << format_double(tp.dil.b()) << ','
        << format_double(field.values[i].real()) << ',' << format_double(field.values[i].imag())
        << ',' << format_double(field.error_estimates[i]) << '\n';
  }
}

void write_coefficients(const std::filesystem::path& stem, const CoefficientField& field,
                        std::string_view extra_meta_json) {
  std::filesystem::path csv_path = stem;
  csv_path += ".csv";
  std::filesystem::path json_path = stem;
  json_path += ".json";

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw Error(ErrorCode::Io, "cannot open " + csv_path.string());
  write_coefficient_csv(csv, field);

  json meta{{"format", "sdwt-coefficients"},
            {"version", 1},
            {"points", field.size()},
            {"csv", csv_path.filename().string()},
            {"columns", {"mu", "phi", "theta", "kappa_re", "kappa_im", "a", "b", "W_re", "W_im",
                         "err_est"}},
            {"quadrature",
             {{"grid", detail::grid_to_json(field.meta.grid)},
              {"tolerance", field.meta.tolerance},
              {"method", field.meta.method},
              {"sqrt_branch", field.meta.sqrt_branch},
              {"theta", field.meta.theta}}}};
  try {
    meta["run"] = json::parse(extra_meta_json);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("extra meta is not JSON: ") + e.what());
  }
  std::ofstream js(json_path, std::ios::binary);
  if (!js) throw Error(ErrorCode::Io, "cannot open " + json_path.string());
  js << meta.dump(2) << '\n';
  if (!csv || !js) throw Error(ErrorCode::Io, "write failed for " + stem.string());
}

CoefficientField read_coefficient_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Io, "empty coefficient file");
  if (strip_cr(line) != "mu,phi,theta,kappa_re,kappa_im,a,b,W_re,W_im,err_est") {
    throw Error(ErrorCode::Io, "unexpected coefficient CSV header");
  }
  CoefficientField field;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto cols = split_csv(line);
    if (cols.size() != 10) {
      throw Error(ErrorCode::Io, "row " + std::to_string(row) + " has " +
                                     std::to_string(cols.size()) + " columns");
    }
    double v[10];
    for (int k = 0; k < 10; ++k) v[k] = parse_double(cols[k]);
    TransformPoint tp;
    tp.sym = symplectic_from_hyperbolic(v[0], v[1], v[2]);
    tp.tr.kappa = {v[3], v[4]};
    tp.dil = DilationParams::make(v[5], v[6]);
    field.points.push_back(tp);
    field.values.emplace_back(v[7], v[8]);
    field.error_estimates.push_back(v[9]);
    field.meta.theta = v[2];
  }
  return field;
}

}  // namespace sdwt
