#include <filesystem>
#include <fstream>
#include <sstream>

#include "common.hpp"
#include "sdwt/commands.hpp"
#include "sdwt/config.hpp"
#include "sdwt/field_io.hpp"

using namespace sdwt;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sdwt_unit_" + name);
  fs::remove_all(p);
  return p;
}

// Small sampling so the transform verb runs in a blink.
std::vector<std::string> small(const fs::path& out, const std::string& input) {
  return {"output_dir=" + out.string(), "input=" + input, "grid.alpha_count=12", "grid.x_count=16",
          "sampling.mu_count=2",        "sampling.phi_count=2", "sampling.a_count=2", "sampling.kappa_count=2",
          "sampling.b_count=3"};
}

}  // namespace

TEST_SUITE("commands") {
  TEST_CASE("transform of the zero fixture is all zeros") {
    const fs::path out = scratch("zero");
    const RunConfig c = parse_config("", small(out, "fixture:zero"));
    std::ostringstream log;
    CHECK(cmd_transform(c, log) == kExitOk);
    const std::string csv = slurp(out / "coefficients.csv");
    CHECK(lines(csv) == c.sampling.build().size() + 1);
    std::istringstream in(csv);
    std::string row;
    std::getline(in, row);
    while (std::getline(in, row)) {
      std::vector<std::string> cells;
      std::stringstream ss(row);
      for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
      CHECK(std::stod(cells[7]) == 0.0);
      CHECK(std::stod(cells[8]) == 0.0);
    }
  }

  TEST_CASE("Gaussian fixture: row count and byte-identical rerun") {
    const fs::path out = scratch("gauss");
    const RunConfig c = parse_config("", small(out, "fixture:gaussian"));
    std::ostringstream log;
    REQUIRE(cmd_transform(c, log) == kExitOk);
    const std::string first = slurp(out / "coefficients.csv");
    const std::string meta = slurp(out / "coefficients.json");
    CHECK(lines(first) == c.sampling.build().size() + 1);
    CHECK(meta.find("\"seed\"") != std::string::npos);
    REQUIRE(cmd_transform(c, log) == kExitOk);
    CHECK(slurp(out / "coefficients.csv") == first);
  }

  TEST_CASE("transform reads a field file") {
    const fs::path out = scratch("file");
    fs::create_directories(out);
    const Grid3D g{Axis::from_radius(4.0, 12), Axis::from_radius(4.0, 12), Axis::from_radius(5.0, 16)};
    write_field(out / "in.csv", SampledField::tabulate(g, [](cplx a, double x) { return cplx{std::exp(-0.5 * std::norm(a) - 0.5 * x * x)}; }));
    RunConfig c = parse_config("", small(out, (out / "in.csv").string()));
    c.quadrature.r_alpha = 4.0;
    c.quadrature.r_x = 5.0;
    std::ostringstream log;
    CHECK(cmd_transform(c, log) == kExitOk);
    testing::expect_error(ErrorCode::Io, [&] {
      RunConfig bad = c;
      bad.input = (out / "missing.csv").string();
      cmd_transform(bad, log);
    });
  }

  TEST_CASE("plotdata slices and validates axes") {
    const fs::path out = scratch("plot");
    RunConfig c = parse_config("", small(out, "fixture:gaussian"));
    std::ostringstream log;
    REQUIRE(cmd_transform(c, log) == kExitOk);
    c.plot.input = (out / "coefficients.csv").string();
    c.plot.axis1 = "a";
    c.plot.axis2 = "b";
    REQUIRE(cmd_plotdata(c, log) == kExitOk);
    const std::string csv = slurp(out / "plotdata.csv");
    // 2 mirrored a-values x 2 magnitudes x 3 b nodes.
    CHECK(lines(csv) == 1 + 4 * 3);
    std::istringstream in(csv);
    std::string row;
    std::getline(in, row);
    CHECK(row == "a,b,abs,arg");
    while (std::getline(in, row)) CHECK(std::stod(row.substr(row.find(',', row.find(',') + 1) + 1)) >= 0.0);

    c.plot.axis1 = "zeta";
    testing::expect_error(ErrorCode::BadSlice, [&] { cmd_plotdata(c, log); });
  }

  TEST_CASE("plotdata of an empty coefficient file is header-only") {
    const fs::path out = scratch("empty");
    fs::create_directories(out);
    std::ofstream(out / "empty.csv") << "mu,phi,theta,kappa_re,kappa_im,a,b,W_re,W_im,err_est\n";
    RunConfig c = parse_config("", {"output_dir=" + out.string()});
    c.plot.input = (out / "empty.csv").string();
    std::ostringstream log;
    CHECK(cmd_plotdata(c, log) == kExitOk);
    CHECK(slurp(out / "plotdata.csv") == "a,b,abs,arg\n");
  }

  TEST_CASE("kernel export") {
    const fs::path out = scratch("kernel");
    const RunConfig c = parse_config("", {"output_dir=" + out.string(), "kernel.eta_count=5"});
    std::ostringstream log;
    CHECK(cmd_kernel(c, log) == kExitOk);
    CHECK(lines(slurp(out / "kernel.csv")) == 26);
    CHECK(slurp(out / "kernel.json").find("principal sqrt(2iB)") != std::string::npos);
  }

  TEST_CASE("fock export") {
    const fs::path out = scratch("fock");
    const RunConfig c = parse_config("", {"output_dir=" + out.string(), "fock.operator_cutoff=6", "fock.quad_nodes=24"});
    std::ostringstream log;
    CHECK(cmd_fock(c, log) == kExitOk);
    CHECK(lines(slurp(out / "operator.csv")) == 49 * 49 + 1);
    CHECK(slurp(out / "operator.json").find("\"deviation\"") != std::string::npos);
  }

  TEST_CASE("error records are JSON") {
    const std::string j = error_json(Error(ErrorCode::BadSlice, "no such axis", 2.0));
    CHECK(j.find("\"error\":\"BadSlice\"") != std::string::npos);
    CHECK(j.find("\"value\":2.0") != std::string::npos);
  }
}
