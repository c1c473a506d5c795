#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sh1d/experiment.hpp"

using namespace sh1d;

TEST_CASE("error metric") {
  std::vector<double> h{1.0, 2.0, 3.0};
  std::vector<double> same = h;
  CHECK(error_metric(h, same) == 0.0);

  std::vector<double> scaled{1.001, 2.002, 3.003};
  CHECK(error_metric(scaled, h) == doctest::Approx(1e-3).epsilon(1e-10));

  std::vector<double> empty;
  CHECK_THROWS_AS(error_metric(empty, empty), std::invalid_argument);
  std::vector<double> zeros{0.0, 0.0, 0.0};
  CHECK_THROWS_AS(error_metric(h, zeros), std::invalid_argument);
}

TEST_CASE("locate_shock") {
  const int n = 360;
  const double dx = 36.0 / n;
  std::vector<double> x(n), h(n);
  for (int j = 0; j < n; ++j) x[j] = (j + 0.5) * dx;

  SUBCASE("exact step lands within one cell") {
    for (int j = 0; j < n; ++j) h[j] = x[j] < 24.0 ? 0.3 : 0.9;
    CHECK(locate_shock(x, h) == doctest::Approx(24.0).epsilon(dx));
  }
  SUBCASE("smooth parabola has no jump") {
    for (int j = 0; j < n; ++j) {
      const double eta = (x[j] - 18.0) / 6.0;
      h[j] = std::abs(eta) < 1.0 ? 1.0 - eta * eta : 0.0;
    }
    CHECK_THROWS_AS(locate_shock(x, h), SolverError);
  }
  SUBCASE("all-constant field has no jump") {
    for (int j = 0; j < n; ++j) h[j] = 0.5;
    CHECK_THROWS_AS(locate_shock(x, h), SolverError);
  }
}

TEST_CASE("config defaults and overrides") {
  ExperimentConfig c = default_config(ExperimentKind::RunOut,
                                      SchemeKind::NocFrontTracking);
  CHECK(c.checkpoints.size() == 10);
  CHECK(c.checkpoints.back() == doctest::Approx(27.0));

  set_config_key(c, "n", "90");
  set_config_key(c, "cfl", "0.3");
  set_config_key(c, "recon", "weno-quadratic");
  set_config_key(c, "margin-order", "1");
  set_config_key(c, "mu", "0.02");
  CHECK(c.n_cells == 90);
  CHECK(c.cfl == doctest::Approx(0.3));
  CHECK(c.recon == ReconMethod::WenoQuadratic);
  CHECK(c.margin_order == 1);
  CHECK(c.mu == doctest::Approx(0.02));

  CHECK_THROWS_AS(set_config_key(c, "nonsense", "1"), std::invalid_argument);
  CHECK_THROWS_AS(set_config_key(c, "recon", "upwind"), std::invalid_argument);

  SUBCASE("validation catches bad settings") {
    c.cfl = 0.5;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.cfl = 0.4;
    c.checkpoints = {2.0, 1.0};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }
}

TEST_CASE("config file parsing") {
  const std::string path = "test_config_tmp.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "experiment = similarity\n"
        << "scheme = lagrangian\n"
        << "n = 16\n"
        << "dt = 1e-3   # trailing comment\n"
        << "checkpoints = 0, 2, 4, 6\n";
  }
  const ExperimentConfig c = parse_config_file(path);
  CHECK(c.experiment == ExperimentKind::Similarity);
  CHECK(c.scheme == SchemeKind::Lagrangian);
  CHECK(c.n_cells == 16);
  CHECK(c.fixed_dt == doctest::Approx(1e-3));
  CHECK(c.checkpoints == std::vector<double>{0.0, 2.0, 4.0, 6.0});
  std::filesystem::remove(path);

  CHECK_THROWS_AS(parse_config_file("does_not_exist.cfg"), std::invalid_argument);
}

TEST_CASE("travelling-shock run produces a clean shock profile") {
  ExperimentConfig c = default_config(ExperimentKind::TravellingShock,
                                      SchemeKind::Noc);
  c.n_cells = 90;
  c.checkpoints = {0.0, 3.0};
  const RunReport report = run(c);
  REQUIRE_FALSE(report.failed);
  REQUIRE(report.checkpoints.size() == 2);
  const CheckpointData& cp = report.checkpoints.back();
  CHECK(cp.has_error);
  // Shock near 24 - 3 * 0.5074.
  const double xs = locate_shock(cp.x, cp.h);
  CHECK(xs == doctest::Approx(24.0 - 3.0 * 0.50741586).epsilon(0.5));
}

TEST_CASE("identical configurations give bit-identical reports") {
  ExperimentConfig c = default_config(ExperimentKind::Similarity,
                                      SchemeKind::NocFrontTracking);
  c.n_cells = 90;
  c.checkpoints = {0.0, 1.0};
  const RunReport a = run(c);
  const RunReport b = run(c);
  REQUIRE_FALSE(a.failed);
  REQUIRE(a.checkpoints.size() == b.checkpoints.size());
  for (std::size_t i = 0; i < a.checkpoints.size(); ++i) {
    REQUIRE(a.checkpoints[i].h.size() == b.checkpoints[i].h.size());
    for (std::size_t j = 0; j < a.checkpoints[i].h.size(); ++j) {
      CHECK(a.checkpoints[i].h[j] == b.checkpoints[i].h[j]);
      CHECK(a.checkpoints[i].m[j] == b.checkpoints[i].m[j]);
    }
  }
  REQUIRE(a.mass_trace.size() == b.mass_trace.size());
  for (std::size_t i = 0; i < a.mass_trace.size(); ++i)
    CHECK(a.mass_trace[i][1] == b.mass_trace[i][1]);
}

TEST_CASE("mass drift of the tracked similarity run stays below 0.5%") {
  ExperimentConfig c = default_config(ExperimentKind::Similarity,
                                      SchemeKind::NocFrontTracking);
  c.n_cells = 90;
  c.cfl = 0.4;
  c.checkpoints = {0.0, 8.0};
  const RunReport report = run(c);
  REQUIRE_FALSE(report.failed);
  const double m0 = report.mass_trace.front()[1];
  for (const auto& rec : report.mass_trace)
    CHECK(std::abs(rec[1] - m0) / m0 < 5e-3);
}

TEST_CASE("csv outputs are written with full precision") {
  namespace fs = std::filesystem;
  ExperimentConfig c = default_config(ExperimentKind::Similarity,
                                      SchemeKind::Lagrangian);
  c.n_cells = 8;
  c.checkpoints = {0.0, 0.5};
  const RunReport report = run(c);
  REQUIRE_FALSE(report.failed);

  const std::string dir = "test_csv_tmp";
  write_csv_outputs(report, dir);
  CHECK(fs::exists(fs::path(dir) / "profile_t0000.csv"));
  CHECK(fs::exists(fs::path(dir) / "profile_t0050.csv"));
  CHECK(fs::exists(fs::path(dir) / "margins.csv"));
  CHECK(fs::exists(fs::path(dir) / "mass.csv"));
  CHECK(fs::exists(fs::path(dir) / "report.csv"));

  std::ifstream in(fs::path(dir) / "profile_t0050.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,h,u,m");
  std::string first;
  std::getline(in, first);
  // 17 significant digits: expect a mantissa far longer than default printing.
  std::stringstream ss(first);
  std::string tok;
  std::getline(ss, tok, ',');
  double parsed = std::stod(tok);
  CHECK(parsed == doctest::Approx(report.checkpoints[1].x[0]).epsilon(1e-16));
  fs::remove_all(dir);
}

TEST_CASE("runout diagnostics on a synthetic report") {
  RunReport report;
  // Three checkpoints: no shock, then a shock marching upslope.
  auto make_cp = [&](double t, double xs) {
    CheckpointData cp;
    cp.t = t;
    const int n = 120;
    for (int j = 0; j < n; ++j) {
      const double x = (j + 0.5) * 0.3;
      cp.x.push_back(x);
      double h = 0.5;
      if (xs > 0.0) h = x < xs ? 0.4 : 1.1;
      h *= 1.0 + 0.02 * std::sin(0.7 * j);  // background texture
      cp.h.push_back(h);
      cp.u.push_back(0.0);
      cp.m.push_back(0.0);
    }
    report.checkpoints.push_back(cp);
  };
  make_cp(0.0, -1.0);
  make_cp(3.0, -1.0);
  make_cp(6.0, 30.0);
  make_cp(9.0, 28.0);
  make_cp(12.0, 26.5);
  report.margin_trace.push_back({9.0, 1.0, 33.0});
  report.margin_trace.push_back({12.0, 1.0, 33.05});

  const RunoutFlags flags = runout_diagnostics(report);
  REQUIRE(flags.shock_formed_at.has_value());
  CHECK(*flags.shock_formed_at == doctest::Approx(6.0));
  CHECK(flags.upslope_motion);
  CHECK(flags.final_front_at_rest);
}
