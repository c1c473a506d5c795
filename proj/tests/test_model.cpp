#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sh1d/model.hpp"

using namespace sh1d;

namespace {
constexpr double deg = M_PI / 180.0;
const MaterialParams chute40{40.0 * deg, 40.0 * deg, 1.0, 0.0};
}  // namespace

TEST_CASE("earth pressure coefficient at phi = delta = 40 deg") {
  const double k_act = earth_pressure_coefficient(chute40, PressureBranch::Active);
  const double k_pass = earth_pressure_coefficient(chute40, PressureBranch::Passive);
  CHECK(k_act == doctest::Approx(2.4081763820836947).epsilon(1e-12));
  CHECK(k_act == doctest::Approx(k_pass).epsilon(1e-15));  // root vanishes
  const double beta = pressure_factor(chute40, 40.0 * deg, PressureBranch::Active);
  CHECK(beta == doctest::Approx(1.8447701355455792).epsilon(1e-12));
  CHECK(beta == doctest::Approx(1.84477).epsilon(1e-5));
}

TEST_CASE("earth pressure branches separate for phi != delta") {
  const MaterialParams p{38.0 * deg, 35.0 * deg, 1.0, 0.0};
  const double k_act = earth_pressure_coefficient(p, PressureBranch::Active);
  const double k_pass = earth_pressure_coefficient(p, PressureBranch::Passive);
  CHECK(k_act < k_pass);
  CHECK(std::isfinite(k_act));
  CHECK(std::isfinite(k_pass));
  // Product identity: K_act K_pass = 1 + 4 tan^2(delta) sec^2(phi).
  const double expect = 1.0 + 4.0 * std::pow(std::tan(p.delta), 2) /
                                  std::pow(std::cos(p.phi), 2);
  CHECK(k_act * k_pass == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("earth pressure coefficient rejects cos^2(phi) > cos^2(delta)") {
  const MaterialParams bad{30.0 * deg, 38.0 * deg, 1.0, 0.0};
  CHECK_THROWS_AS(earth_pressure_coefficient(bad, PressureBranch::Active),
                  std::domain_error);
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("branch selection with active tie at zero") {
  CHECK(select_branch(0.5) == PressureBranch::Active);
  CHECK(select_branch(-0.5) == PressureBranch::Passive);
  CHECK(select_branch(0.0) == PressureBranch::Active);
}

TEST_CASE("flux values") {
  const double beta = pressure_factor(chute40, 40.0 * deg, PressureBranch::Active);
  const auto f = flux({0.9, 0.09}, beta);
  CHECK(f[0] == doctest::Approx(0.09).epsilon(1e-15));
  CHECK(f[1] == doctest::Approx(0.75613190489595957).epsilon(1e-12));

  const auto vac = flux({0.0, 0.0}, beta);
  CHECK(vac[0] == 0.0);
  CHECK(vac[1] == 0.0);

  const auto rest = flux({0.7, 0.0}, 2.0);
  CHECK(rest[0] == 0.0);
  CHECK(rest[1] == doctest::Approx(0.49).epsilon(1e-15));
}

TEST_CASE("source term") {
  const Track track = Track::inclined_plane(40.0 * deg);

  SUBCASE("non-accelerative chute: phi = delta = zeta") {
    const auto s = source({0.5, 0.5 * 1.2}, 3.0, chute40, track);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("vacuum gives exact zero") {
    const auto s = source({0.0, 0.0}, 3.0, chute40, track);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 0.0);
  }
  SUBCASE("zeta = 40, delta = 30 deg") {
    const MaterialParams p{30.0 * deg, 30.0 * deg, 1.0, 0.0};
    const double sx = driving_acceleration(1.0, 0.0, p, track);
    CHECK(sx == doctest::Approx(0.20051164424058040).epsilon(1e-12));
  }
  SUBCASE("resting state is not driven by friction") {
    const MaterialParams p{30.0 * deg, 30.0 * deg, 1.0, 0.0};
    // At rest the Coulomb term drops out and only gravity remains.
    CHECK(driving_acceleration(0.0, 0.0, p, track) ==
          doctest::Approx(std::sin(40.0 * deg)).epsilon(1e-15));
  }
}

TEST_CASE("jacobian eigenvalues are u -/+ sqrt(beta h)") {
  SUBCASE("unit rest state") {
    const auto a = jacobian({1.0, 0.0}, 1.0);
    CHECK(a[0][0] == 0.0);
    CHECK(a[0][1] == 1.0);
    CHECK(a[1][0] == doctest::Approx(1.0));
    CHECK(a[1][1] == doctest::Approx(0.0));
  }
  SUBCASE("downslope state from the shock experiment") {
    const double beta = pressure_factor(chute40, 40.0 * deg, PressureBranch::Active);
    const Conserved w{0.9, 0.09};
    const auto a = jacobian(w, beta);
    const double tr = a[0][0] + a[1][1];
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    const double lam_minus = tr / 2.0 - disc;
    const double lam_plus = tr / 2.0 + disc;
    CHECK(lam_minus == doctest::Approx(0.1 - 1.2885236210450398).epsilon(1e-12));
    CHECK(lam_plus == doctest::Approx(0.1 + 1.2885236210450398).epsilon(1e-12));
  }
  SUBCASE("characteristic identity on random states") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> uh(0.05, 4.0), uu(-3.0, 3.0),
        ub(0.3, 3.0);
    for (int i = 0; i < 1000; ++i) {
      const double h = uh(rng), u = uu(rng), beta = ub(rng);
      const auto a = jacobian({h, h * u}, beta);
      const double c = std::sqrt(beta * h);
      for (double lam : {u - c, u + c}) {
        const double det = (a[0][0] - lam) * (a[1][1] - lam) - a[0][1] * a[1][0];
        CHECK(std::abs(det) < 1e-12 * std::max(1.0, lam * lam));
      }
    }
  }
  SUBCASE("dry state throws") {
    CHECK_THROWS_AS(jacobian({0.0, 0.0}, 1.0), SolverError);
  }
}

TEST_CASE("max wave speed") {
  const double beta = pressure_factor(chute40, 40.0 * deg, PressureBranch::Active);

  SUBCASE("single cell") {
    std::vector<Conserved> w{{0.9, 0.09}};
    std::vector<double> b{beta};
    CHECK(max_wave_speed(w, b) ==
          doctest::Approx(1.3885236210450398).epsilon(1e-12));
  }
  SUBCASE("all dry") {
    std::vector<Conserved> w{{0.0, 0.0}, {0.0, 0.0}};
    std::vector<double> b{beta, beta};
    CHECK(max_wave_speed(w, b) == 0.0);
  }
  SUBCASE("two cells from the shock initial data") {
    std::vector<Conserved> w{{0.3, 0.3 * 1.3148317202133238}, {0.9, 0.09}};
    std::vector<double> b{beta, beta};
    CHECK(max_wave_speed(w, b) ==
          doctest::Approx(2.0587611796808688).epsilon(1e-12));
  }
}

TEST_CASE("material parameter validation") {
  CHECK_THROWS_AS((MaterialParams{0.5, 0.5, 1.5, 0.0}).validate(),
                  std::domain_error);
  CHECK_THROWS_AS((MaterialParams{0.5, 0.5, 1.0, 0.5}).validate(),
                  std::domain_error);
  CHECK_NOTHROW(chute40.validate());
}
