#include <doctest.h>

#include <cmath>

#include "ggplab/su2.hpp"

using namespace ggplab;
using namespace ggplab::su2;

namespace {

SymbolSample gaussian(double amplitude, double sigma, const bch::Coords& center) {
  SymbolSample s;
  s.center = center;
  s.support_radius = 5.0 * sigma;
  bch::Coords c = center;
  s.value_fn = [amplitude, sigma, c](const bch::Coords& xi) {
    return Complex(amplitude * std::exp(-(xi - c).squaredNorm() / (2 * sigma * sigma)), 0);
  };
  return s;
}

}  // namespace

TEST_CASE("spin representation brackets and unitarity") {
  for (int k : {1, 2, 5}) {
    Spin s = Spin::make(k);
    CMatrix lhs =
        s.pi(Vec3::UnitX()) * s.pi(Vec3::UnitY()) - s.pi(Vec3::UnitY()) * s.pi(Vec3::UnitX());
    CMatrix rhs = -2.0 * s.pi(Vec3::UnitZ());  // structure constants -2 eps
    CHECK((lhs - rhs).norm() <= 1e-10 * rhs.norm());
    Vec3 x(0.3, -0.7, 0.2);
    CMatrix u = s.exp_pi(x);
    CHECK((u * u.adjoint() - CMatrix::Identity(k + 1, k + 1)).norm() <= 1e-10);
    CHECK(u.trace().real() == doctest::Approx(weyl_character(k, x.norm())).epsilon(1e-10));
    CHECK(std::abs(u.trace().imag()) <= 1e-10);
  }
}

TEST_CASE("weyl_character values") {
  CHECK(weyl_character(0, 0.7) == 1.0);
  CHECK(weyl_character(3, 1e-9) == doctest::Approx(4.0));
  CHECK(weyl_character(1, 0.3) == doctest::Approx(std::sin(0.6) / std::sin(0.3)).epsilon(1e-14));
}

TEST_CASE("jac_sqrt closed form and finite-difference oracle") {
  CHECK(jac_sqrt(Vec3::Zero()) == 1.0);
  double hp = std::acos(-1.0) / 2;
  CHECK(jac_sqrt(Vec3(0, 0, hp)) == doctest::Approx(2 / std::acos(-1.0)).epsilon(1e-12));
  // columns of the exponential differential: log(exp(-X) exp(X + eps E_j)) / eps
  auto lie = bch::LieAlgebraBasis::su2();
  Vec3 x(0.21, -0.35, 0.4);
  Eigen::Vector3cd xc(x(0), x(1), x(2));
  CMatrix mx = lie.element(xc);
  Eigen::Matrix3d m;
  double eps = 1e-6;
  for (int j = 0; j < 3; ++j) {
    Eigen::Vector3cd pert = xc;
    pert(j) += eps;
    CMatrix lg = bch::bch_remainder(CMatrix(-mx), lie.element(pert));
    lg += eps * lie.basis[j];  // log = remainder + (-x) + (x + eps e_j)
    Eigen::Vector3cd col = lie.coordinates(lg) / eps;
    for (int i = 0; i < 3; ++i) m(i, j) = col(i).real();
  }
  double fd = std::sqrt(std::abs(m.determinant()));
  CHECK(fd == doctest::Approx(jac_sqrt(x)).epsilon(1e-5));
}

TEST_CASE("orbit integral calibration and quadrature") {
  OrbitCalibration cal = calibrate_orbits();
  CHECK(cal.shift == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(cal.calibration_error <= 1e-9);
  for (int k : {0, 1, 4}) {
    OrbitSphere orbit = orbit_for(k, cal);
    Complex at0 = orbit_integral(orbit, Vec3::Zero(), 64);
    CHECK(at0.real() == doctest::Approx(k + 1.0).epsilon(1e-10));
    Vec3 x(0.2, 0.5, -0.3);
    Complex q1 = orbit_integral(orbit, x, 64);
    Complex q2 = orbit_integral(orbit, x, 128);
    CHECK(std::abs(q1 - q2) <= 1e-12 * (1 + std::abs(q1)));
    CHECK(std::abs(q1.imag()) <= 1e-12);
    double theta = x.norm(), r = orbit.radius;
    double closed = orbit.kappa * 4 * std::acos(-1.0) * r * std::sin(theta * r) / theta;
    CHECK(q1.real() == doctest::Approx(closed).epsilon(1e-10));
  }
}

TEST_CASE("kirillov identity across k") {
  OrbitCalibration cal = calibrate_orbits();
  std::vector<double> grid;
  for (int i = 0; i < 30; ++i) grid.push_back(0.05 + i * (1.45 / 29));
  for (int k = 0; k <= 10; ++k) {
    auto rep = kirillov_check(k, grid, cal);
    CHECK(rep.pass);
    CHECK(rep.sup_rel_err <= 1e-6);
  }
  double lhs = weyl_character(1, 0.3) * jac_sqrt(Vec3(0, 0, 0.3));
  CHECK(lhs == doctest::Approx(std::sin(0.6) / 0.3).epsilon(1e-12));
}

TEST_CASE("cutoff profile") {
  CutoffFn chi{0.2, 0.3};
  CHECK(chi(0.1) == 1.0);
  CHECK(chi(0.35) == 0.0);
  CHECK(chi(0.25) == doctest::Approx(chi(-0.25)));  // even
  CHECK(chi(0.25) > 0);
  CHECK(chi(0.25) < 1);
}

TEST_CASE("opp of a flat symbol is close to a scalar") {
  Spin spin = Spin::make(2);
  CutoffFn chi{0.2, 0.3};
  OppGrid grid;
  grid.xi_points = 64;
  grid.x_points = 24;
  SymbolSample a = gaussian(3.0, 16.0, bch::Coords::Zero(3));
  CMatrix op = opp_h(a, spin, 0.5, chi, grid);
  CHECK((op - 3.0 * CMatrix::Identity(3, 3)).norm() <= 3e-2);
}

TEST_CASE("opp of a linear coordinate is h times the derived representation") {
  Spin spin = Spin::make(2);
  CutoffFn chi{0.2, 0.3};
  OppGrid grid;
  grid.xi_points = 64;
  grid.x_points = 24;
  double h = 0.5;
  SymbolSample a;
  a.support_radius = 80.0;
  a.center = bch::Coords::Zero(3);
  a.value_fn = [](const bch::Coords& xi) {
    double env = std::exp(-xi.squaredNorm() / (2 * 16.0 * 16.0));
    return Complex(xi(2) * env, 0);
  };
  CMatrix op = opp_h(a, spin, h, chi, grid);
  CMatrix expect = 2.0 * h * spin.j3;  // equals -i h pi(e_3)
  CHECK((op - expect).norm() <= 1e-2 * expect.norm());
  CHECK((op - op.adjoint()).norm() <= 1e-8 * (1 + op.norm()));  // real symbol
}

TEST_CASE("opp_h rejects an under-localized transform") {
  // a narrow symbol at moderate h spreads past the cutoff ball
  Spin spin = Spin::make(2);
  CutoffFn chi{0.2, 0.3};
  OppGrid grid;
  grid.xi_points = 64;
  grid.x_points = 16;
  SymbolSample a = gaussian(1.0, 0.4, bch::Coords::Zero(3));
  CHECK_THROWS(opp_h(a, spin, 0.5, chi, grid));
}

TEST_CASE("rescaled orbit mass") {
  OrbitCalibration cal = calibrate_orbits();
  SymbolSample one;
  one.support_radius = 1e9;
  one.center = bch::Coords::Zero(3);
  one.value_fn = [](const bch::Coords&) { return Complex(1, 0); };
  Complex total = orbit_integral_of_symbol(one, 3, 0.25, cal);
  CHECK(total.real() == doctest::Approx(0.25 * 4).epsilon(1e-12));
}

TEST_CASE("trace asymptotics smoke") {
  OrbitCalibration cal = calibrate_orbits();
  CutoffFn chi{0.6, 0.9};
  auto profile = [](double r) { return std::exp(-(r - 1.0) * (r - 1.0) / (2 * 0.7 * 0.7)); };
  auto rep = trace_asymptotics_check(4, {0.2, 0.1, 0.05}, profile, 5.5, chi, cal);
  REQUIRE(rep.errors.size() == 3);
  CHECK(rep.decreasing);
  CHECK(rep.worst_ratio <= 0.75);
}

TEST_CASE("composition smoke") {
  OrbitCalibration cal = calibrate_orbits();
  CutoffFn chi{0.9, 1.35};
  OppGrid grid;
  grid.xi_points = 128;
  grid.x_points = 48;
  bch::Coords ca(3), cb(3);
  ca << 0.25, 0.0, 0.1;
  cb << -0.2, 0.15, 0.0;
  SymbolSample a = gaussian(1.0, 1.6, ca);
  SymbolSample b = gaussian(1.0, 1.7, cb);
  auto rep = composition_check(3, 0.25, a, b, chi, grid, Complex(0.5, 0), cal);
  CHECK(rep.e1_h < rep.e0_h);
  CHECK(rep.e1_h2 < rep.e0_h2);
  CHECK(rep.pass);
}

TEST_CASE("disjoint supports give a negligible product") {
  CutoffFn chi{0.9, 1.35};
  OppGrid grid;
  grid.xi_points = 128;
  grid.x_points = 64;
  bch::Coords ca(3), cb(3);
  ca << 4.5, 0, 0;
  cb << -4.5, 0, 0;
  SymbolSample a = gaussian(1.0, 1.2, ca);
  SymbolSample b = gaussian(1.0, 1.2, cb);
  Spin spin = Spin::make(3);
  CMatrix oa = opp_h(a, spin, 0.15, chi, grid);
  CMatrix ob = opp_h(b, spin, 0.15, chi, grid);
  CHECK((oa * ob).jacobiSvd().singularValues()(0) <= 1e-3);
}
