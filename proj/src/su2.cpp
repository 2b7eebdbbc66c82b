#include "ggplab/su2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ggplab/parallel.hpp"

namespace ggplab::su2 {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1, p1 = x;
    for (int j = 2; j <= n; ++j) {
      double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1);
    nodes[i] = x;
    weights[i] = 2.0 / ((1 - x * x) * dp * dp);
  }
}

}  // namespace

Spin Spin::make(int k) {
  Spin s;
  s.k = k;
  int dim = k + 1;
  double j = k / 2.0;
  CMatrix jp = CMatrix::Zero(dim, dim);  // raising operator; row r holds m = j - r
  for (int r = 0; r + 1 < dim; ++r) {
    double m = j - (r + 1);
    jp(r, r + 1) = std::sqrt((j - m) * (j + m + 1));
  }
  CMatrix jm = jp.adjoint();
  s.j1 = 0.5 * (jp + jm);
  s.j2 = Complex(0, -0.5) * (jp - jm);
  s.j3 = CMatrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) s.j3(r, r) = j - r;
  return s;
}

CMatrix Spin::pi(const Vec3& x) const {
  return Complex(0, 2) * (x(0) * j1 + x(1) * j2 + x(2) * j3);
}

CMatrix Spin::exp_pi(const Vec3& x) const {
  CMatrix h = x(0) * j1 + x(1) * j2 + x(2) * j3;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  Eigen::VectorXcd phases(k + 1);
  for (int i = 0; i <= k; ++i) phases(i) = std::polar(1.0, 2.0 * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double weyl_character(int k, double theta) {
  double s = std::sin(theta);
  if (std::abs(s) < 1e-14) return k + 1.0;
  return std::sin((k + 1) * theta) / s;
}

double jac_sqrt(const Vec3& x) {
  double theta = x.norm();
  if (theta < 1e-14) return 1.0;
  return std::sin(theta) / theta;
}

Complex orbit_integral(const OrbitSphere& orbit, const Vec3& x, int quad_order) {
  double theta = x.norm();
  double r = orbit.radius;
  if (theta < 1e-14) return Complex(orbit.kappa * 4 * kPi * r * r, 0);
  std::vector<double> nodes, weights;
  gauss_legendre(quad_order, nodes, weights);
  Complex acc(0);
  for (int i = 0; i < quad_order; ++i) acc += weights[i] * std::polar(1.0, theta * r * nodes[i]);
  return orbit.kappa * 2 * kPi * r * r * acc;
}

namespace {

double calibration_mismatch(double shift, int quad_order) {
  OrbitSphere orbit;
  orbit.radius = 0.5 + shift;  // k = 0
  orbit.kappa = 1.0 / (4 * kPi * orbit.radius * orbit.radius);
  double worst = 0;
  for (double theta = 0.05; theta <= 1.5; theta += 0.05) {
    double lhs = weyl_character(0, theta) * std::sin(theta) / theta;
    double rhs = orbit_integral(orbit, Vec3(0, 0, theta), quad_order).real();
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace

OrbitCalibration calibrate_orbits(int quad_order) {
  // golden-section minimization of the k = 0 mismatch over the radius shift
  double lo = 0.0, hi = 1.0;
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
  double fa = calibration_mismatch(a, quad_order), fb = calibration_mismatch(b, quad_order);
  for (int it = 0; it < 120; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - gr * (hi - lo);
      fa = calibration_mismatch(a, quad_order);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + gr * (hi - lo);
      fb = calibration_mismatch(b, quad_order);
    }
  }
  OrbitCalibration cal;
  cal.shift = (lo + hi) / 2;
  cal.calibration_error = calibration_mismatch(cal.shift, quad_order);
  return cal;
}

OrbitSphere orbit_for(int k, const OrbitCalibration& cal) {
  OrbitSphere orbit;
  orbit.radius = k + 0.5 + cal.shift;
  orbit.kappa = (k + 1.0) / (4 * kPi * orbit.radius * orbit.radius);
  return orbit;
}

KirillovReport kirillov_check(int k, const std::vector<double>& theta_grid,
                              const OrbitCalibration& cal, int quad_order, double tol) {
  KirillovReport rep;
  rep.k = k;
  OrbitSphere orbit = orbit_for(k, cal);
  double scale = 0;
  for (double theta : theta_grid) {
    double lhs = weyl_character(k, theta) * jac_sqrt(Vec3(0, 0, theta));
    Complex rhs = orbit_integral(orbit, Vec3(0, 0, theta), quad_order);
    rep.max_abs_err = std::max(rep.max_abs_err, std::abs(lhs - rhs.real()));
    rep.max_abs_err = std::max(rep.max_abs_err, std::abs(rhs.imag()));
    scale = std::max(scale, std::abs(lhs));
  }
  rep.sup_rel_err = rep.max_abs_err / scale;
  rep.pass = rep.sup_rel_err <= tol;
  return rep;
}

double CutoffFn::operator()(double r) const {
  r = std::abs(r);
  if (r <= inner) return 1.0;
  if (r >= outer) return 0.0;
  double t = (r - inner) / (outer - inner);
  auto phi = [](double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; };
  return phi(1 - t) / (phi(1 - t) + phi(t));
}

namespace {

struct XGrid {
  std::vector<double> nodes, weights;  // per axis, on [-outer, outer]
};

XGrid make_xgrid(double outer, int points) {
  XGrid g;
  gauss_legendre(points, g.nodes, g.weights);
  for (int i = 0; i < points; ++i) {
    g.nodes[i] *= outer;
    g.weights[i] *= outer;
  }
  return g;
}

// W[x] = (2 pi)^-3 sum_xi a(h xi) e^{-i x.xi} dxi^3 on the tensor x-grid.
std::vector<Complex> symbol_transform(const SymbolSample& a, double h, const XGrid& xg, int nxi) {
  double extent = (a.support_radius + a.center.norm()) / h * 1.000001;
  double dxi = 2 * extent / nxi;
  std::vector<double> xi(nxi);
  for (int i = 0; i < nxi; ++i) xi[i] = -extent + (i + 0.5) * dxi;

  int nx = static_cast<int>(xg.nodes.size());
  std::vector<std::vector<Complex>> kernel(3, std::vector<Complex>(static_cast<size_t>(nxi) * nx));
  for (int axis = 0; axis < 3; ++axis)
    for (int kI = 0; kI < nxi; ++kI)
      for (int xI = 0; xI < nx; ++xI)
        kernel[axis][static_cast<size_t>(kI) * nx + xI] = std::polar(1.0, -xg.nodes[xI] * xi[kI]);

  // per-slab partial transforms reduced in slab order, so the result does
  // not depend on the worker count
  size_t plane = static_cast<size_t>(nx) * nx;
  std::vector<std::vector<Complex>> slab_out(nxi);
  parallel_for(nxi, [&](std::size_t k1) {
    std::vector<Complex> slab(static_cast<size_t>(nxi) * nxi);
    bch::Coords p(3);
    bool any = false;
    for (int k2 = 0; k2 < nxi; ++k2)
      for (int k3 = 0; k3 < nxi; ++k3) {
        p << h * xi[k1], h * xi[k2], h * xi[k3];
        Complex v = a(p);
        slab[static_cast<size_t>(k2) * nxi + k3] = v;
        any |= (v != Complex(0));
      }
    if (!any) return;
    std::vector<Complex> t1(static_cast<size_t>(nxi) * nx, Complex(0));
    for (int k2 = 0; k2 < nxi; ++k2)
      for (int k3 = 0; k3 < nxi; ++k3) {
        Complex v = slab[static_cast<size_t>(k2) * nxi + k3];
        if (v == Complex(0)) continue;
        const Complex* kr = &kernel[2][static_cast<size_t>(k3) * nx];
        Complex* dst = &t1[static_cast<size_t>(k2) * nx];
        for (int x3 = 0; x3 < nx; ++x3) dst[x3] += v * kr[x3];
      }
    std::vector<Complex> t2(plane, Complex(0));
    for (int k2 = 0; k2 < nxi; ++k2)
      for (int x2 = 0; x2 < nx; ++x2) {
        Complex f = kernel[1][static_cast<size_t>(k2) * nx + x2];
        const Complex* src = &t1[static_cast<size_t>(k2) * nx];
        Complex* dst = &t2[static_cast<size_t>(x2) * nx];
        for (int x3 = 0; x3 < nx; ++x3) dst[x3] += f * src[x3];
      }
    slab_out[k1] = std::move(t2);
  });
  size_t wsize = static_cast<size_t>(nx) * plane;
  std::vector<Complex> w(wsize, Complex(0));
  for (int k1 = 0; k1 < nxi; ++k1) {
    if (slab_out[k1].empty()) continue;
    const auto& t2 = slab_out[k1];
    for (int x1 = 0; x1 < nx; ++x1) {
      Complex f = kernel[0][static_cast<size_t>(k1) * nx + x1];
      Complex* dst = &w[static_cast<size_t>(x1) * plane];
      for (size_t i = 0; i < plane; ++i) dst[i] += f * t2[i];
    }
  }
  double measure = dxi * dxi * dxi / std::pow(2 * kPi, 3);
  for (auto& v : w) v *= measure;
  return w;
}

}  // namespace

CMatrix opp_h(const SymbolSample& a, const Spin& rep, double h, const CutoffFn& chi,
              const OppGrid& grid) {
  XGrid xg = make_xgrid(chi.outer, grid.x_points);
  std::vector<Complex> w = symbol_transform(a, h, xg, grid.xi_points);
  int nx = grid.x_points;

  // transform mass inside vs outside the cutoff ball, on the same node set
  double inside = 0, outside = 0;
  for (int x1 = 0; x1 < nx; ++x1)
    for (int x2 = 0; x2 < nx; ++x2)
      for (int x3 = 0; x3 < nx; ++x3) {
        double wt = xg.weights[x1] * xg.weights[x2] * xg.weights[x3];
        Vec3 x(xg.nodes[x1], xg.nodes[x2], xg.nodes[x3]);
        double m = wt * std::abs(w[(static_cast<size_t>(x1) * nx + x2) * nx + x3]);
        if (x.norm() >= chi.outer)
          outside += m;
        else
          inside += m;
      }
  if (outside > grid.tail_tol * (inside + outside))
    throw std::runtime_error("opp_h: transform tail outside the cutoff exceeds tolerance");

  CMatrix op = CMatrix::Zero(rep.k + 1, rep.k + 1);
  for (int x1 = 0; x1 < nx; ++x1)
    for (int x2 = 0; x2 < nx; ++x2)
      for (int x3 = 0; x3 < nx; ++x3) {
        Vec3 x(xg.nodes[x1], xg.nodes[x2], xg.nodes[x3]);
        double c = chi(x.norm());
        if (c == 0.0) continue;
        Complex val = w[(static_cast<size_t>(x1) * nx + x2) * nx + x3];
        if (val == Complex(0)) continue;
        double wt = xg.weights[x1] * xg.weights[x2] * xg.weights[x3];
        op += (wt * c * val) * rep.exp_pi(x);
      }
  return op;
}

double opp_trace_radial(const std::function<double(double)>& profile, double support,
                        const Spin& rep, double h, const CutoffFn& chi, int rho_points,
                        int r_points) {
  std::vector<double> rn, rw, pn, pw;
  gauss_legendre(r_points, rn, rw);
  gauss_legendre(rho_points, pn, pw);
  double rho_max = support / h;
  // A(r) = (2 pi^2 r)^-1 int_0^rho_max profile(h rho) rho sin(rho r) d rho
  auto radial_transform = [&](double r) {
    double acc = 0;
    for (int i = 0; i < rho_points; ++i) {
      double rho = 0.5 * rho_max * (pn[i] + 1);
      acc += 0.5 * rho_max * pw[i] * profile(h * rho) * rho * std::sin(rho * r);
    }
    return acc / (2 * kPi * kPi * r);
  };
  double tr = 0;
  for (int i = 0; i < r_points; ++i) {
    double r = 0.5 * chi.outer * (rn[i] + 1);
    double wt = 0.5 * chi.outer * rw[i];
    double c = chi(r);
    if (c == 0) continue;
    tr += wt * 4 * kPi * r * r * c * radial_transform(r) * weyl_character(rep.k, r);
  }
  return tr;
}

Complex orbit_integral_of_symbol(const SymbolSample& a, int k, double h,
                                 const OrbitCalibration& cal, int polar_points,
                                 int azimuth_points) {
  OrbitSphere orbit = orbit_for(k, cal);
  double r = h * orbit.radius;
  std::vector<double> un, uw;
  gauss_legendre(polar_points, un, uw);
  Complex avg(0);
  bch::Coords xi(3);
  for (int i = 0; i < polar_points; ++i) {
    double u = un[i];
    double s = std::sqrt(std::max(0.0, 1 - u * u));
    Complex ring(0);
    for (int m = 0; m < azimuth_points; ++m) {
      double phi = 2 * kPi * m / azimuth_points;
      xi << r * s * std::cos(phi), r * s * std::sin(phi), r * u;
      ring += a(xi);
    }
    avg += uw[i] * ring / static_cast<double>(azimuth_points);
  }
  avg /= 2.0;                  // sphere average
  return h * (k + 1.0) * avg;  // rescaled-orbit mass times average
}

TraceAsymptoticsReport trace_asymptotics_check(int k0, const std::vector<double>& h_list,
                                               const std::function<double(double)>& profile,
                                               double support, const CutoffFn& chi,
                                               const OrbitCalibration& cal) {
  TraceAsymptoticsReport rep;
  double h0 = h_list.front();
  for (double h : h_list) {
    int k = static_cast<int>(std::lround((k0 + 1) * h0 / h)) - 1;
    Spin spin = Spin::make(k);
    double tr = opp_trace_radial(profile, support, spin, h, chi);
    SymbolSample a;
    a.value_fn = [&profile](const bch::Coords& xi) { return Complex(profile(xi.norm()), 0); };
    a.support_radius = support;
    a.center = bch::Coords::Zero(3);
    Complex orbit_side = orbit_integral_of_symbol(a, k, h, cal);
    rep.h_values.push_back(h);
    rep.k_values.push_back(k);
    rep.errors.push_back(std::abs(h * tr - orbit_side.real()));
  }
  rep.decreasing = true;
  rep.worst_ratio = 0;
  for (size_t i = 1; i < rep.errors.size(); ++i) {
    if (rep.errors[i] >= rep.errors[i - 1]) rep.decreasing = false;
    rep.worst_ratio = std::max(rep.worst_ratio, rep.errors[i] / rep.errors[i - 1]);
  }
  rep.pass = rep.decreasing && rep.worst_ratio <= 0.75;
  return rep;
}

CompositionReport composition_check(int k, double h, const SymbolSample& a, const SymbolSample& b,
                                    const CutoffFn& chi, const OppGrid& grid, Complex star1_c,
                                    const OrbitCalibration& cal) {
  (void)cal;
  auto lie = bch::LieAlgebraBasis::su2();
  auto product_symbol = [](const SymbolSample& f, const SymbolSample& g) {
    SymbolSample s;
    s.support_radius =
        std::min(f.support_radius + f.center.norm(), g.support_radius + g.center.norm());
    s.center = bch::Coords::Zero(3);
    s.value_fn = [f, g](const bch::Coords& xi) { return f(xi) * g(xi); };
    return s;
  };
  // first correction: the operator pairing here carries e^{i x.xi}, which
  // turns the real-pairing fit constant c into -i c
  auto star1_symbol = [&](const SymbolSample& f, const SymbolSample& g) {
    SymbolSample s;
    s.support_radius =
        std::min(f.support_radius + f.center.norm(), g.support_radius + g.center.norm());
    s.center = bch::Coords::Zero(3);
    Complex c = Complex(0, -1) * star1_c;
    s.value_fn = [f, g, c, lie](const bch::Coords& xi) {
      return c * bch::poisson_bracket(lie, f, g, xi, 1e-4);
    };
    return s;
  };

  auto errors_at = [&](int kk, double hh, double& e0, double& e1) {
    Spin spin = Spin::make(kk);
    CMatrix oa = opp_h(a, spin, hh, chi, grid);
    CMatrix ob = opp_h(b, spin, hh, chi, grid);
    CMatrix oab = opp_h(product_symbol(a, b), spin, hh, chi, grid);
    CMatrix os1 = opp_h(star1_symbol(a, b), spin, hh, chi, grid);
    CMatrix prod = oa * ob;
    e0 = (prod - oab).jacobiSvd().singularValues()(0);
    e1 = (prod - oab - hh * os1).jacobiSvd().singularValues()(0);
  };
  CompositionReport rep;
  errors_at(k, h, rep.e0_h, rep.e1_h);
  errors_at(2 * k + 1, h / 2, rep.e0_h2, rep.e1_h2);
  bool better_value = rep.e1_h < rep.e0_h && rep.e1_h2 < rep.e0_h2;
  bool better_decay = (rep.e1_h2 / rep.e1_h) < (rep.e0_h2 / rep.e0_h);
  rep.pass = better_value && better_decay;
  return rep;
}

}  // namespace ggplab::su2
