#include "ggplab/geom.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ggplab::geom {

FloatMatrix bracket_star(const FloatMatrix& x, const FloatMatrix& xi) { return x * xi - xi * x; }

Eigen::VectorXd vec(const FloatMatrix& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

FloatMatrix unvec(const Eigen::VectorXd& v, int rows, int cols) {
  return Eigen::Map<const FloatMatrix>(v.data(), rows, cols);
}

FloatMatrix commutator_map(const FloatMatrix& tau) {
  int n = static_cast<int>(tau.rows());
  FloatMatrix id = FloatMatrix::Identity(n, n);
  // column-major flattening: vec(X tau - tau X) = (tau^T (x) I - I (x) tau) vec(X)
  FloatMatrix c(n * n, n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k)
          c(j * n + i, l * n + k) = tau(l, j) * id(i, k) - id(l, j) * tau(i, k);
  return c;
}

FloatMatrix adjoint_map(const FloatMatrix& g) {
  int n = static_cast<int>(g.rows());
  FloatMatrix ginv = g.inverse();
  FloatMatrix ad(n * n, n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k)
          ad(j * n + i, l * n + k) = g(i, k) * ginv(l, j);
  return ad;
}

std::vector<FloatMatrix> centralizer(const FloatMatrix& tau, double tol) {
  int n = static_cast<int>(tau.rows());
  FloatMatrix c = commutator_map(tau);
  Eigen::JacobiSVD<FloatMatrix> svd(c, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = tol * sv(0);
  for (int i = 1; i < sv.size(); ++i) {
    double s = sv(i);
    if (s > cutoff / 10 && s < cutoff * 10)
      throw std::runtime_error("centralizer: singular value within a factor 10 of the rank cutoff");
  }
  std::vector<FloatMatrix> basis;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= cutoff) basis.push_back(unvec(svd.matrixV().col(i), n, n));
  return basis;
}

GeomContext GeomContext::build(const FloatMatrix& tau, double tol) {
  GeomContext ctx;
  ctx.n = static_cast<int>(tau.rows()) - 1;
  ctx.tau = tau;
  ctx.tol = tol;
  ctx.centralizer_basis = centralizer(tau, tol);

  int n = ctx.n;
  int dim = (n + 1) * (n + 1);
  FloatMatrix c = commutator_map(tau);
  Eigen::JacobiSVD<FloatMatrix> svd(c, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  double cutoff = tol * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  ctx.orbit_range = svd.matrixU().leftCols(rank);

  // brackets [y, tau] with y running over the block subalgebra
  FloatMatrix hb(dim, n * n);
  int col = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      FloatMatrix y = FloatMatrix::Zero(n + 1, n + 1);
      y(a, b) = 1.0;
      hb.col(col++) = vec(bracket_star(y, tau));
    }
  Eigen::JacobiSVD<FloatMatrix> hsvd(hb, Eigen::ComputeThinU);
  const auto& hsv = hsvd.singularValues();
  double hcut = tol * hsv(0);
  for (int i = 0; i < hsv.size(); ++i)
    if (hsv(i) > hcut) ctx.h_bracket_basis.push_back(unvec(hsvd.matrixU().col(i), n + 1, n + 1));
  return ctx;
}

std::pair<FloatMatrix, FloatMatrix> tau_coordinates(const GeomContext& ctx, const FloatMatrix& xi) {
  Eigen::VectorXd v = vec(xi);
  Eigen::VectorXd tangent = ctx.orbit_range * (ctx.orbit_range.transpose() * v);
  int m = ctx.n + 1;
  FloatMatrix xi_prime = unvec(tangent, m, m);
  return {xi_prime, xi - xi_prime};
}

FloatMatrix rho_tau(const GeomContext& ctx, const FloatMatrix& v, double* off_range) {
  auto [vp, vpp] = tau_coordinates(ctx, v);
  if (off_range) *off_range = vpp.norm();
  FloatMatrix out = vp;
  for (const auto& b : ctx.h_bracket_basis) out -= b * vec(b).dot(vec(vp));
  return out;
}

namespace {

double pnorm(const Eigen::VectorXd& v, double p) {
  if (p == 2.0) return v.norm();
  double s = 0;
  for (int i = 0; i < v.size(); ++i) s += std::pow(std::abs(v(i)), p);
  return std::pow(s, 1.0 / p);
}

double d_tilde(const FloatMatrix& g, double p) {
  int m = static_cast<int>(g.rows());
  Eigen::VectorXd ge = g.col(m - 1);  // g e, with e the last basis vector
  double pairing = ge(m - 1);         // <g e, e>; <e, e> = 1
  if (pairing == 0.0) return std::numeric_limits<double>::infinity();
  Eigen::VectorXd diff = ge / pairing;
  diff(m - 1) -= 1.0;
  return pnorm(diff, p);
}

}  // namespace

double d_H(const FloatMatrix& g, double norm_exponent) {
  double t = d_tilde(g, norm_exponent) + d_tilde(FloatMatrix(g.inverse()), norm_exponent);
  return std::min(1.0, t);
}

double dist_to_H_orbit(const GeomContext& ctx, const FloatMatrix& xi, int max_iters) {
  int n = ctx.n;
  int params = n * n;
  auto embed = [n](const Eigen::VectorXd& y) {
    FloatMatrix m = FloatMatrix::Zero(n + 1, n + 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m(a, b) = y(a * n + b);
    return m;
  };
  auto residual = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd {
    FloatMatrix ey = embed(y).exp();
    return vec(FloatMatrix(ey * ctx.tau * ey.inverse() - xi));
  };
  Eigen::VectorXd y = Eigen::VectorXd::Zero(params);
  Eigen::VectorXd r = residual(y);
  double cost = r.squaredNorm();
  double lambda = 1e-10;
  for (int it = 0;; ++it) {
    if (std::sqrt(cost) < 1e-14) break;
    if (it >= max_iters) throw std::runtime_error("dist_to_H_orbit: no convergence within max_iters");
    Eigen::MatrixXd jac(r.size(), params);
    double h = 1e-7;
    for (int k = 0; k < params; ++k) {
      Eigen::VectorXd yk = y;
      yk(k) += h;
      jac.col(k) = (residual(yk) - r) / h;
    }
    Eigen::VectorXd grad = jac.transpose() * r;
    if (grad.norm() < 1e-13 * (1 + std::sqrt(cost))) break;
    Eigen::MatrixXd jtj = jac.transpose() * jac;
    bool stepped = false;
    for (int attempt = 0; attempt < 30; ++attempt) {
      Eigen::MatrixXd damped = jtj + lambda * Eigen::MatrixXd::Identity(params, params);
      Eigen::VectorXd delta = damped.ldlt().solve(grad);
      Eigen::VectorXd ynew = y - delta;
      Eigen::VectorXd rnew = residual(ynew);
      double cnew = rnew.squaredNorm();
      if (cnew < cost) {
        y = ynew;
        r = rnew;
        cost = cnew;
        lambda = std::max(lambda * 0.3, 1e-12);
        stepped = true;
        break;
      }
      lambda *= 10;
    }
    if (!stepped) break;  // stationary to machine precision
  }
  return std::sqrt(cost);
}

FloatMatrix random_gl_matrix(int size, Rng& rng) {
  FloatMatrix m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = rng.normal();
  return m;
}

RatioStats d_H_vs_adjoint_check(int n, int samples, std::uint64_t seed) {
  RatioStats stats;
  stats.min_ratio = std::numeric_limits<double>::infinity();
  int m = n + 1;
  for (int t = 0; t < samples; ++t) {
    Rng rng(seed, t);
    FloatMatrix x = random_gl_matrix(m, rng);
    x *= rng.uniform(0.01, 0.1) / x.norm();
    if (t % 5 == 0) {  // subgroup case: zero last row and column, expect ratio 0
      for (int i = 0; i < m; ++i) x(m - 1, i) = x(i, m - 1) = 0;
    }
    FloatMatrix g = x.exp();
    double den =
        (adjoint_map(g) - FloatMatrix::Identity(m * m, m * m)).jacobiSvd().singularValues()(0);
    if (den < 1e-14) {
      ++stats.skipped;
      continue;
    }
    double ratio = d_H(g) / den;
    stats.min_ratio = std::min(stats.min_ratio, ratio);
    stats.max_ratio = std::max(stats.max_ratio, ratio);
    ++stats.used;
  }
  return stats;
}

ParabolaReport parabola_check(const GeomContext& ctx, int samples, double max_step,
                              std::uint64_t seed) {
  ParabolaReport rep;
  rep.x_prime_ratio_lo = std::numeric_limits<double>::infinity();
  int m = ctx.n + 1;
  double step = max_step;
  for (int level = 0; level < 3; ++level) {
    double worst = 0;
    for (int t = 0; t < samples; ++t) {
      Rng rng(seed, static_cast<std::uint64_t>(level) * 100000 + t);
      FloatMatrix x = random_gl_matrix(m, rng);
      x *= step / x.norm();
      FloatMatrix ex = x.exp();
      FloatMatrix xi = ex * ctx.tau * ex.inverse() - ctx.tau;
      if (xi.norm() < 1e-13) continue;  // x centralizes tau
      auto [xp, xpp] = tau_coordinates(ctx, xi);
      if (xp.norm() > 0) worst = std::max(worst, xpp.norm() / (xp.norm() * xp.norm()));
      auto [xprime, rest] = tau_coordinates(ctx, bracket_star(x, ctx.tau));
      (void)rest;
      double xr = xprime.norm() / xi.norm();
      rep.x_prime_ratio_lo = std::min(rep.x_prime_ratio_lo, xr);
      rep.x_prime_ratio_hi = std::max(rep.x_prime_ratio_hi, xr);
    }
    rep.step_sizes.push_back(step);
    rep.max_curvature_ratio.push_back(worst);
    step /= 2;
  }
  return rep;
}

SizeBoundReport size_bound_check(const GeomContext& ctx, int trials, std::uint64_t seed) {
  SizeBoundReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  int m = ctx.n + 1;
  FloatMatrix idm = FloatMatrix::Identity(m, m);
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    FloatMatrix x = random_centralizer_direction(ctx, rng);
    double s = std::pow(10.0, rng.uniform(-3.0, -1.0));
    FloatMatrix g = FloatMatrix(x * s).exp();
    double tt = rng.uniform(0.01, 0.1) * (rng.next_double() < 0.5 ? -1.0 : 1.0);
    FloatMatrix z = idm * std::exp(tt);
    z(m - 1, m - 1) = 1.0;
    FloatMatrix gz = g * z;
    FloatMatrix xi = gz * ctx.tau * gz.inverse();
    double num = dist_to_H_orbit(ctx, xi);
    double den =
        (z - idm).norm() *
        (adjoint_map(g) - FloatMatrix::Identity(m * m, m * m)).jacobiSvd().singularValues()(0);
    if (den < 1e-15) continue;
    double ratio = num / den;
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    ++rep.trials;
  }
  return rep;
}

VolumeExperiment volume_mc(const GeomContext& ctx, const FloatMatrix& g, double r, int trials,
                           std::uint64_t seed) {
  VolumeExperiment ex;
  ex.g = g;
  ex.r = r;
  ex.trials = trials;
  ex.seed = seed;
  int m = ctx.n + 1;
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    double tt = rng.uniform(-0.25, 0.25);
    FloatMatrix z = FloatMatrix::Identity(m, m) * std::exp(tt);
    z(m - 1, m - 1) = 1.0;
    FloatMatrix gz = g * z;
    FloatMatrix xi = gz * ctx.tau * gz.inverse();
    if (dist_to_H_orbit(ctx, xi) <= r) ++hits;
  }
  ex.measured_volume = 0.5 * static_cast<double>(hits) / trials;
  double dh = d_H(g);
  ex.bound_ratio = (dh > 0) ? ex.measured_volume * dh / ex.r : 0.0;
  return ex;
}

FloatMatrix float_d_matrix(const FloatMatrix& tau) {
  int m = static_cast<int>(tau.rows());
  int n = m - 1;
  FloatMatrix oneH = FloatMatrix::Identity(m, m);
  oneH(n, n) = 0;
  FloatMatrix tauH = oneH * tau * oneH;
  std::vector<FloatMatrix> tp(n + 1), thp(n);
  tp[0] = FloatMatrix::Identity(m, m);
  for (int i = 1; i <= n; ++i) tp[i] = tp[i - 1] * tau;
  thp[0] = oneH;
  for (int j = 1; j < n; ++j) thp[j] = thp[j - 1] * tauH;
  FloatMatrix d(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      d(i - 1, j - 1) = (bracket_star(oneH, bracket_star(tp[i], thp[j - 1])) * tau).trace();
  return d;
}

FloatMatrix random_centralizer_direction(const GeomContext& ctx, Rng& rng) {
  int m = ctx.n + 1;
  for (int attempt = 0; attempt < 100; ++attempt) {
    FloatMatrix x = FloatMatrix::Zero(m, m);
    for (const auto& b : ctx.centralizer_basis) x += rng.normal() * b;
    x -= (x.trace() / m) * FloatMatrix::Identity(m, m);
    double nrm = x.norm();
    if (nrm > 1e-6) return x / nrm;
  }
  throw std::runtime_error("random_centralizer_direction: centralizer looks scalar");
}

}  // namespace ggplab::geom
