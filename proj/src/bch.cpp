#include "ggplab/bch.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

#include "ggplab/geom.hpp"

namespace ggplab::bch {

CMatrix LieAlgebraBasis::element(const Eigen::VectorXcd& coords) const {
  CMatrix m = CMatrix::Zero(basis[0].rows(), basis[0].cols());
  for (int i = 0; i < dim(); ++i) m += coords(i) * basis[i];
  return m;
}

Eigen::VectorXcd LieAlgebraBasis::coordinates(const CMatrix& m) const {
  Eigen::VectorXcd rhs(dim());
  for (int i = 0; i < dim(); ++i) rhs(i) = (basis[i].adjoint() * m).trace();
  return gram.cast<Complex>().ldlt().solve(rhs);
}

double LieAlgebraBasis::span_residual(const CMatrix& m) const {
  return (m - element(coordinates(m))).norm();
}

namespace {

Eigen::MatrixXd gram_of(const std::vector<CMatrix>& basis) {
  int d = static_cast<int>(basis.size());
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = (basis[i].adjoint() * basis[j]).trace().real();
  return g;
}

}  // namespace

LieAlgebraBasis LieAlgebraBasis::su2() {
  const Complex I(0, 1);
  LieAlgebraBasis lie;
  CMatrix x1(2, 2), x2(2, 2), x3(2, 2);
  x1 << 0, I, I, 0;
  x2 << 0, 1, -1, 0;
  x3 << I, 0, 0, -I;
  lie.basis = {x1, x2, x3};
  lie.gram = gram_of(lie.basis);
  return lie;
}

LieAlgebraBasis LieAlgebraBasis::so3() {
  LieAlgebraBasis lie;
  CMatrix l1 = CMatrix::Zero(3, 3), l2 = CMatrix::Zero(3, 3), l3 = CMatrix::Zero(3, 3);
  l1(2, 1) = 1;
  l1(1, 2) = -1;
  l2(0, 2) = 1;
  l2(2, 0) = -1;
  l3(1, 0) = 1;
  l3(0, 1) = -1;
  lie.basis = {l1, l2, l3};
  lie.gram = gram_of(lie.basis);
  return lie;
}

LieAlgebraBasis LieAlgebraBasis::gl(int n) {
  LieAlgebraBasis lie;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMatrix e = CMatrix::Zero(n, n);
      e(i, j) = 1;
      lie.basis.push_back(e);
    }
  lie.gram = gram_of(lie.basis);
  return lie;
}

CMatrix bch_remainder(const CMatrix& x, const CMatrix& y) {
  CMatrix prod = x.exp() * y.exp();
  Eigen::ComplexEigenSolver<CMatrix> es(prod);
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    Complex ev = es.eigenvalues()(i);
    if (ev.real() <= 0 && std::abs(ev.imag()) < 1e-12 * std::max(1.0, std::abs(ev.real())))
      throw std::runtime_error("bch_remainder: eigenvalue on the negative real axis");
  }
  return prod.log() - x - y;
}

CMatrix iterated_bracket(const std::vector<CMatrix>& z) {
  if (z.size() < 2) throw std::invalid_argument("iterated_bracket: need at least two arguments");
  CMatrix acc = z.back();
  for (auto it = z.rbegin() + 1; it != z.rend(); ++it) acc = (*it) * acc - acc * (*it);
  return acc;
}

SupportConstraintReport support_constraint_check(const Eigen::MatrixXd& tau,
                                                 int trials_per_degree, int max_degree,
                                                 std::uint64_t seed) {
  SupportConstraintReport rep;
  auto cbasis = geom::centralizer(tau);
  int m = static_cast<int>(tau.rows());
  CMatrix ctau = tau.cast<Complex>();

  auto random_central = [&](Rng& rng) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
    for (const auto& b : cbasis) x += rng.normal() * b;
    double nrm = x.norm();
    if (nrm < 1e-12)
      x = cbasis[0];
    else
      x /= nrm;
    return CMatrix(x.cast<Complex>());
  };
  auto random_generic = [&](Rng& rng) {
    Eigen::MatrixXd x(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) x(i, j) = rng.normal();
    x /= x.norm();
    return CMatrix(x.cast<Complex>());
  };
  auto pairing = [&](const CMatrix& l) { return (l * ctau).trace(); };

  double tau_norm = tau.norm();
  long long nc_nonzero = 0, nc_total = 0;
  for (int degree = 2; degree <= max_degree; ++degree) {
    for (int t = 0; t < trials_per_degree; ++t) {
      Rng rng(seed, static_cast<std::uint64_t>(degree) * 1000003 + t);
      int generic_slot = static_cast<int>(rng.uniform_int(-1, degree - 1));  // -1: all centralize
      std::vector<CMatrix> z;
      z.reserve(degree);
      for (int s = 0; s < degree; ++s)
        z.push_back(s == generic_slot ? random_generic(rng) : random_central(rng));
      double val = std::abs(pairing(iterated_bracket(z)));
      rep.monomials++;
      rep.worst = std::max(rep.worst, val / tau_norm);
      if (val > 1e-9 * tau_norm) rep.violations++;

      // negative control: degree 3 with two generic arguments
      if (t % 10 == 0) {
        std::vector<CMatrix> w = {random_generic(rng), random_central(rng), random_generic(rng)};
        nc_total++;
        if (std::abs(pairing(iterated_bracket(w))) > 1e-6 * tau_norm) nc_nonzero++;
      }
    }
  }
  rep.negative_control_rate = nc_total ? static_cast<double>(nc_nonzero) / nc_total : 0.0;
  return rep;
}

Complex poisson_bracket(const LieAlgebraBasis& lie, const SymbolSample& a, const SymbolSample& b,
                        const Coords& xi, double step) {
  int d = lie.dim();
  Eigen::VectorXcd ga(d), gb(d);
  for (int i = 0; i < d; ++i) {
    Coords hi = xi, lo = xi;
    hi(i) += step;
    lo(i) -= step;
    ga(i) = (a(hi) - a(lo)) / (2 * step);
    gb(i) = (b(hi) - b(lo)) / (2 * step);
  }
  CMatrix br = lie.element(ga) * lie.element(gb) - lie.element(gb) * lie.element(ga);
  Eigen::VectorXcd w = lie.coordinates(br);
  Complex out(0);
  for (int i = 0; i < d; ++i) out += xi(i) * w(i);
  return out;
}

Star1Fit star1_constant_fit(int trials, std::uint64_t seed) {
  LieAlgebraBasis lie = LieAlgebraBasis::su2();
  std::vector<Complex> estimates;
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    Coords u(3), v(3), zeta(3);
    for (int i = 0; i < 3; ++i) {
      u(i) = rng.normal();
      v(i) = rng.normal();
      zeta(i) = rng.normal();
    }
    u /= u.norm();
    v /= v.norm();
    auto linear = [](const Coords& w) {
      SymbolSample s;
      Coords wc = w;
      s.value_fn = [wc](const Coords& xi) { return Complex(wc.dot(xi), 0); };
      s.support_radius = 1e9;
      s.center = Coords::Zero(3);
      return s;
    };
    Complex pb = poisson_bracket(lie, linear(u), linear(v), zeta, 1e-5);
    if (std::abs(pb) < 1e-6) continue;  // commuting or near-commuting pair

    // quadratic BCH term via two-level Richardson extrapolation: the scaled
    // remainder carries both s and s^2 error terms
    CMatrix xu = lie.element(u.cast<Complex>());
    CMatrix xv = lie.element(v.cast<Complex>());
    double s = 0.01;
    auto scaled = [&](double t) { return CMatrix(bch_remainder(t * xu, t * xv) / (t * t)); };
    CMatrix q1 = scaled(s), q2 = scaled(s / 2), q3 = scaled(s / 4);
    CMatrix r1 = 2.0 * q2 - q1;
    CMatrix r2 = 2.0 * q3 - q2;
    CMatrix q = (4.0 * r2 - r1) / 3.0;
    Eigen::VectorXcd w = lie.coordinates(q);
    Complex star1(0);
    for (int i = 0; i < 3; ++i) star1 += zeta(i) * w(i);
    estimates.push_back(star1 / pb);
  }
  Star1Fit fit;
  fit.samples = static_cast<int>(estimates.size());
  Complex mean(0);
  for (auto e : estimates) mean += e;
  mean /= static_cast<double>(std::max<size_t>(1, estimates.size()));
  double resid = 0;
  for (auto e : estimates) resid = std::max(resid, std::abs(e - mean));
  fit.c = mean;
  fit.residual = resid;
  return fit;
}

}  // namespace ggplab::bch
