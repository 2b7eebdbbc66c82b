#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "ggplab/rng.hpp"

namespace ggplab::bch {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Coords = Eigen::VectorXd;

// Basis of a matrix Lie algebra together with its Frobenius Gram matrix.
// Structure constants are recovered on demand by expressing brackets in the
// basis (least squares against the Gram matrix).
struct LieAlgebraBasis {
  std::vector<CMatrix> basis;
  Eigen::MatrixXd gram;  // gram(i,j) = Re tr(B_i B_j^*)

  int dim() const { return static_cast<int>(basis.size()); }
  CMatrix element(const Eigen::VectorXcd& coords) const;
  Eigen::VectorXcd coordinates(const CMatrix& m) const;  // Gram solve
  double span_residual(const CMatrix& m) const;          // distance to the span

  static LieAlgebraBasis su2();                          // X_a = i sigma_a
  static LieAlgebraBasis so3();                          // [L_1,L_2] = L_3
  static LieAlgebraBasis gl(int n);                      // elementary matrices
};

// log(exp(x) exp(y)) - x - y.  Throws if exp(x)exp(y) has an eigenvalue on
// the closed negative real axis (principal logarithm undefined).
CMatrix bch_remainder(const CMatrix& x, const CMatrix& y);

// [z_1, [z_2, ..., [z_{k-1}, z_k]...]], k >= 2.
CMatrix iterated_bracket(const std::vector<CMatrix>& z);

struct SupportConstraintReport {
  long long monomials = 0;
  long long violations = 0;
  double worst = 0;                  // largest |<L, tau>| over constrained monomials
  double negative_control_rate = 0;  // fraction of unconstrained degree-3 monomials
                                     // with a clearly nonzero pairing
};

// For iterated Lie monomials in which at most one argument lies outside the
// centralizer of tau, the pairing <L, tau> vanishes; runs trials_per_degree
// monomials for every degree in [2, max_degree] and counts violations above
// 1e-9 (scale-normalized).  tau must be regular.
SupportConstraintReport support_constraint_check(const Eigen::MatrixXd& tau,
                                                 int trials_per_degree, int max_degree,
                                                 std::uint64_t seed);

// Compactly supported sample of a symbol on the coordinate space of a basis.
struct SymbolSample {
  std::function<Complex(const Coords&)> value_fn;
  double support_radius = 1.0;
  Coords center;

  Complex operator()(const Coords& xi) const {
    if ((xi - center).norm() >= support_radius) return Complex(0);
    return value_fn(xi);
  }
};

// <xi, [grad a, grad b]> with central-difference gradients in the basis
// coordinates; bracket and pairing via structure constants and Gram matrix.
Complex poisson_bracket(const LieAlgebraBasis& lie, const SymbolSample& a, const SymbolSample& b,
                        const Coords& xi, double step);

struct Star1Fit {
  Complex c;        // fitted constant in  a *^1 b = c . {a, b}
  double residual;  // scatter of the per-sample estimates
  int samples;
};

// Determines the constant relating the first star-product correction for
// linear symbols to the Poisson bracket, using Richardson-extrapolated
// quadratic BCH terms.  Under the real pairing used here the expected value
// is 1/2; the fit is reported, not asserted.
Star1Fit star1_constant_fit(int trials, std::uint64_t seed);

}  // namespace ggplab::bch
