#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "ggplab/rng.hpp"

namespace ggplab::geom {

using FloatMatrix = Eigen::MatrixXd;
using FloatVector = Eigen::VectorXd;

// Coadjoint action under the trace identification: plain matrix commutator.
FloatMatrix bracket_star(const FloatMatrix& x, const FloatMatrix& xi);

Eigen::VectorXd vec(const FloatMatrix& m);
FloatMatrix unvec(const Eigen::VectorXd& v, int rows, int cols);

// Matrix of X -> [X, tau] acting on flattened matrices.
FloatMatrix commutator_map(const FloatMatrix& tau);

// Matrix of X -> g X g^{-1}.
FloatMatrix adjoint_map(const FloatMatrix& g);

// Orthonormal basis of the null space of X -> [X, tau].  Throws if some
// singular value sits within a factor 10 of the rank cutoff.
std::vector<FloatMatrix> centralizer(const FloatMatrix& tau, double tol = 1e-9);

struct GeomContext {
  int n = 1;                      // tau is (n+1) x (n+1)
  FloatMatrix tau;
  std::vector<FloatMatrix> centralizer_basis;  // orthonormal, spans g_tau
  std::vector<FloatMatrix> h_bracket_basis;    // orthonormal, spans [h, tau]
  Eigen::MatrixXd orbit_range;    // orthonormal columns spanning [g, tau] (flattened)
  double tol = 1e-9;

  static GeomContext build(const FloatMatrix& tau, double tol = 1e-9);
};

// Orthogonal splitting of xi into the tangent part (image of X -> [X,tau])
// and the transverse residual.
std::pair<FloatMatrix, FloatMatrix> tau_coordinates(const GeomContext& ctx, const FloatMatrix& xi);

// Orthogonal projection, within [g,tau], onto the complement of [h,tau].
// If off_range is non-null it receives the norm of the component of v
// outside [g,tau] (caller may warn when it exceeds tol * |v|).
FloatMatrix rho_tau(const GeomContext& ctx, const FloatMatrix& v, double* off_range = nullptr);

// Distance from the class of g to the block subgroup fixing the last
// coordinate line, in [0,1]; p is the norm exponent on coordinates.
double d_H(const FloatMatrix& g, double norm_exponent = 2.0);

// Gauss-Newton distance from xi to the conjugation orbit of tau under the
// upper-left block subgroup.  Throws on non-convergence.
double dist_to_H_orbit(const GeomContext& ctx, const FloatMatrix& xi, int max_iters = 200);

struct RatioStats {
  double min_ratio = 0;
  double max_ratio = 0;
  int used = 0;
  int skipped = 0;
};

// max over samples of d_H(exp(x)) / |Ad(exp(x)) - 1|_op, |x| <= 0.1.
RatioStats d_H_vs_adjoint_check(int n, int samples, std::uint64_t seed);

struct ParabolaReport {
  std::vector<double> step_sizes;
  std::vector<double> max_curvature_ratio;  // max |xi''| / |xi'|^2 per step size
  double x_prime_ratio_lo = 0;              // bounds for |x'| / |exp(x)tau - tau|
  double x_prime_ratio_hi = 0;
};

ParabolaReport parabola_check(const GeomContext& ctx, int samples, double max_step,
                              std::uint64_t seed);

struct SizeBoundReport {
  double min_ratio = 0;
  double max_ratio = 0;
  int trials = 0;
};

SizeBoundReport size_bound_check(const GeomContext& ctx, int trials, std::uint64_t seed);

struct VolumeExperiment {
  FloatMatrix g;
  double r = 0;
  int trials = 0;
  double measured_volume = 0;
  double bound_ratio = 0;  // measured_volume * d_H(g) / r
  std::uint64_t seed = 0;
};

// Monte Carlo measure of the set of central-in-H elements z = diag(e^t,..,e^t,1),
// |t| <= 0.25, whose twist g z tau (g z)^{-1} stays within r of the H-orbit.
VolumeExperiment volume_mc(const GeomContext& ctx, const FloatMatrix& g, double r, int trials,
                           std::uint64_t seed);

// Floating-point mirror of the exact pairing matrix used by the stability
// determinant: entries <[1_H,[tau^i, 1_H tau_H^{j-1}]], tau>.
FloatMatrix float_d_matrix(const FloatMatrix& tau);

// Random direction in g_tau with the scalar part removed, unit Frobenius norm.
FloatMatrix random_centralizer_direction(const GeomContext& ctx, Rng& rng);

FloatMatrix random_gl_matrix(int size, Rng& rng);  // iid standard normal entries

}  // namespace ggplab::geom
