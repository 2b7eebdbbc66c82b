#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "ggplab/bch.hpp"

namespace ggplab::su2 {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;
using bch::SymbolSample;

// Highest weight k (dimension k+1); the derived representation sends the
// basis element with coordinates x to 2i (x . J).
struct Spin {
  int k = 0;
  CMatrix j1, j2, j3;

  static Spin make(int k);
  CMatrix pi(const Vec3& x) const;      // skew-hermitian
  CMatrix exp_pi(const Vec3& x) const;  // unitary
};

// sin((k+1) theta) / sin(theta)
double weyl_character(int k, double theta);

// sqrt of the exponential-map Jacobian; ad x has eigenvalues {0, +-2i|x|},
// giving sin(|x|)/|x|.
double jac_sqrt(const Vec3& x);

struct OrbitSphere {
  double radius = 1.0;
  double kappa = 1.0;  // surface-measure scale
};

// Calibration of the radius shift over k + 1/2 and of kappa: the shift makes
// the k = 0 character identity hold, kappa matches the dimension at x = 0.
struct OrbitCalibration {
  double shift = 0.5;
  double calibration_error = 0;
};

OrbitCalibration calibrate_orbits(int quad_order = 64);
OrbitSphere orbit_for(int k, const OrbitCalibration& cal);

// kappa * integral over the sphere |xi| = R of e^{i <x, xi>}; Gauss-Legendre
// in the polar angle, azimuth exact by symmetry.
Complex orbit_integral(const OrbitSphere& orbit, const Vec3& x, int quad_order);

struct KirillovReport {
  int k = 0;
  double max_abs_err = 0;
  double sup_rel_err = 0;  // max error over the grid / max |lhs| over the grid
  bool pass = false;
};

KirillovReport kirillov_check(int k, const std::vector<double>& theta_grid,
                              const OrbitCalibration& cal, int quad_order = 64,
                              double tol = 1e-6);

// Even smooth cutoff: 1 on [0, inner], 0 beyond outer.
struct CutoffFn {
  double inner = 0.2;
  double outer = 0.3;
  double operator()(double r) const;
};

struct OppGrid {
  int xi_points = 128;   // per-axis midpoint grid for the symbol transform
  int x_points = 48;     // per-axis Gauss-Legendre nodes on [-outer, outer]
  double tail_tol = 1e-4;
};

// Opp_h(a) v = integral over x of chi(x) a_h^v(x) pi(exp x) v dx, computed by
// a discrete Fourier transform of the rescaled symbol onto tensor
// Gauss-Legendre nodes.  Throws if the transform mass sitting outside the
// cutoff ball exceeds tail_tol of the total (grid or cutoff too tight).
CMatrix opp_h(const SymbolSample& a, const Spin& rep, double h, const CutoffFn& chi,
              const OppGrid& grid);

// trace(Opp_h(a)) for a radial profile a(|xi|), via two nested 1-D
// quadratures (the character is radial).
double opp_trace_radial(const std::function<double(double)>& profile, double support,
                        const Spin& rep, double h, const CutoffFn& chi, int rho_points = 512,
                        int r_points = 256);

// Integral of a over the rescaled orbit h O_k with its scaled measure
// (total mass h (k+1)).
Complex orbit_integral_of_symbol(const SymbolSample& a, int k, double h,
                                 const OrbitCalibration& cal, int polar_points = 64,
                                 int azimuth_points = 128);

struct TraceAsymptoticsReport {
  std::vector<double> h_values;
  std::vector<int> k_values;
  std::vector<double> errors;  // |h tr Opp(a) - int_{hO} a|
  bool decreasing = false;
  double worst_ratio = 0;  // max err(h/2)/err(h)
  bool pass = false;
};

// Radial-profile version; k scales like 1/h so that h (k+1) is constant.
TraceAsymptoticsReport trace_asymptotics_check(int k0, const std::vector<double>& h_list,
                                               const std::function<double(double)>& profile,
                                               double support, const CutoffFn& chi,
                                               const OrbitCalibration& cal);

struct CompositionReport {
  double e0_h = 0, e1_h = 0;      // expansion errors at h (J = 0 and J = 1)
  double e0_h2 = 0, e1_h2 = 0;    // same at h/2 (k scaled accordingly)
  bool pass = false;
};

// Operator-norm errors of the composition expansion with the pointwise
// product alone and with the first star-product correction added.
CompositionReport composition_check(int k, double h, const SymbolSample& a, const SymbolSample& b,
                                    const CutoffFn& chi, const OppGrid& grid, Complex star1_c,
                                    const OrbitCalibration& cal);

}  // namespace ggplab::su2
