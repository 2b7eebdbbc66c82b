#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ggplab/rng.hpp"

namespace ggplab::hecke {

using Complex = std::complex<double>;

// Dominant integer word indexing a double-coset basis element T(a).
struct HeckeWord {
  std::vector<int> a;  // non-increasing

  static HeckeWord of(std::vector<int> v);  // sorts into dominant order
  int n() const { return static_cast<int>(a.size()); }
  int sum() const;
  bool operator==(const HeckeWord& o) const { return a == o.a; }
};

// v(a) = sum_k k a_k
int v_of(const HeckeWord& a);

struct SatakeParam {
  std::vector<Complex> alpha;
  double q = 101.0;

  int n() const { return static_cast<int>(alpha.size()); }
};

// Multiplicative perturbation pulling alpha off the singular hyperplanes
// alpha_i = alpha_j; magnitude 1e-6, deterministic.  Returns the number of
// perturbation rounds applied (0 = untouched).
int regularize(SatakeParam& s);

// Character value of T(a) on the unramified principal series with Satake
// parameter alpha: the symmetrized Hall-Littlewood sum at t = 1/q with the
// stabilizer normalization, times q^{-v(a) + (n+1)|a|/2}.  Throws when alpha
// sits within 1e-8 of a singular hyperplane.
Complex macdonald_lambda(const SatakeParam& s, const HeckeWord& a);

// Upper-triangular coset representatives with p-power diagonal contained in
// the double coset of type a (a >= 0 entrywise, n <= 3, |a| <= 3, p in
// {2,3}); entries in row i are reduced modulo the diagonal p^{b_i}.
struct HnfMatrix {
  int n = 0;
  std::vector<long long> entry;  // row-major
  long long& at(int i, int j) { return entry[static_cast<size_t>(i) * n + j]; }
  long long at(int i, int j) const { return entry[static_cast<size_t>(i) * n + j]; }
};

std::vector<HnfMatrix> hnf_cosets(const HeckeWord& a, int p);

// Independent evaluation of the same character by summing the half-modulus
// twisted diagonal characters over the coset representatives.
Complex satake_bruteforce(const SatakeParam& s, const HeckeWord& a);

// Formal combination: sum of scale * omega(pi)^{omega_pow} * T(word).
struct ComboTerm {
  Complex scale{1.0, 0.0};
  int omega_pow = 0;
  HeckeWord word;
};

struct HeckeCombo {
  std::vector<ComboTerm> terms;
};

// t_j = q^{-n j / 2} T(j, 0, ..., 0) on GL_{n+1} with n = n_plus_1 - 1.
HeckeCombo amplifier_t(int j, int n_plus_1, double q);

// T(a)^* = T(-a_n, ..., -a_1) applied termwise (omega powers negated).
HeckeCombo adjoint(const HeckeCombo& c);

// Central restriction of a GL_{n+1} basis element to GL_n: one term per
// distinct entry d of a, with coefficient omega^{-d} and word obtained by
// removing one occurrence of d and shifting the rest by -d.
HeckeCombo res_omega(const HeckeWord& a);

Complex eval_combo(const HeckeCombo& c, const SatakeParam& s, Complex omega);

struct BmReport {
  int j = 0;
  std::vector<Complex> c;  // c_{i j}, i = 0..j
  double residual = 0;
  double max_c = 0;
  bool pass = false;
};

// Solves t_j * t_j^* = sum_i c_{ij} q^{-n i} T(i,0,...,0,-i) through character
// evaluations at random unitary Satake parameters (least squares).
BmReport bm_decomposition_solve(int j, int n_plus_1, double q, int samples, std::uint64_t seed);

struct AmplifierScanReport {
  double min_of_max = 0;  // min over samples of max_j |lambda(t_j)|
  int samples = 0;
  bool pass = false;
};

AmplifierScanReport amplifier_lower_bound_scan(int n_plus_1, double q, int samples,
                                               std::uint64_t seed);

struct RestrictionBoundReport {
  double sup_tj = 0;      // sup |lambda_beta(res t_j)| q^{(1/2 - theta) j}
  double sup_titi = 0;    // sup |lambda_beta(res q^{-ni} T(i,0,..,0,-i))| q^{(1-2 theta) i}
  bool finite = false;
};

RestrictionBoundReport tempered_restriction_bound(int j, int n, double q, double theta,
                                                  int samples, std::uint64_t seed);

// Random parameters: unitary (all |alpha_i| = 1) or theta-tempered with
// unimodular product.
SatakeParam random_unitary_satake(int n, double q, Rng& rng);
SatakeParam random_tempered_satake(int n, double q, double theta, Rng& rng);

}  // namespace ggplab::hecke
