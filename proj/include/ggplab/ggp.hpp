#pragma once

#include <vector>

#include "ggplab/exact.hpp"
#include "ggplab/rng.hpp"

namespace ggplab::ggp {

using alg::ExactMatrix;
using alg::ExactPoly;
using alg::Rational;

// tau in M_{n+1} for the pair GL_n < GL_{n+1} (upper-left block embedding).
struct GgpElement {
  int n = 1;
  ExactMatrix tau;

  GgpElement() = default;
  GgpElement(int n_, ExactMatrix tau_);
};

struct DetIdResult {
  Rational delta;
  Rational delta0;
  Rational delta_rs;
  Rational predicted;  // 2^n (-1)^{n(n-1)/2} * delta0
  bool identity_holds = false;
};

enum class RsRange { n, n_plus_1 };

// diag(1,...,1,0) of size n+1.
ExactMatrix one_h(int n);

// tau with last row and column zeroed, as an (n+1)x(n+1) matrix.
ExactMatrix restrict_h(const GgpElement& e);

// D_ij = <[1_H, [tau^i, 1_H tau_H^{j-1}]], tau>, 1 <= i,j <= n, with the
// trace pairing <x,y> = tr(xy).
ExactMatrix d_matrix(const GgpElement& e);

// Same matrix in an arbitrary frame: p a column with q p = 1, q a row;
// 1_H := I - p q and tau_H := 1_H tau 1_H.
ExactMatrix d_matrix_frame(const ExactMatrix& tau, const std::vector<Rational>& p,
                           const std::vector<Rational>& q);

Rational delta(const GgpElement& e);
Rational delta_frame(const ExactMatrix& tau, const std::vector<Rational>& p,
                     const std::vector<Rational>& q);

// Product of eigenvalue differences between tau and its upper-left block,
// as a resultant of monic characteristic polynomials.
Rational delta0(const GgpElement& e);
Rational delta0_frame(const ExactMatrix& tau, const std::vector<Rational>& p,
                      const std::vector<Rational>& q);

DetIdResult verify_detid(const GgpElement& e);

// Hankel moment determinant det(q tau^{i+j-2} p) with p = e_{n+1}, q = e_{n+1}^t
// and indices in 1..n or 1..n+1.
Rational delta_rs(const GgpElement& e, RsRange range);

// True iff the characteristic polynomials of tau and its upper-left block are
// coprime (no shared eigenvalue over the algebraic closure).
bool is_stable(const GgpElement& e);

bool is_regular(const ExactMatrix& m);  // deg minpoly == size

// Sum_j t^j (q tau^j p) == det(1 - t tau_H) / det(1 - t tau) mod t^{J+1}.
bool moment_series_check(const GgpElement& e, int J);

// regular pair and delta != 0; equivalent to is_stable on every input.
bool bilinear_degeneracy_check(const GgpElement& e);

// Delta(t tau) = t^{n(n+1)} Delta(tau), same for Delta_0, exactly.
bool homogeneity_check(const GgpElement& e, const Rational& t);

// Random integer-entry tau, entries uniform in [-bound, bound].
GgpElement random_element(int n, long bound, Rng& rng);
GgpElement random_stable_element(int n, long bound, Rng& rng);

// Constructed degenerate inputs: block-Jordan matrices with repeated
// eigenvalues (irregular) and upper-triangular matrices (shared eigenvalue
// with the block; conductor dropping).
std::vector<GgpElement> degenerate_examples(int n, long bound, Rng& rng, int count);

// The stable nilpotent example: lower shift matrix in the frame p = e_1,
// q = e_1^* + e_{n+1}^*.
ExactMatrix nilpotent_shift(int n);
void nilpotent_example_frame(int n, std::vector<Rational>& p, std::vector<Rational>& q);

}  // namespace ggplab::ggp
