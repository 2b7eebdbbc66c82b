#include "ggplab/ggp.hpp"

#include <stdexcept>

namespace ggplab::ggp {

GgpElement::GgpElement(int n_, ExactMatrix tau_) : n(n_), tau(std::move(tau_)) {
  if (tau.rows() != n + 1 || tau.cols() != n + 1)
    throw std::invalid_argument("GgpElement: tau must be (n+1) x (n+1)");
}

ExactMatrix one_h(int n) {
  ExactMatrix m(n + 1);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix restrict_h(const GgpElement& e) {
  ExactMatrix m = e.tau;
  int n = e.n;
  for (int i = 0; i <= n; ++i) {
    m.at(n, i) = 0;
    m.at(i, n) = 0;
  }
  return m;
}

namespace {

ExactMatrix outer(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  int n = static_cast<int>(p.size());
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = p[i] * q[j];
  return m;
}

Rational pairing(const ExactMatrix& x, const ExactMatrix& y) { return (x * y).trace(); }

ExactMatrix d_matrix_impl(const ExactMatrix& tau, const ExactMatrix& oneH) {
  int n = tau.rows() - 1;
  ExactMatrix tauH = oneH * tau * oneH;
  // tau powers 1..n and 1_H tau_H^{j-1} for j = 1..n
  std::vector<ExactMatrix> tp(n + 1), thp(n);
  tp[0] = ExactMatrix::identity(n + 1);
  for (int i = 1; i <= n; ++i) tp[i] = tp[i - 1] * tau;
  thp[0] = oneH;
  for (int j = 1; j < n; ++j) thp[j] = thp[j - 1] * tauH;
  ExactMatrix d(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      d.at(i - 1, j - 1) = pairing(alg::commutator(oneH, alg::commutator(tp[i], thp[j - 1])), tau);
  return d;
}

ExactPoly block_charpoly(const ExactMatrix& tau, const ExactMatrix& oneH) {
  // char poly of tau_H acting on the H-stable hyperplane: the bordered
  // matrix 1_H tau 1_H always kills the complementary line, so its
  // characteristic polynomial is divisible by X.
  ExactMatrix tauH = oneH * tau * oneH;
  ExactPoly full = charpoly(tauH);
  ExactPoly q, r;
  ExactPoly::divmod(full, ExactPoly::monomial(1), q, r);
  if (!r.is_zero()) throw std::logic_error("bordered restriction lost its zero eigenvalue");
  return q;
}

}  // namespace

ExactMatrix d_matrix(const GgpElement& e) { return d_matrix_impl(e.tau, one_h(e.n)); }

ExactMatrix d_matrix_frame(const ExactMatrix& tau, const std::vector<Rational>& p,
                           const std::vector<Rational>& q) {
  Rational qp;
  for (size_t i = 0; i < p.size(); ++i) qp += q[i] * p[i];
  if (qp != 1) throw std::invalid_argument("frame requires q p = 1");
  ExactMatrix oneH = ExactMatrix::identity(tau.rows()) - outer(p, q);
  return d_matrix_impl(tau, oneH);
}

Rational delta(const GgpElement& e) { return alg::det(d_matrix(e)); }

Rational delta_frame(const ExactMatrix& tau, const std::vector<Rational>& p,
                     const std::vector<Rational>& q) {
  return alg::det(d_matrix_frame(tau, p, q));
}

Rational delta0(const GgpElement& e) {
  return alg::resultant(alg::charpoly(e.tau), block_charpoly(e.tau, one_h(e.n)));
}

Rational delta0_frame(const ExactMatrix& tau, const std::vector<Rational>& p,
                      const std::vector<Rational>& q) {
  ExactMatrix oneH = ExactMatrix::identity(tau.rows()) - outer(p, q);
  return alg::resultant(alg::charpoly(tau), block_charpoly(tau, oneH));
}

namespace {

Rational detid_scale(int n) {
  Rational c = 1;
  for (int i = 0; i < n; ++i) c *= 2;
  if ((n * (n - 1) / 2) % 2 == 1) c = -c;
  return c;
}

}  // namespace

DetIdResult verify_detid(const GgpElement& e) {
  DetIdResult r;
  r.delta = delta(e);
  r.delta0 = delta0(e);
  r.delta_rs = delta_rs(e, RsRange::n_plus_1);
  r.predicted = detid_scale(e.n) * r.delta0;
  r.identity_holds = (r.delta == r.predicted);
  return r;
}

Rational delta_rs(const GgpElement& e, RsRange range) {
  int n = e.n;
  int k = (range == RsRange::n) ? n : n + 1;
  // moments q tau^m p for m = 0 .. 2k-2 with p = e_{n+1}, q = e_{n+1}^t
  std::vector<Rational> mom(2 * k - 1);
  ExactMatrix pw = ExactMatrix::identity(n + 1);
  for (int m = 0; m < 2 * k - 1; ++m) {
    mom[m] = pw.at(n, n);
    pw = pw * e.tau;
  }
  ExactMatrix h(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) h.at(i, j) = mom[i + j];
  return alg::det(h);
}

bool is_stable(const GgpElement& e) {
  ExactPoly g = alg::poly_gcd(alg::charpoly(e.tau), block_charpoly(e.tau, one_h(e.n)));
  return g.degree() == 0;
}

bool is_regular(const ExactMatrix& m) { return alg::minpoly(m).degree() == m.rows(); }

bool moment_series_check(const GgpElement& e, int J) {
  int n = e.n;
  // LHS coefficients: q tau^j p
  std::vector<Rational> lhs(J + 1);
  ExactMatrix pw = ExactMatrix::identity(n + 1);
  for (int j = 0; j <= J; ++j) {
    lhs[j] = pw.at(n, n);
    pw = pw * e.tau;
  }
  // det(1 - t m) = t^d charpoly(1/t), i.e. coefficient of t^k is c_{d-k}.
  auto det_one_minus = [](const ExactPoly& cp) {
    int d = cp.degree();
    std::vector<Rational> v(d + 1);
    for (int k = 0; k <= d; ++k) v[k] = cp.coeff(d - k);
    return ExactPoly(std::move(v));
  };
  ExactPoly num = det_one_minus(charpoly(restrict_h(e)));  // extra eigenvalue 0 contributes factor 1
  ExactPoly den = det_one_minus(charpoly(e.tau));
  if (den.coeff(0) != 1) throw std::logic_error("det(1 - t tau) must have constant term 1");
  // invert den as a power series mod t^{J+1}
  std::vector<Rational> inv(J + 1);
  inv[0] = 1;
  for (int k = 1; k <= J; ++k) {
    Rational s;
    for (int i = 1; i <= k; ++i) s += den.coeff(i) * inv[k - i];
    inv[k] = -s;
  }
  for (int k = 0; k <= J; ++k) {
    Rational rhs;
    for (int i = 0; i <= k; ++i) rhs += num.coeff(i) * inv[k - i];
    if (rhs != lhs[k]) return false;
  }
  return true;
}

bool bilinear_degeneracy_check(const GgpElement& e) {
  ExactMatrix block(e.n);
  for (int i = 0; i < e.n; ++i)
    for (int j = 0; j < e.n; ++j) block.at(i, j) = e.tau.at(i, j);
  if (!is_regular(e.tau) || !is_regular(block)) return false;
  return delta(e) != 0;
}

bool homogeneity_check(const GgpElement& e, const Rational& t) {
  GgpElement scaled(e.n, e.tau * t);
  Rational tpow = 1;
  for (int i = 0; i < e.n * (e.n + 1); ++i) tpow *= t;
  return delta(scaled) == tpow * delta(e) && delta0(scaled) == tpow * delta0(e);
}

GgpElement random_element(int n, long bound, Rng& rng) {
  ExactMatrix m(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m.at(i, j) = alg::rat(rng.uniform_int(-bound, bound));
  return GgpElement(n, std::move(m));
}

GgpElement random_stable_element(int n, long bound, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GgpElement e = random_element(n, bound, rng);
    if (is_stable(e)) return e;
  }
  throw std::runtime_error("failed to sample a stable element");
}

std::vector<GgpElement> degenerate_examples(int n, long bound, Rng& rng, int count) {
  std::vector<GgpElement> out;
  out.reserve(count);
  int kind = 0;
  while (static_cast<int>(out.size()) < count) {
    ExactMatrix m(n + 1);
    switch (kind % 4) {
      case 0: {  // scalar
        Rational c = alg::rat(rng.uniform_int(-bound, bound));
        for (int i = 0; i <= n; ++i) m.at(i, i) = c;
        break;
      }
      case 1: {  // repeated Jordan blocks of one eigenvalue (irregular for n >= 1)
        Rational c = alg::rat(rng.uniform_int(-bound, bound));
        for (int i = 0; i <= n; ++i) m.at(i, i) = c;
        for (int i = 0; i + 1 <= n; i += 2) m.at(i + 1, i) = 1;  // 2x2 blocks
        break;
      }
      case 2: {  // upper triangular: block eigenvalues are shared with tau
        for (int i = 0; i <= n; ++i)
          for (int j = i; j <= n; ++j) m.at(i, j) = alg::rat(rng.uniform_int(-bound, bound));
        break;
      }
      default: {  // diagonal with a deliberate collision between block and corner
        for (int i = 0; i <= n; ++i) m.at(i, i) = alg::rat(rng.uniform_int(-bound, bound));
        m.at(n, n) = m.at(0, 0);
        break;
      }
    }
    out.emplace_back(n, std::move(m));
    ++kind;
  }
  return out;
}

ExactMatrix nilpotent_shift(int n) {
  ExactMatrix m(n + 1);
  for (int i = 0; i < n; ++i) m.at(i + 1, i) = 1;
  return m;
}

void nilpotent_example_frame(int n, std::vector<Rational>& p, std::vector<Rational>& q) {
  p.assign(n + 1, Rational(0));
  q.assign(n + 1, Rational(0));
  p[0] = 1;
  q[0] = 1;
  q[n] = 1;
}

}  // namespace ggplab::ggp
