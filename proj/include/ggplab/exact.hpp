#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ggplab::alg {

// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational rat_from_string(const std::string& s);  // "p/q" or "p"
std::string rat_to_string(const Rational& r);

class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  explicit ExactMatrix(int n) : ExactMatrix(n, n) {}

  static ExactMatrix identity(int n);
  static ExactMatrix zero(int n) { return ExactMatrix(n); }
  static ExactMatrix diagonal(const std::vector<Rational>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  int size() const { return rows_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator*(const Rational& c) const;
  bool operator==(const ExactMatrix& o) const;

  ExactMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);

// Univariate polynomial over the rationals, coefficients in ascending degree,
// no trailing zero coefficients (zero polynomial = empty list).
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coeffs);

  static ExactPoly constant(const Rational& c);
  static ExactPoly monomial(int degree, const Rational& c = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  ExactPoly operator+(const ExactPoly& o) const;
  ExactPoly operator-(const ExactPoly& o) const;
  ExactPoly operator*(const ExactPoly& o) const;
  bool operator==(const ExactPoly& o) const;

  Rational eval(const Rational& x) const;
  ExactMatrix eval(const ExactMatrix& m) const;  // Horner with matrix argument

  ExactPoly monic() const;
  // Euclidean division; throws on division by zero polynomial.
  static void divmod(const ExactPoly& a, const ExactPoly& b, ExactPoly& q, ExactPoly& r);

 private:
  std::vector<Rational> c_;
  void trim();
};

ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b);  // monic gcd

// det(X I - m), monic of degree size(m); Faddeev-LeVerrier.
ExactPoly charpoly(const ExactMatrix& m);

// Product of root differences prod_{i,j} (lambda_i - mu_j) for monic p, q,
// computed as a Sylvester determinant.  Rejects non-monic input.
Rational resultant(const ExactPoly& p, const ExactPoly& q);

// Monic minimal polynomial via Krylov linear-dependence search.
ExactPoly minpoly(const ExactMatrix& m);

// Basis of the right null space of a rectangular matrix; empty iff full
// column rank.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

// Exact determinant (row-scaled integer Bareiss elimination).
Rational det(const ExactMatrix& m);

}  // namespace ggplab::alg
