#include "ggplab/exact.hpp"

#include <stdexcept>

namespace ggplab::alg {

Rational rat(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rational& r) { return r.get_str(); }

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
  ExactMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::operator*(const Rational& c) const {
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rational ExactMatrix::trace() const {
  Rational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

ExactPoly::ExactPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void ExactPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExactPoly ExactPoly::constant(const Rational& c) { return ExactPoly({c}); }

ExactPoly ExactPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return ExactPoly(std::move(v));
}

const Rational& ExactPoly::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
  if (is_zero() || o.is_zero()) return ExactPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return ExactPoly(std::move(v));
}

bool ExactPoly::operator==(const ExactPoly& o) const { return c_ == o.c_; }

Rational ExactPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactMatrix ExactPoly::eval(const ExactMatrix& m) const {
  int n = m.rows();
  ExactMatrix acc(n);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * m;
    for (int i = 0; i < n; ++i) acc.at(i, i) += *it;
  }
  return acc;
}

ExactPoly ExactPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> v(c_);
  Rational lead = v.back();
  for (auto& x : v) x /= lead;
  return ExactPoly(std::move(v));
}

void ExactPoly::divmod(const ExactPoly& a, const ExactPoly& b, ExactPoly& q, ExactPoly& r) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quo(std::max<int>(0, a.degree() - db + 1));
  for (int d = a.degree(); d >= db; --d) {
    if (rem[d] == 0) continue;
    Rational f = rem[d] / b.c_.back();
    quo[d - db] = f;
    for (int k = 0; k <= db; ++k) rem[d - db + k] -= f * b.c_[k];
  }
  q = ExactPoly(std::move(quo));
  r = ExactPoly(std::move(rem));
}

ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly x = a, y = b;
  while (!y.is_zero()) {
    ExactPoly q, r;
    ExactPoly::divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

ExactPoly charpoly(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("charpoly: matrix not square");
  int n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  ExactMatrix work = ExactMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    work = m * work;
    Rational ck = -work.trace() / k;
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) work.at(i, i) += ck;
  }
  return ExactPoly(std::move(c));
}

namespace {

// Bareiss determinant over integers after clearing row denominators.
Rational det_bareiss(const ExactMatrix& m) {
  int n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale(1);
  for (int i = 0; i < n; ++i) {
    mpz_class lcm(1);
    for (int j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      mpq_class scaled = m.at(i, j) * Rational(lcm);
      a[i][j] = scaled.get_num();
    }
    scale *= lcm;
  }
  int sign = 1;
  mpz_class prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Rational(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational r(sign * a[n - 1][n - 1], scale);
  r.canonicalize();
  return r;
}

}  // namespace

Rational det(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det: matrix not square");
  return det_bareiss(m);
}

Rational resultant(const ExactPoly& p, const ExactPoly& q) {
  if (p.degree() < 1 || q.degree() < 1) throw std::invalid_argument("resultant: degree >= 1 required");
  if (!p.is_monic() || !q.is_monic()) throw std::invalid_argument("resultant: monic polynomials required");
  int m = p.degree(), n = q.degree();
  ExactMatrix syl(m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl.at(r, r + k) = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) syl.at(n + r, r + k) = q.coeff(n - k);
  return det(syl);
}

ExactPoly minpoly(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("minpoly: matrix not square");
  int n = m.rows();
  int dim = n * n;
  // Krylov sequence I, m, m^2, ... as flattened vectors; find the first
  // linear dependence by incremental elimination.
  std::vector<std::vector<Rational>> reduced;       // rows in echelon form
  std::vector<int> pivot_col;                       // pivot column per row
  std::vector<std::vector<Rational>> combo;         // expression of each reduced row in powers
  ExactMatrix pw = ExactMatrix::identity(n);
  for (int deg = 0; deg <= n; ++deg) {
    std::vector<Rational> v(dim);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = pw.at(i, j);
    std::vector<Rational> expr(deg + 1);
    expr[deg] = 1;
    // reduce v against existing rows
    for (size_t r = 0; r < reduced.size(); ++r) {
      const Rational& lead = v[pivot_col[r]];
      if (lead == 0) continue;
      Rational f = lead / reduced[r][pivot_col[r]];
      for (int c = 0; c < dim; ++c) v[c] -= f * reduced[r][c];
      for (size_t c = 0; c < combo[r].size(); ++c) {
        if (c >= expr.size()) expr.resize(c + 1);
        expr[c] -= f * combo[r][c];
      }
    }
    int pc = -1;
    for (int c = 0; c < dim; ++c)
      if (v[c] != 0) {
        pc = c;
        break;
      }
    if (pc < 0) {
      // dependence found: expr gives the coefficients of the minimal polynomial
      return ExactPoly(std::move(expr)).monic();
    }
    reduced.push_back(std::move(v));
    pivot_col.push_back(pc);
    combo.push_back(std::move(expr));
    pw = pw * m;
  }
  throw std::logic_error("minpoly: no dependence up to degree n (unreachable)");
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  // row-reduce a working copy
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    Rational lead = a[rank][c];
    for (int j = c; j < cols; ++j) a[rank][j] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rational> v(cols);
    v[c] = 1;
    for (int c2 = 0; c2 < cols; ++c2) {
      int r = pivot_of_col[c2];
      if (r >= 0) v[c2] = -a[r][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ggplab::alg
