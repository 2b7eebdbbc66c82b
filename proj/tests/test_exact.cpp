#include <doctest.h>

#include "ggplab/exact.hpp"
#include "ggplab/rng.hpp"

using namespace ggplab;
using namespace ggplab::alg;

namespace {

ExactMatrix from_longs(int n, std::initializer_list<long> vals) {
  ExactMatrix m(n);
  auto it = vals.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rat(*it++);
  return m;
}

ExactMatrix random_matrix(int n, long bound, Rng& rng) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rat(rng.uniform_int(-bound, bound));
  return m;
}

ExactPoly random_monic(int degree, long bound, Rng& rng) {
  std::vector<Rational> c(degree + 1);
  for (int i = 0; i < degree; ++i) c[i] = rat(rng.uniform_int(-bound, bound));
  c[degree] = 1;
  return ExactPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational literals canonicalize") {
  CHECK(rat(2, 6) == rat(1, 3));
  CHECK(rat_from_string("-4/6") == rat(-2, 3));
  CHECK(rat_to_string(rat(-2, 3)) == "-2/3");
  CHECK(rat_to_string(rat(5)) == "5");
}

TEST_CASE("charpoly small cases") {
  CHECK(charpoly(ExactMatrix::identity(2)) == ExactPoly({rat(1), rat(-2), rat(1)}));
  CHECK(charpoly(ExactMatrix::zero(2)) == ExactPoly::monomial(2));
  // trace 5, det -2
  CHECK(charpoly(from_longs(2, {1, 2, 3, 4})) == ExactPoly({rat(-2), rat(-5), rat(1)}));
}

TEST_CASE("resultant small cases") {
  ExactPoly xm2({rat(-2), rat(1)});
  ExactPoly xm3({rat(-3), rat(1)});
  CHECK(resultant(xm2, xm3) == rat(-1));
  CHECK(resultant(ExactPoly::monomial(2), ExactPoly({rat(1), rat(1)})) == rat(1));
  ExactPoly p({rat(-2), rat(-5), rat(1)});
  CHECK(resultant(p, ExactPoly({rat(-1), rat(1)})) == rat(-6));
  CHECK_THROWS(resultant(ExactPoly({rat(1), rat(2)}), xm2));  // non-monic rejected
}

TEST_CASE("resultant antisymmetry and gcd link") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int dp = 1 + static_cast<int>(rng.uniform_int(0, 5));
    int dq = 1 + static_cast<int>(rng.uniform_int(0, 5));
    ExactPoly p = random_monic(dp, 6, rng);
    ExactPoly q = random_monic(dq, 6, rng);
    Rational lhs = resultant(p, q);
    Rational rhs = resultant(q, p);
    if ((dp * dq) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
    bool coprime = poly_gcd(p, q).degree() == 0;
    CHECK((lhs != 0) == coprime);
  }
  // a forced common factor
  ExactPoly f({rat(-7), rat(1)});
  ExactPoly p = random_monic(3, 5, rng) * f;
  ExactPoly q = random_monic(2, 5, rng) * f;
  CHECK(resultant(p, q) == 0);
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  Rng rng(7);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      ExactMatrix m = random_matrix(n, 10, rng);
      CHECK(charpoly(m).eval(m).is_zero());
    }
  }
}

TEST_CASE("minpoly") {
  CHECK(minpoly(ExactMatrix::identity(3)) == ExactPoly({rat(-1), rat(1)}));
  CHECK(minpoly(ExactMatrix::diagonal({rat(1), rat(2)})) == ExactPoly({rat(2), rat(-3), rat(1)}));
  ExactMatrix nil(3);
  nil.at(1, 0) = 1;
  nil.at(2, 1) = 1;
  CHECK(minpoly(nil) == ExactPoly::monomial(3));
}

TEST_CASE("minpoly divides charpoly") {
  Rng rng(9);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      ExactMatrix m = random_matrix(n, 8, rng);
      ExactPoly q, r;
      ExactPoly::divmod(charpoly(m), minpoly(m), q, r);
      CHECK(r.is_zero());
    }
  }
  // irregular input: repeated scalar blocks
  ExactMatrix rep = ExactMatrix::diagonal({rat(3), rat(3), rat(3)});
  CHECK(minpoly(rep).degree() == 1);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(ExactMatrix::identity(3)).empty());
  auto z = kernel_basis(ExactMatrix::zero(2));
  CHECK(z.size() == 2);
  ExactMatrix m(2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 0) = 2;
  m.at(1, 1) = 2;
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] * 1 + k[0][1] * 1 == 0);  // lies in the kernel of (1,1)
}

TEST_CASE("det matches cofactor expansion on small cases") {
  CHECK(det(from_longs(2, {1, 2, 3, 4})) == rat(-2));
  CHECK(det(from_longs(3, {2, 0, 1, -1, 3, 2, 4, 1, 0})) == rat(-17));
  Rng rng(3);
  // det of product = product of dets
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix a = random_matrix(4, 6, rng), b = random_matrix(4, 6, rng);
    CHECK(det(a * b) == det(a) * det(b));
  }
}
