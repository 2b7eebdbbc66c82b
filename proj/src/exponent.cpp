#include "ggplab/exponent.hpp"

#include <stdexcept>

namespace ggplab {

namespace {

// 2A = (4(n+1)^2 - 2n + 1)(n+1), an integer for every n >= 1
long long two_a(int n) {
  long long m = n + 1;
  return (4 * m * m - 2 * n + 1) * m;
}

}  // namespace

double exponent_calculator(int n, double theta) {
  if (n < 1) throw std::invalid_argument("exponent_calculator: n >= 1 required");
  if (theta < 0 || theta >= 0.5)
    throw std::invalid_argument("exponent_calculator: theta in [0, 1/2) required");
  double a = 0.5 * static_cast<double>(two_a(n));
  return (1 - 2 * theta) / (4 * (a + 1 - 2 * theta));
}

long long exponent_reciprocal_main(int n) { return 2 * two_a(n) + 4; }

long long exponent_reciprocal_corollary(int n) {
  long long m = n + 1;
  return 4 * n * m * two_a(n) + 8 * n * m;
}

}  // namespace ggplab
