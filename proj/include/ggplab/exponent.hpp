#pragma once

namespace ggplab {

// Subconvexity exponent bound (1 - 2 theta) / (4 (A + 1 - 2 theta)) with
// A = (2 (n+1)^2 - n + 1/2)(n+1).
double exponent_calculator(int n, double theta);

// Exact reciprocals at theta = 0: 4 (A + 1), always an integer.
long long exponent_reciprocal_main(int n);

// Reciprocal of the tempered-case corollary exponent 1 / (8 n (n+1) (A+1)).
long long exponent_reciprocal_corollary(int n);

}  // namespace ggplab
