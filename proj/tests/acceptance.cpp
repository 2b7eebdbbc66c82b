// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance and trial count is pinned here or in the suite defaults.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ggplab/bch.hpp"
#include "ggplab/exponent.hpp"
#include "ggplab/ggp.hpp"
#include "ggplab/rng.hpp"
#include "ggplab/su2.hpp"
#include "ggplab/suites.hpp"

using namespace ggplab;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
             .count() /
         1000.0;
}

void verdict(int idx, const std::string& label, bool pass, const std::string& detail) {
  std::printf("[%2d] %s  %s (%s)\n", idx, pass ? "PASS" : "FAIL", label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool suite_check_passed(const std::vector<report::CheckResult>& checks, const std::string& name,
                        double* value = nullptr, const std::string& key = "") {
  for (const auto& c : checks) {
    if (c.name != name) continue;
    if (value && !key.empty()) {
      auto it = c.measured.find(key);
      if (it != c.measured.end()) *value = it->second;
    }
    return c.pass;
  }
  return false;
}

}  // namespace

int main() {
  // 1: exact determinant identity, n = 1..6, 100 random integer matrices each,
  //    plus the stable nilpotent example in its stated frame
  {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    long long verified = 0;
    for (int n = 1; n <= 6 && pass; ++n) {
      for (int t = 0; t < 100; ++t) {
        Rng rng(0xC0FFEE, static_cast<std::uint64_t>(n) * 100000 + t);
        if (!ggp::verify_detid(ggp::random_element(n, 10, rng)).identity_holds) {
          pass = false;
          break;
        }
        ++verified;
      }
    }
    {
      alg::ExactMatrix tau = ggp::nilpotent_shift(3);
      std::vector<alg::Rational> p, q;
      ggp::nilpotent_example_frame(3, p, q);
      alg::ExactMatrix d = ggp::d_matrix_frame(tau, p, q);
      alg::ExactMatrix expect(3);
      expect.at(0, 1) = alg::rat(-2);
      expect.at(1, 0) = alg::rat(-2);
      expect.at(2, 2) = alg::rat(2);
      pass = pass && (d == expect) && (ggp::delta_frame(tau, p, q) == alg::rat(-8)) &&
             (ggp::delta0_frame(tau, p, q) == alg::rat(1));
    }
    double secs = seconds_since(t0);
    pass = pass && secs <= 60.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%lld matrices exact, nilpotent frame ok, %.1fs", verified,
                  secs);
    verdict(1, "determinantal identity", pass, buf);
  }

  // 2: stability equivalences, 500 random + 50 constructed per n <= 4, exact
  {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    long long discrepancies = 0;
    for (int n = 1; n <= 4; ++n) {
      report::RunConfig cfg;
      cfg.n = n;
      cfg.trials = 500;
      cfg.seed = 0xC0FFEE ^ n;
      auto checks = suites::run_stability(cfg);
      double d = 0;
      if (!suite_check_passed(checks, "stability-equivalences", &d, "discrepancies")) pass = false;
      discrepancies += static_cast<long long>(d);
      if (!suite_check_passed(checks, "irregular-kills-delta")) pass = false;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%lld discrepancies over 4x550 inputs, %.1fs", discrepancies,
                  seconds_since(t0));
    verdict(2, "stability equivalences", pass, buf);
  }

  // 3: homogeneity at t in {2, -3, 1/2} and the moment series to order 10,
  //    50 random matrices per n <= 4, exact
  {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::vector<alg::Rational> ts = {alg::rat(2), alg::rat(-3), alg::rat(1, 2)};
    for (int n = 1; n <= 4 && pass; ++n) {
      for (int t = 0; t < 50 && pass; ++t) {
        Rng rng(0xBEEF, static_cast<std::uint64_t>(n) * 1000 + t);
        ggp::GgpElement e = ggp::random_element(n, 10, rng);
        for (const auto& tv : ts)
          if (!ggp::homogeneity_check(e, tv)) pass = false;
        if (!ggp::moment_series_check(e, 10)) pass = false;
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "exact to order 10, %.1fs", seconds_since(t0));
    verdict(3, "homogeneity and moment series", pass, buf);
  }

  // 4: floating Gram determinant vs exact delta (rel 1e-8) and the
  //    transversal projection floor 1e-6 over 1000 directions
  {
    auto t0 = std::chrono::steady_clock::now();
    report::RunConfig cfg;
    cfg.n = 3;
    cfg.trials = 100;
    auto checks = suites::run_geometry(cfg);
    double worst_rel = 0, min_frac = 0;
    bool pass = suite_check_passed(checks, "gram-float-vs-exact", &worst_rel, "worst_rel_err") &&
                suite_check_passed(checks, "rho-transversality", &min_frac,
                                   "min_transversal_fraction") &&
                suite_check_passed(checks, "tau-splitting");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "gram rel %.2e, min transversal %.2e, %.1fs", worst_rel,
                  min_frac, seconds_since(t0));
    verdict(4, "transversality Gram check", pass, buf);
  }

  // 5: size bound strictly positive over 1000 trials (n = 1, 2) and volume
  //    ratios stable within a factor 2 across r halvings
  {
    auto t0 = std::chrono::steady_clock::now();
    report::RunConfig cfg;
    cfg.n = 2;
    cfg.trials = 1000;
    auto checks = suites::run_volume(cfg);
    double m1 = 0, m2 = 0;
    bool pass = suite_check_passed(checks, "size-bound-n1", &m1, "min_ratio") &&
                suite_check_passed(checks, "size-bound-n2", &m2, "min_ratio") &&
                suite_check_passed(checks, "volume-scaling");
    double secs = seconds_since(t0);
    pass = pass && secs <= 300.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "min ratios %.3e / %.3e, %.1fs", m1, m2, secs);
    verdict(5, "size and volume bounds", pass, buf);
  }

  // 6: BCH support constraint, 1e4 monomials per degree <= 5 on gl2 and gl3
  {
    auto t0 = std::chrono::steady_clock::now();
    report::RunConfig cfg;
    cfg.trials = 10000;
    auto checks = suites::run_star(cfg);
    double v2 = -1, v3 = -1, nc = 0;
    bool pass = suite_check_passed(checks, "support-constraint-gl2", &v2, "violations") &&
                suite_check_passed(checks, "support-constraint-gl3", &v3, "violations");
    suite_check_passed(checks, "support-constraint-gl3", &nc, "negative_control_rate");
    pass = pass && suite_check_passed(checks, "star1-fit");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "violations %g + %g, control rate %.2f, %.1fs", v2, v3, nc,
                  seconds_since(t0));
    verdict(6, "BCH support constraint", pass, buf);
  }

  // 7: character identity after two-constraint calibration, k <= 10,
  //    30-point grid on [0.05, 1.5], relative error <= 1e-6
  {
    auto t0 = std::chrono::steady_clock::now();
    su2::OrbitCalibration cal = su2::calibrate_orbits();
    std::vector<double> grid;
    for (int i = 0; i < 30; ++i) grid.push_back(0.05 + i * (1.45 / 29));
    bool pass = true;
    double worst = 0;
    // quadrature self-test gates the verdict
    for (int k : {0, 5, 10}) {
      su2::OrbitSphere orbit = su2::orbit_for(k, cal);
      su2::Vec3 x(0.3, -0.2, 0.6);
      auto a = su2::orbit_integral(orbit, x, 64);
      auto b = su2::orbit_integral(orbit, x, 128);
      if (std::abs(a - b) > 1e-12 * (1 + std::abs(a))) pass = false;
    }
    for (int k = 0; k <= 10; ++k) {
      auto rep = su2::kirillov_check(k, grid, cal, 64, 1e-6);
      worst = std::max(worst, rep.sup_rel_err);
      if (!rep.pass) pass = false;
    }
    double secs = seconds_since(t0);
    pass = pass && secs <= 30.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "worst rel err %.2e, shift %.6f, %.1fs", worst, cal.shift,
                  secs);
    verdict(7, "Kirillov character identity", pass, buf);
  }

  // 8: trace asymptotics err(h/2)/err(h) <= 0.75 from h = 0.2 over three
  //    halvings, and the first star correction strictly improves composition
  {
    auto t0 = std::chrono::steady_clock::now();
    report::RunConfig cfg;
    cfg.h = 0.2;
    auto checks = suites::run_kirillov(cfg);
    double ratio = 0, e0 = 0, e1 = 0;
    bool trace_ok = suite_check_passed(checks, "trace-asymptotics", &ratio, "worst_ratio");
    bool comp_ok = suite_check_passed(checks, "composition-expansion", &e1, "e1_h");
    suite_check_passed(checks, "composition-expansion", &e0, "e0_h");
    bool pass = trace_ok && comp_ok;
    double secs = seconds_since(t0);
    pass = pass && secs <= 600.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "worst trace ratio %.3f, E0 %.2e -> E1 %.2e, %.1fs", ratio, e0,
                  e1, secs);
    verdict(8, "trace asymptotics and composition", pass, buf);
  }

  // 9: spherical character cross-validation, restriction displays,
  //    convolution decomposition, amplifier floor over 1e4 samples
  {
    auto t0 = std::chrono::steady_clock::now();
    report::RunConfig cfg;
    cfg.trials = 10000;
    cfg.q = 101.0;
    auto checks = suites::run_hecke(cfg);
    double oracle = 0, amp2 = 0;
    bool pass = suite_check_passed(checks, "macdonald-vs-bruteforce", &oracle, "worst_rel_err") &&
                suite_check_passed(checks, "res-omega-displays") &&
                suite_check_passed(checks, "convolution-decomposition") &&
                suite_check_passed(checks, "amplifier-lower-bound", &amp2, "min_of_max_rank2") &&
                suite_check_passed(checks, "tempered-restriction-bounds") &&
                suite_check_passed(checks, "lambda-size-constant");
    double secs = seconds_since(t0);
    pass = pass && secs <= 180.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "oracle rel %.2e, amplifier floor %.3f, %.1fs", oracle, amp2,
                  secs);
    verdict(9, "Hecke cross-validation", pass, buf);
  }

  // 10: closed-form exponent reciprocals for n = 1..10
  {
    report::RunConfig cfg;
    auto checks = suites::run_exponent(cfg);
    bool pass = suite_check_passed(checks, "exponent-reciprocals");
    verdict(10, "exponent calculator", pass, "n = 1..10 exact");
  }

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
