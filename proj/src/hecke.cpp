#include "ggplab/hecke.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ggplab::hecke {

HeckeWord HeckeWord::of(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  HeckeWord w;
  w.a = std::move(v);
  return w;
}

int HeckeWord::sum() const { return std::accumulate(a.begin(), a.end(), 0); }

int v_of(const HeckeWord& w) {
  int s = 0;
  for (int k = 0; k < w.n(); ++k) s += (k + 1) * w.a[k];
  return s;
}

int regularize(SatakeParam& s) {
  int rounds = 0;
  auto singular = [&]() {
    for (int i = 0; i < s.n(); ++i)
      for (int j = i + 1; j < s.n(); ++j)
        if (std::abs(1.0 - s.alpha[i] / s.alpha[j]) < 1e-6) return true;
    return false;
  };
  while (singular() && rounds < 8) {
    ++rounds;
    for (int i = 0; i < s.n(); ++i)
      s.alpha[i] *= 1.0 + 1e-6 * static_cast<double>((i + 1) * rounds);
  }
  return rounds;
}

Complex macdonald_lambda(const SatakeParam& s, const HeckeWord& word) {
  int n = s.n();
  if (word.n() != n) throw std::invalid_argument("macdonald_lambda: rank mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(1.0 - s.alpha[i] / s.alpha[j]) < 1e-8)
        throw std::runtime_error("macdonald_lambda: near-singular Satake parameter");

  double t = 1.0 / s.q;
  // stabilizer normalization: prod over multiplicity groups of
  // prod_{i<=m} (1 - t^i)/(1 - t)
  std::map<int, int> mult;
  for (int x : word.a) mult[x]++;
  double vnorm = 1.0;
  for (auto& [value, m] : mult) {
    (void)value;
    for (int i = 1; i <= m; ++i) vnorm *= (1.0 - std::pow(t, i)) / (1.0 - t);
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum(0);
  do {
    Complex term(1.0, 0.0);
    for (int i = 0; i < n; ++i) term *= std::pow(s.alpha[perm[i]], word.a[i]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Complex ratio = s.alpha[perm[j]] / s.alpha[perm[i]];
        term *= (1.0 - t * ratio) / (1.0 - ratio);
      }
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  double expo = -v_of(word) + 0.5 * (n + 1) * word.sum();
  return std::pow(s.q, expo) * sum / vnorm;
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int valuation(long long x, int p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long long gcdll(long long a, long long b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// gcd of all k x k minors (n <= 3)
long long minor_gcd(const HnfMatrix& m, int k) {
  int n = m.n;
  long long g = 0;
  std::vector<int> ridx(k), cidx(k);
  std::function<void(int, int)> loop_cols = [&](int start, int depth) {
    if (depth == k) {
      long long det = 0;
      if (k == 1) {
        det = m.at(ridx[0], cidx[0]);
      } else if (k == 2) {
        det = m.at(ridx[0], cidx[0]) * m.at(ridx[1], cidx[1]) -
              m.at(ridx[0], cidx[1]) * m.at(ridx[1], cidx[0]);
      } else {
        for (int c = 0; c < 3; ++c) {
          long long sub = m.at(ridx[1], cidx[(c + 1) % 3]) * m.at(ridx[2], cidx[(c + 2) % 3]) -
                          m.at(ridx[1], cidx[(c + 2) % 3]) * m.at(ridx[2], cidx[(c + 1) % 3]);
          det += m.at(ridx[0], cidx[c]) * sub;
        }
      }
      g = gcdll(g, det);
      return;
    }
    for (int c = start; c < n; ++c) {
      cidx[depth] = c;
      loop_cols(c + 1, depth + 1);
    }
  };
  std::function<void(int, int)> loop_rows = [&](int start, int depth) {
    if (depth == k) {
      loop_cols(0, 0);
      return;
    }
    for (int r = start; r < n; ++r) {
      ridx[depth] = r;
      loop_rows(r + 1, depth + 1);
    }
  };
  loop_rows(0, 0);
  return g;
}

// Smith valuation type, sorted non-increasing
std::vector<int> smith_type(const HnfMatrix& m, int p) {
  int n = m.n;
  std::vector<int> d(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    long long g = minor_gcd(m, k);
    if (g == 0) throw std::logic_error("smith_type: singular representative");
    d[k] = valuation(g, p);
  }
  std::vector<int> type(n);
  for (int k = 1; k <= n; ++k) type[k - 1] = d[k] - d[k - 1];
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

}  // namespace

std::vector<HnfMatrix> hnf_cosets(const HeckeWord& a, int p) {
  int n = a.n();
  if (n > 3 || std::abs(a.sum()) > 3 || (p != 2 && p != 3))
    throw std::invalid_argument("hnf_cosets: out of the supported range");
  for (int x : a.a)
    if (x < 0) throw std::invalid_argument("hnf_cosets: word must be nonnegative (shift first)");

  int total = a.sum();
  std::vector<HnfMatrix> out;
  std::vector<int> b(n);
  std::function<void(int, int)> diag_loop = [&](int pos, int left) {
    if (pos == n) {
      if (left != 0) return;
      HnfMatrix m;
      m.n = n;
      m.entry.assign(static_cast<size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) m.at(i, i) = ipow(p, b[i]);
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (b[i] > 0) slots.emplace_back(i, j);
      std::function<void(size_t)> fill = [&](size_t si) {
        if (si == slots.size()) {
          if (smith_type(m, p) == a.a) out.push_back(m);
          return;
        }
        auto [i, j] = slots[si];
        long long mod = ipow(p, b[i]);
        for (long long v = 0; v < mod; ++v) {
          m.at(i, j) = v;
          fill(si + 1);
        }
        m.at(i, j) = 0;
      };
      fill(0);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      b[pos] = v;
      diag_loop(pos + 1, left - v);
    }
  };
  diag_loop(0, total);
  return out;
}

Complex satake_bruteforce(const SatakeParam& s, const HeckeWord& a) {
  int n = s.n();
  int p = static_cast<int>(std::lround(s.q));
  auto cosets = hnf_cosets(a, p);
  Complex sum(0);
  for (const auto& m : cosets) {
    Complex term(1.0, 0.0);
    double expo = 0;
    for (int i = 0; i < n; ++i) {
      int bi = valuation(m.at(i, i), p);
      term *= std::pow(s.alpha[i], bi);
      expo += -0.5 * bi * (n + 1 - 2 * (i + 1));
    }
    sum += term * std::pow(static_cast<double>(p), expo);
  }
  return sum;
}

HeckeCombo amplifier_t(int j, int n_plus_1, double q) {
  if (j < 0) throw std::invalid_argument("amplifier_t: j >= 0 required");
  int n = n_plus_1 - 1;
  std::vector<int> w(n_plus_1, 0);
  w[0] = j;
  HeckeCombo c;
  ComboTerm term;
  term.scale = Complex(std::pow(q, -0.5 * n * j), 0);
  term.omega_pow = 0;
  term.word = HeckeWord::of(w);
  c.terms.push_back(term);
  return c;
}

HeckeCombo adjoint(const HeckeCombo& c) {
  HeckeCombo out;
  for (const auto& t : c.terms) {
    ComboTerm s;
    s.scale = std::conj(t.scale);
    s.omega_pow = -t.omega_pow;
    std::vector<int> neg;
    for (int x : t.word.a) neg.push_back(-x);
    s.word = HeckeWord::of(std::move(neg));
    out.terms.push_back(s);
  }
  return out;
}

HeckeCombo res_omega(const HeckeWord& a) {
  HeckeCombo out;
  std::vector<int> seen;
  for (int idx = 0; idx < a.n(); ++idx) {
    int d = a.a[idx];
    if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
    seen.push_back(d);
    std::vector<int> rest;
    bool removed = false;
    for (int x : a.a) {
      if (!removed && x == d) {
        removed = true;
        continue;
      }
      rest.push_back(x - d);
    }
    ComboTerm term;
    term.scale = Complex(1, 0);
    term.omega_pow = -d;
    term.word = HeckeWord::of(std::move(rest));
    out.terms.push_back(term);
  }
  return out;
}

Complex eval_combo(const HeckeCombo& c, const SatakeParam& s, Complex omega) {
  Complex acc(0);
  for (const auto& t : c.terms)
    acc += t.scale * std::pow(omega, t.omega_pow) * macdonald_lambda(s, t.word);
  return acc;
}

SatakeParam random_unitary_satake(int n, double q, Rng& rng) {
  SatakeParam s;
  s.q = q;
  for (int i = 0; i < n; ++i) s.alpha.push_back(std::polar(1.0, rng.uniform(0, 6.283185307179586)));
  regularize(s);
  return s;
}

SatakeParam random_tempered_satake(int n, double q, double theta, Rng& rng) {
  SatakeParam s;
  s.q = q;
  // exponents in [-1, 1] with zero sum, so |alpha_i| ranges over
  // [q^-theta, q^theta] with unimodular product
  std::vector<double> u(n);
  double mean = 0;
  for (int i = 0; i < n; ++i) {
    u[i] = rng.uniform(-1, 1);
    mean += u[i] / n;
  }
  double peak = 0;
  for (int i = 0; i < n; ++i) peak = std::max(peak, std::abs(u[i] - mean));
  double rescale = (peak > 1.0) ? 1.0 / peak : 1.0;
  for (int i = 0; i < n; ++i)
    s.alpha.push_back(std::polar(std::pow(q, theta * (u[i] - mean) * rescale),
                                 rng.uniform(0, 6.283185307179586)));
  regularize(s);
  return s;
}

BmReport bm_decomposition_solve(int j, int n_plus_1, double q, int samples, std::uint64_t seed) {
  BmReport rep;
  rep.j = j;
  int n = n_plus_1 - 1;
  int unknowns = j + 1;
  if (samples < 3 * unknowns) samples = 3 * unknowns;

  Eigen::MatrixXcd design(samples, unknowns);
  Eigen::VectorXcd rhs(samples);
  HeckeCombo tj = amplifier_t(j, n_plus_1, q);
  HeckeCombo tjs = adjoint(tj);
  for (int sidx = 0; sidx < samples; ++sidx) {
    Rng rng(seed, sidx);
    SatakeParam s = random_unitary_satake(n_plus_1, q, rng);
    rhs(sidx) = eval_combo(tj, s, Complex(1, 0)) * eval_combo(tjs, s, Complex(1, 0));
    for (int i = 0; i <= j; ++i) {
      std::vector<int> w(n_plus_1, 0);
      w[0] = i;
      w[n_plus_1 - 1] = -i;
      design(sidx, i) =
          std::pow(q, -static_cast<double>(n) * i) * macdonald_lambda(s, HeckeWord::of(w));
    }
  }
  Eigen::VectorXcd c = design.colPivHouseholderQr().solve(rhs);
  double scale = rhs.norm();
  rep.residual = (design * c - rhs).norm() / std::max(scale, 1e-30);
  for (int i = 0; i <= j; ++i) {
    rep.c.push_back(c(i));
    rep.max_c = std::max(rep.max_c, std::abs(c(i)));
  }
  rep.pass = rep.residual <= 1e-8 && rep.max_c <= 100.0;
  return rep;
}

AmplifierScanReport amplifier_lower_bound_scan(int n_plus_1, double q, int samples,
                                               std::uint64_t seed) {
  AmplifierScanReport rep;
  rep.samples = samples;
  rep.min_of_max = std::numeric_limits<double>::infinity();
  std::vector<HeckeCombo> ts;
  for (int j = 1; j <= n_plus_1; ++j) ts.push_back(amplifier_t(j, n_plus_1, q));
  for (int sidx = 0; sidx < samples; ++sidx) {
    Rng rng(seed, sidx);
    SatakeParam s = random_tempered_satake(n_plus_1, q, 0.5, rng);
    double best = 0;
    for (const auto& t : ts) best = std::max(best, std::abs(eval_combo(t, s, Complex(1, 0))));
    rep.min_of_max = std::min(rep.min_of_max, best);
  }
  rep.pass = rep.min_of_max > 0;
  return rep;
}

RestrictionBoundReport tempered_restriction_bound(int j, int n, double q, double theta,
                                                  int samples, std::uint64_t seed) {
  RestrictionBoundReport rep;
  int n_plus_1 = n + 1;
  std::vector<int> tw(n_plus_1, 0);
  tw[0] = j;
  HeckeCombo res_tj = res_omega(HeckeWord::of(tw));
  double tj_scale = std::pow(q, -0.5 * n * j);

  std::vector<int> ti(n_plus_1, 0);
  ti[0] = j;
  ti[n_plus_1 - 1] = -j;
  HeckeCombo res_titi = res_omega(HeckeWord::of(ti));
  double titi_scale = std::pow(q, -static_cast<double>(n) * j);

  for (int sidx = 0; sidx < samples; ++sidx) {
    Rng rng(seed, sidx);
    SatakeParam beta;
    if (sidx % 4 == 0) {
      // boundary magnitudes q^{+-theta}: the bound is a sup over the
      // tempered region and is attained near its edge
      beta.q = q;
      for (int i = 0; i < n; ++i) {
        double sgn = (i % 2 == 0) ? 1.0 : -1.0;
        if (n % 2 == 1 && i == n - 1) sgn = 0.0;
        beta.alpha.push_back(
            std::polar(std::pow(q, theta * sgn), rng.uniform(0, 6.283185307179586)));
      }
      regularize(beta);
    } else {
      beta = random_tempered_satake(n, q, theta, rng);
    }
    Complex omega = std::polar(1.0, rng.uniform(0, 6.283185307179586));
    double v1 = std::abs(eval_combo(res_tj, beta, omega)) * tj_scale;
    double v2 = std::abs(eval_combo(res_titi, beta, omega)) * titi_scale;
    rep.sup_tj = std::max(rep.sup_tj, v1 * std::pow(q, (0.5 - theta) * j));
    rep.sup_titi = std::max(rep.sup_titi, v2 * std::pow(q, (1.0 - 2 * theta) * j));
  }
  rep.finite = std::isfinite(rep.sup_tj) && std::isfinite(rep.sup_titi);
  return rep;
}

}  // namespace ggplab::hecke
