// Test-only oracles: direct closed-form evaluations kept independent of the
// library's recurrence-based implementations.

#ifndef MOMENTCS_TESTS_ORACLES_HPP
#define MOMENTCS_TESTS_ORACLES_HPP

#include <Eigen/Core>
#include <cmath>
#include <cstdint>

namespace oracles {

// Generalized binomial coefficient over integer arguments, C(a, k) = 0 for
// a < k. Small inputs only; everything stays well inside double range.
inline double binom(int a, int k) {
  if (k < 0 || a < 0 || a < k) return 0.0;
  double v = 1.0;
  for (int i = 0; i < k; ++i) v *= static_cast<double>(a - i) / (i + 1);
  return v;
}

inline double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

// Raw discrete Chebyshev polynomial via term-by-term summation:
// t_n(x) = n! * sum_k (-1)^(n-k) C(N-1-k, n-k) C(n+k, n) C(x, k).
inline double tchebichef_raw(int n, int x, int N) {
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom(N - 1 - k, n - k) * binom(n + k, n) * binom(x, k);
  }
  return factorial(n) * sum;
}

// Row n of the normalized, sign-fixed Tchebichef basis, built purely from
// the summation form above.
inline Eigen::VectorXd tchebichef_row_direct(int n, int N) {
  Eigen::VectorXd row(N);
  for (int x = 0; x < N; ++x) row(x) = tchebichef_raw(n, x, N);
  row /= row.norm();
  if (n >= 1 && row(N - 1) < 0.0) row = -row;
  return row;
}

// Raw Krawtchouk polynomial via the hypergeometric sum:
// K_n(x; p, Np) = sum_k [(-n)_k (-x)_k / (-Np)_k] (1/p)^k / k!.
inline double krawtchouk_raw(int n, int x, double p, int Np) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= static_cast<double>(-(n - (k - 1))) * static_cast<double>(-(x - (k - 1)));
    term /= static_cast<double>(-(Np - (k - 1)));
    term /= p * k;
    sum += term;
  }
  return sum;
}

// Weighted Krawtchouk value: K_n(x) * sqrt(w(x) / rho(n)) with the binomial
// weight w and norm rho(n) = ((1-p)/p)^n / C(Np, n).
inline double krawtchouk_weighted_direct(int n, int x, double p, int N) {
  const int Np = N - 1;
  const double w = binom(Np, x) * std::pow(p, x) * std::pow(1.0 - p, Np - x);
  const double rho = std::pow((1.0 - p) / p, n) / binom(Np, n);
  return krawtchouk_raw(n, x, p, Np) * std::sqrt(w / rho);
}

// Tiny deterministic generator for test fixtures (split-mix style), so the
// frozen expectations do not depend on library RNG choices.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Irwin-Hall approximation is plenty for test vectors.
  double gaussian() {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += uniform();
    return s - 6.0;
  }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace oracles

#endif
