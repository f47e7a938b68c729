#pragma once

// Independent reference implementations. Nothing here calls into the
// library's evaluation code.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Fn = std::function<long double(long double)>;

inline Fn linear() {
  return [](long double d) { return d; };
}
inline Fn power(long double r) {
  return [r](long double d) { return d == 0 ? 0.0L : std::pow(d, r); };
}
inline Fn exponential(long double k) {
  return [k](long double d) { return std::expm1(k * d); };
}

// Σ_i Σ_j π_i π_j π_i^α f(|y_i − y_j|), all ordered pairs, long double.
inline long double naive_index(const std::vector<std::int64_t>& pi, const std::vector<double>& y,
                               long double alpha, const Fn& f) {
  long double total = 0.0L;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (std::size_t j = 0; j < pi.size(); ++j) {
      const long double d = std::fabs(static_cast<long double>(y[i]) - y[j]);
      const long double pii = static_cast<long double>(pi[i]);
      total += pii * static_cast<long double>(pi[j]) * std::pow(pii, alpha) * f(d);
    }
  }
  return total;
}

inline __int128 ipow(__int128 base, int e) {
  __int128 r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// g(p, q, α) for integer α as an exact integer ratio.
struct Ratio {
  __int128 num;
  __int128 den;
  long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
};

inline Ratio exact_g(std::int64_t p, std::int64_t q, int alpha) {
  const __int128 P = p;
  const __int128 Q = q;
  const __int128 num = ipow(P, alpha + 1) * Q + P * ipow(Q, alpha + 1) -
                       ipow(P + 1, alpha + 1) * (Q - 2) - (P + 1) * ipow(Q - 2, alpha + 1);
  const __int128 den = ipow(P + 1, alpha + 2) - ipow(P, alpha + 2);
  return {num, den};
}

// Closed forms for the three-group configurations used by the axioms
// (ordered-pair convention, θ = π^α f).
inline long double axiom1_before(long double p, long double q, long double a, long double b,
                                 long double alpha, const Fn& f) {
  return p * q * (std::pow(p, alpha) + std::pow(q, alpha)) * (f(a) + f(b)) +
         2.0L * std::pow(q, alpha + 2) * f(b - a);
}
inline long double axiom1_after(long double p, long double q, long double a, long double b,
                                long double alpha, const Fn& f) {
  return 2.0L * p * q * (std::pow(p, alpha) + std::pow(2.0L * q, alpha)) * f((a + b) / 2.0L);
}
inline long double axiom3_before(long double p, long double q, long double d, long double alpha,
                                 const Fn& f) {
  return 2.0L * (p * q * (std::pow(p, alpha) + std::pow(q, alpha)) * f(d) +
                 std::pow(p, alpha + 2) * f(2.0L * d));
}

}  // namespace oracle
