#include "walkohm/numeric.hpp"

#include <cmath>
#include <numbers>
#include <thread>

namespace walkohm {

double lgamma_lanczos(double x) {
  // Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
  static constexpr double g = 7.0;
  static constexpr double coeff[9] = {
      0.99999999999980993,
      676.5203681218851,
      -1259.1392167224028,
      771.32342877765313,
      -176.61502916214059,
      12.507343278686905,
      -0.13857109526572012,
      9.9843695780195716e-6,
      1.5056327351493116e-7,
  };
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           lgamma_lanczos(1.0 - x);
  }
  const double z = x - 1.0;
  double series = coeff[0];
  for (int i = 1; i < 9; ++i) series += coeff[i] / (z + i);
  const double t = z + g + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(series);
}

namespace {

double pairwise_rec(const double* p, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_rec(p, half) + pairwise_rec(p + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_rec(values.data(), values.size());
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = n * w / workers;
    const std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace walkohm
