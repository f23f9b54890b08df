#include "haus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace haus {

namespace {

// G7/K15 nodes (positive half) and weights.
constexpr double kNodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813};
constexpr double kWeightK[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785,
    0.169004726639267, 0.140653259715525, 0.104790010322250,
    0.063092092629979, 0.022935322010529};
// Gauss weights aligned with even-index Kronrod nodes.
constexpr double kWeightG[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

template <typename T>
struct Panel {
  double a, b;
  T value;
  double error;
};

template <typename T, typename Fn>
Panel<T> gk15_panel(const Fn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T g{};
  T k{};
  for (int i = 0; i < 8; ++i) {
    T y = f(c + h * kNodes[i]);
    if (i > 0) y += f(c - h * kNodes[i]);
    k += kWeightK[i] * y;
    if (i % 2 == 0) g += kWeightG[i / 2] * y;
  }
  g *= h;
  k *= h;
  // Conservative estimate: the raw G7 vs K15 difference.  Overestimates on
  // smooth panels, which only costs extra splits.
  const double err = std::abs(k - g);
  return {a, b, k, err};
}

template <typename T, typename Fn>
std::pair<T, double> integrate_impl(const Fn& f, double a, double b,
                                    const QuadratureConfig& q,
                                    std::span<const double> breakpoints) {
  if (a == b) return {T{}, 0.0};
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double bp : breakpoints)
    if (bp > a && bp < b) cuts.push_back(bp);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto worse = [](const Panel<T>& x, const Panel<T>& y) {
    if (x.error != y.error) return x.error < y.error;
    return x.a < y.a;  // deterministic tie-break
  };
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, decltype(worse)> heap(
      worse);

  T total{};
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel<T> p = gk15_panel<T>(f, cuts[i], cuts[i + 1]);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  int splits = 0;
  while (total_err > std::max(q.abs_tol, q.rel_tol * std::abs(total)) &&
         splits < q.max_subdivisions) {
    Panel<T> p = heap.top();
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b) continue;  // interval exhausted in doubles
    Panel<T> l = gk15_panel<T>(f, p.a, mid);
    Panel<T> r = gk15_panel<T>(f, mid, p.b);
    total += l.value + r.value - p.value;
    total_err += l.error + r.error - p.error;
    heap.push(l);
    heap.push(r);
    ++splits;
  }
  return {total, total_err};
}

}  // namespace

IntegralEstimate gk15_real(const RealFn& f, double a, double b) {
  auto p = gk15_panel<double>(f, a, b);
  return {p.value, p.error};
}

ComplexIntegralEstimate gk15_complex(const ComplexFn& f, double a, double b) {
  auto p = gk15_panel<std::complex<double>>(f, a, b);
  return {p.value, p.error};
}

IntegralEstimate integrate_real(const RealFn& f, double a, double b,
                                const QuadratureConfig& q,
                                std::span<const double> breakpoints) {
  auto [v, e] = integrate_impl<double>(f, a, b, q, breakpoints);
  return {v, e};
}

ComplexIntegralEstimate integrate_complex(
    const ComplexFn& f, double a, double b, const QuadratureConfig& q,
    std::span<const double> breakpoints) {
  auto [v, e] = integrate_impl<std::complex<double>>(f, a, b, q, breakpoints);
  return {v, e};
}

namespace {

// Shared Cauchy/geometric-decay driver for the two open-ended integrators.
// `block(k)` returns the integral over the k-th block.  Divergence is
// declared after the block increments fail to decay twice in a row.
IntegralEstimate sum_blocks(const std::function<IntegralEstimate(int)>& block,
                            int max_blocks, const QuadratureConfig& q,
                            const char* what) {
  double total = 0.0;
  double err = 0.0;
  double prev = 0.0;
  int decay_failures = 0;
  for (int k = 0; k < max_blocks; ++k) {
    IntegralEstimate b = block(k);
    total += b.value;
    err += b.error;
    const double inc = std::fabs(b.value);
    const double tol = std::max(q.abs_tol, q.rel_tol * std::fabs(total));
    if (k > 0) {
      // Block sums of a geometrically convergent tail shrink by a fixed
      // factor; log-divergent tails produce near-constant increments.
      // Divergence is only declared at depth so that transients from
      // non-singular factors (first few blocks) cannot trip the test.
      if (inc > tol && inc > 0.93 * prev) {
        if (++decay_failures >= 2 && k >= 8) throw DivergentIntegral(what);
      } else {
        decay_failures = 0;
      }
    }
    if (inc <= 0.25 * tol && k > 0 && prev <= 0.5 * tol) {
      // Two negligible blocks in a row: fold the extrapolated geometric
      // remainder into the value, keep its size as the uncertainty.
      const double ratio =
          prev > 0 ? std::min(0.9, inc / std::max(prev, 1e-300)) : 0.5;
      const double tail = b.value * ratio / (1.0 - ratio);
      total += tail;
      err += std::fabs(tail) + inc * 0.25;
      return {total, err};
    }
    prev = inc;
  }
  // Ran out of blocks while still converging geometrically: extrapolate.
  if (prev > std::max(q.abs_tol, q.rel_tol * std::fabs(total)))
    throw OscillatoryTailNotConverged(what);
  err += prev;
  return {total, err};
}

}  // namespace

IntegralEstimate integrate_to_infinity(const RealFn& f, double a,
                                       const QuadratureConfig& q) {
  if (!(a > 0)) throw OutOfRange("integrate_to_infinity requires a > 0");
  QuadratureConfig qb = q;
  qb.abs_tol = q.abs_tol / 8.0;
  auto block = [&](int k) {
    const double lo = a * std::ldexp(1.0, k);
    const double hi = a * std::ldexp(1.0, k + 1);
    return integrate(f, lo, hi, qb);
  };
  return sum_blocks(block, 60, q, "integral over [a,inf) diverges");
}

IntegralEstimate integrate_singular_lower(const RealFn& f, double a, double b,
                                          const QuadratureConfig& q) {
  if (!(b > a)) throw OutOfRange("integrate_singular_lower requires b > a");
  const double len = b - a;
  QuadratureConfig qb = q;
  qb.abs_tol = q.abs_tol / 8.0;
  auto block = [&](int k) {
    const double hi = a + len * std::ldexp(1.0, -k);
    const double lo = a + len * std::ldexp(1.0, -k - 1);
    return integrate(f, lo, hi, qb);
  };
  // 2^-60 * len leaves a remainder below double resolution for our scales.
  return sum_blocks(block, 60, q, "integral diverges at the lower endpoint");
}

}  // namespace haus
