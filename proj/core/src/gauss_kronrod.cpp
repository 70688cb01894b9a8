#include "gauss_kronrod.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace phin::detail {

namespace {

constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  std::complex<double> value;
  double error;
  int depth;
  bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace

GkResult gk_panel(const ComplexFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const std::complex<double> fc = f(c);
  std::complex<double> k = fc * kWk[7];
  std::complex<double> g = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXk[i];
    const std::complex<double> s = f(c - dx) + f(c + dx);
    k += kWk[i] * s;
    if (i % 2 == 1) g += kWg[i / 2] * s;
  }
  GkResult r;
  r.value = k * h;
  r.error = std::abs((k - g) * h);
  r.evaluations = 15;
  r.converged = true;
  return r;
}

GkResult gk_adaptive(const ComplexFn& f, const std::vector<double>& points, const GkLimits& limits) {
  GkResult total;
  std::priority_queue<Segment> heap;
  std::vector<Segment> frozen;
  std::complex<double> sum;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double a = points[i];
    const double b = points[i + 1];
    if (!(b > a)) continue;
    const GkResult p = gk_panel(f, a, b);
    total.evaluations += p.evaluations;
    sum += p.value;
    err += p.error;
    heap.push({a, b, p.value, p.error, 0});
  }
  auto target = [&] { return std::max(limits.abs_tol, limits.rel_tol * std::abs(sum)); };
  std::size_t intervals = heap.size();
  while (!heap.empty() && err > target()) {
    if (intervals >= limits.max_intervals) break;
    Segment s = heap.top();
    heap.pop();
    const double mid = 0.5 * (s.a + s.b);
    if (s.depth >= limits.max_depth || mid <= s.a || mid >= s.b) {
      frozen.push_back(s);
      continue;
    }
    const GkResult l = gk_panel(f, s.a, mid);
    const GkResult r = gk_panel(f, mid, s.b);
    total.evaluations += 30;
    sum += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    heap.push({s.a, mid, l.value, l.error, s.depth + 1});
    heap.push({mid, s.b, r.value, r.error, s.depth + 1});
    ++intervals;
  }
  // Re-sum from the leaves to shed accumulated cancellation in the running totals.
  sum = {};
  err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  for (const Segment& s : frozen) {
    sum += s.value;
    err += s.error;
  }
  total.value = sum;
  total.error = err;
  total.converged = err <= std::max(limits.abs_tol, limits.rel_tol * std::abs(sum));
  return total;
}

}  // namespace phin::detail
