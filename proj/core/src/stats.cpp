#include "wsnsense/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wsnsense/errors.hpp"

namespace wsnsense {

namespace {

// Continued fraction for the incomplete beta function, evaluated with the
// modified Lentz scheme.
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;

  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;

  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;

    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction stalled");
}

double powered(double v, int order) {
  double r = v;
  for (int k = 1; k < order; ++k) r *= v;
  return r;
}

void require_pair(const Series& x, const Series& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("series lengths differ");
  if (x.size() < 3)
    throw std::invalid_argument("correlation needs at least 3 samples");
}

}  // namespace

Series Series::from(std::vector<double> values) {
  Series s;
  s.values = std::move(values);
  double sum = 0.0;
  for (double v : s.values) sum += v;
  s.mean = s.values.empty() ? 0.0 : sum / static_cast<double>(s.values.size());
  return s;
}

double linear_corr(const Series& x, const Series& y) {
  require_pair(x, y);
  const std::size_t m = x.size();

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = x.values[i] - x.mean;
    const double dy = y.values[i] - y.mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0)
    throw DegenerateInputError("first series is constant");
  if (syy == 0.0)
    throw DegenerateInputError("second series is constant");

  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

double order_m_corr(const Series& x, const Series& y, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  require_pair(x, y);

  std::vector<double> xp(x.size()), yp(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    xp[i] = powered(x.values[i], order);
    yp[i] = powered(y.values[i], order);
  }
  return linear_corr(Series::from(std::move(xp)), Series::from(std::move(yp)));
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("incomplete beta needs a, b > 0");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("incomplete beta needs x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  double result;
  if (x < (a + 1.0) / (a + b + 2.0)) {
    result = front * beta_cf(a, b, x) / a;
  } else {
    result = 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
  }
  return std::clamp(result, 0.0, 1.0);
}

double corr_p_value(double r, std::size_t m) {
  if (m < 3)
    throw std::invalid_argument("p-value needs at least 3 samples");
  if (std::isnan(r) || r < -1.0 || r > 1.0)
    throw std::invalid_argument("correlation outside [-1, 1]");
  if (r == 1.0 || r == -1.0) return 0.0;

  // Two-sided tail of t = r*sqrt(nu/(1-r^2)) with nu = m-2 degrees of
  // freedom; nu/(nu + t^2) simplifies to 1 - r^2.
  const auto nu = static_cast<double>(m - 2);
  return regularized_incomplete_beta(nu / 2.0, 0.5, 1.0 - r * r);
}

}  // namespace wsnsense
