// Dependency statistics between a sampled parameter and the run output:
// normalized cross-correlation, its order-m power variant for even
// nonlinear effects, and the two-sided significance of a correlation under
// the Student-t null.
#ifndef WSNSENSE_STATS_HPP
#define WSNSENSE_STATS_HPP

#include <cstddef>
#include <vector>

namespace wsnsense {

struct Series {
  std::vector<double> values;
  double mean = 0.0;

  static Series from(std::vector<double> values);
  std::size_t size() const { return values.size(); }
};

// Normalized cross-correlation
//   sum((x_i - mx)(y_i - my)) / sqrt(sum((x_i-mx)^2) * sum((y_i-my)^2)),
// two-pass, clamped to [-1, 1]. Requires equal lengths, M >= 3, and both
// series non-constant (DegenerateInputError otherwise).
double linear_corr(const Series& x, const Series& y);

// linear_corr applied to the element-wise order-th powers of both series.
// order == 1 reduces exactly to linear_corr; order == 2 captures even
// nonlinear dependency (a perfectly correlated pair of squares gives +-1).
double order_m_corr(const Series& x, const Series& y, int order);

// Two-sided p-value for the null of no linear association: the t statistic
// r*sqrt((M-2)/(1-r^2)) with M-2 degrees of freedom, evaluated through the
// identity p = I_{1-r^2}((M-2)/2, 1/2). r = +-1 maps to exactly 0, r = 0 to
// exactly 1.
double corr_p_value(double r, std::size_t m);

// Regularized incomplete beta function I_x(a, b) by continued fraction
// (modified Lentz), absolute accuracy around 1e-12 over this library's
// argument range. Exposed for verification against quadrature oracles.
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace wsnsense

#endif
