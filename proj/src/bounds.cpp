#include "cayspec/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace cayspec {

namespace {

// h^pow / (scale * d^8), exact when the reduced rational fits 64 bits
double power_fraction(const Rational& h, int pow, std::int64_t scale, int d) {
  try {
    Rational num = h;
    for (int i = 1; i < pow; ++i) num = num * h;
    Rational den(scale);
    for (int i = 0; i < 8; ++i) den = den * Rational(d);
    return (num / den).value();
  } catch (const std::overflow_error&) {
    return std::pow(h.value(), pow) / (static_cast<double>(scale) * std::pow(d, 8));
  }
}

}  // namespace

BoundParams BoundParams::make(const Rational& epsilon, int d, double zeta) {
  BoundParams p = make(epsilon, d);
  p.zeta = zeta;
  p.beta = static_cast<double>(d) * d * std::sqrt(2.0 * zeta * (2.0 - zeta));
  return p;
}

BoundParams BoundParams::make(const Rational& epsilon, int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  BoundParams p;
  p.epsilon = epsilon;
  p.d = d;
  p.ell = power_fraction(epsilon, 4, 512, d);
  p.tau = static_cast<double>(d) * d * std::sqrt(2.0 * p.ell * (2.0 - p.ell));
  const double e = epsilon.value();
  p.r = 1.0 - (d * p.tau / (e * e)) * (e + d + 2.0);
  return p;
}

double main_lower_bound(const Rational& h, int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  return -1.0 + power_fraction(h, 4, 512, d);
}

double upper_gap_bound(const Rational& h, int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  try {
    return 1.0 - ((h * h) / (Rational(2) * Rational(d) * Rational(d))).value();
  } catch (const std::overflow_error&) {
    const double hv = h.value();
    return 1.0 - hv * hv / (2.0 * d * d);
  }
}

const std::vector<SharpRow>& sharp_table() {
  static const std::vector<SharpRow> rows = {{477, 3},  {330, 4}, {257, 5}, {214, 6},
                                             {187, 7},  {167, 8}, {153, 9}, {142, 10}};
  return rows;
}

std::optional<SharpRow> sharp_row_for_degree(int d) {
  std::optional<SharpRow> picked;
  for (const SharpRow& row : sharp_table())
    if (row.d0 <= d) picked = row;  // rows ascend in d0, so the last hit is largest
  return picked;
}

std::optional<double> sharp_lower_bound(const Rational& h, int d) {
  const auto row = sharp_row_for_degree(d);
  if (!row) return std::nullopt;
  return -1.0 + power_fraction(h, 4, row->kappa, d);
}

}  // namespace cayspec
