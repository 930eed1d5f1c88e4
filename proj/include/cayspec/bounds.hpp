#pragma once

#include <optional>
#include <vector>

#include "cayspec/rational.hpp"

namespace cayspec {

// Float slack granted when comparing measured eigenvalues against bound formulas.
constexpr double kCheckMargin = 1e-8;

// Derived quantities shared by the conditional subset checks. All fields are plain
// doubles computed by a fixed expression order, so equal inputs reproduce bit-equal
// outputs.
struct BoundParams {
  Rational epsilon;  // expansion constant used (the exact vertex Cheeger value unless overridden)
  int d = 0;
  double zeta = 0.0;
  double beta = 0.0;  // d^2 sqrt(2 zeta (2 - zeta))
  double ell = 0.0;   // epsilon^4 / (2^9 d^8)
  double tau = 0.0;   // d^2 sqrt(2 ell (2 - ell))
  double r = 0.0;     // 1 - (d tau / epsilon^2)(epsilon + d + 2)

  static BoundParams make(const Rational& epsilon, int d, double zeta);
  static BoundParams make(const Rational& epsilon, int d);  // zeta, beta left at 0
};

// -1 + h^4/(2^9 d^8); the fraction is evaluated in exact rational arithmetic and
// converted to double last (falls back to doubles only if the exact form overflows
// 64-bit reduced terms). h = 0 gives -1.
double main_lower_bound(const Rational& h, int d);

// 1 - h^2/(2 d^2), exact-then-convert as above. h = 0 gives 1.
double upper_gap_bound(const Rational& h, int d);

struct SharpRow {
  int kappa;
  int d0;
};

// the eight (kappa, d0) rows, kappa strictly decreasing, d0 = 3..10
const std::vector<SharpRow>& sharp_table();

// row with the largest d0 <= d; nullopt when d < 3
std::optional<SharpRow> sharp_row_for_degree(int d);

// -1 + h^4/(kappa d^8) for the selected row; nullopt when d < 3
std::optional<double> sharp_lower_bound(const Rational& h, int d);

}  // namespace cayspec
