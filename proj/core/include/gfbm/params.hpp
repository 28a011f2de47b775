#pragma once

namespace gfbm {

// Parameter regions from the sharp increment-bound dichotomy. In region C the
// variance coefficient c(a,b,H) is the lower constant and a^2+b^2 the upper
// one; region D swaps them. Boundary cases (a*b = 0 or H = 1/2), where the two
// constants coincide, are classified as C by convention.
enum class Regime { C, D };

// The triple (a, b, H) defining Z_t = a*B_t + b*B_{-t} over two-sided
// fractional Brownian motion B with Hurst parameter H.
//
// Construction validates: (a, b) != (0, 0); 0 < H < 1 strictly; and the
// variance coefficient c(a,b,H) = a^2 + b^2 - (2^{2H} - 2)ab must exceed
// 1e-12, since factorization and density code divide by it.
class GfbmParams {
public:
  GfbmParams(double a, double b, double hurst);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double hurst() const noexcept { return hurst_; }

  // c(a,b,H): Var(Z_t) = c(a,b,H) * t^{2H}.
  double variance_coefficient() const noexcept { return var_coef_; }

  Regime regime() const noexcept;

private:
  double a_;
  double b_;
  double hurst_;
  double var_coef_;
};

}  // namespace gfbm
