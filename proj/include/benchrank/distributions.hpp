#pragma once

namespace benchrank {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal upper tail, accurate for large x.
double normal_sf(double x);

/// Inverse standard normal CDF (Wichura's PPND16, AS 241), |error| < 1e-15
/// for p in (0, 1).
double normal_quantile(double p);

/// P(chi-squared with df degrees of freedom >= x), computed through the
/// regularized upper incomplete gamma function Q(df/2, x/2).
double chi_square_sf(double x, int df);

/// Upper tail of the studentized range distribution with k groups and
/// infinite degrees of freedom: P(Q_{k,inf} >= q).
///
/// Evaluated as 1 minus the range CDF
///   F(q) = (2*Phi(q/2) - 1)^k + 2k * int_{q/2}^{8} phi(z) [Phi(z) - Phi(z-q)]^{k-1} dz
/// with the classic fixed 12-point Gauss-Legendre panels (Copenhaver &
/// Holland 1988 lineage, the scheme common statistical packages use).
/// Absolute error is below ~1e-7 for k <= 20; returned values under ~1e-13
/// sit at the quadrature floor of this scheme rather than the true tail.
double studentized_range_sf(double q, int k);

} // namespace benchrank
