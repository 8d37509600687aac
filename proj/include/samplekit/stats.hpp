#pragma once
/*
 * Small dependency-free statistics kernel: regularized incomplete gamma and
 * beta functions, the chi-squared survival function, and two-sided Student-t
 * critical values. Series/continued-fraction evaluation, good to ~1e-10
 * relative over the ranges this library uses (df up to 1e6).
 */

#include <cstdint>

namespace samplekit::stats {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a), a > 0, x >= 0.
double gamma_q(double a, double x);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// P(X >= chi2) for a chi-squared variable with df degrees of freedom.
double chi_squared_survival(double chi2, std::uint64_t df);

/// Two-sided Student-t critical value: t such that P(|T_df| > t) = 1 - confidence.
double student_t_two_sided_critical(double confidence, std::uint64_t df);

} // namespace samplekit::stats
