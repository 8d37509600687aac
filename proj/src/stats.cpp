#include "samplekit/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace samplekit::stats {

namespace {

constexpr int kMaxIterations = 2000;
constexpr double kEpsilon = 1e-14;
constexpr double kTiny = 1e-300;

// Lower regularized gamma P(a,x) by power series, for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEpsilon)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q: series failed to converge");
}

// Upper regularized gamma Q(a,x) by modified-Lentz continued fraction, x >= a + 1.
double gamma_q_fraction(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEpsilon)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q: continued fraction failed to converge");
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
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
        if (std::fabs(delta - 1.0) < kEpsilon) return h;
    }
    throw std::runtime_error("incomplete_beta: continued fraction failed to converge");
}

} // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(a) || !std::isfinite(x))
        throw std::invalid_argument("gamma_q: need a > 0 and x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_fraction(a, x);
}

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || x < 0.0 || x > 1.0)
        throw std::invalid_argument("incomplete_beta: need a, b > 0 and x in [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front =
        std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                 b * std::log1p(-x));
    // Symmetry keeps the continued fraction in its fast-converging region.
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
    return 1.0 - front * beta_fraction(b, a, 1.0 - x) / b;
}

double chi_squared_survival(double chi2, std::uint64_t df) {
    if (df == 0) throw std::invalid_argument("chi_squared_survival: df must be >= 1");
    if (chi2 < 0.0) throw std::invalid_argument("chi_squared_survival: chi2 must be >= 0");
    return gamma_q(double(df) / 2.0, chi2 / 2.0);
}

double student_t_two_sided_critical(double confidence, std::uint64_t df) {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("student_t_two_sided_critical: confidence in (0,1)");
    if (df == 0) throw std::invalid_argument("student_t_two_sided_critical: df must be >= 1");
    const double alpha = 1.0 - confidence; // two-sided tail mass
    const double half_df = double(df) / 2.0;
    // P(|T| > t) = I_{df/(df+t^2)}(df/2, 1/2), decreasing in t; bisect.
    const auto two_sided_p = [&](double t) {
        return incomplete_beta(half_df, 0.5, double(df) / (double(df) + t * t));
    };
    double lo = 0.0;
    double hi = 2.0;
    while (two_sided_p(hi) > alpha) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("student_t_two_sided_critical: bracket failed");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (two_sided_p(mid) > alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace samplekit::stats
