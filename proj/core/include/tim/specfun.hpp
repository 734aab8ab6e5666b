#pragma once

namespace tim::specfun {

/// Stopping rule for the series evaluations.
struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 200;

    void validate() const;
};

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);
/// Gamma(x) for x > 0.
double gamma(double x);

/// Lower incomplete gamma gamma(a, x) = int_0^x t^{a-1} e^{-t} dt, a > 0, x >= 0
/// (not regularized).
///
/// Three regimes: the alternating power series sum (-1)^n x^{a+n} / (n! (a+n))
/// for x <= 1, the positive series e^{-x} x^a sum x^n / (a (a+1) ... (a+n)) up
/// to x < a + 1, and Gamma(a) minus the Lentz continued fraction of the upper
/// function beyond.
double lower_incomplete_gamma(double a, double x, const SeriesControl& ctl = {});

/// Complementary error function.
double erfc(double x);

/// Marcum Q of order 1/2: P{(Z + a)^2 > b^2}, Z ~ N(0, 1), i.e. the upper tail
/// of a one-degree-of-freedom non-central chi-square with non-centrality a^2.
/// Closed form 1/2 [erfc((b - a)/sqrt 2) + erfc((b + a)/sqrt 2)].
double marcum_q_half(double a, double b);

/// Tricomi confluent hypergeometric U(1/2, -j, x), integer j >= 0, x >= 0.
///
/// Evaluated from U(a, b, x) = Gamma(a)^{-1} int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt
/// after t = tan^2(theta):
///   U(1/2, -j, x) = (2/sqrt(pi)) int_0^{pi/2} exp(-x tan^2 theta) cos^{2j+1}(theta) d theta,
/// a finite smooth integral handled by adaptive Gauss-Kronrod.
double tricomi_u_half(int j, double x);

}  // namespace tim::specfun
