#include "artin/log_integral.hpp"

#include <cmath>

#include "artin/errors.hpp"

namespace artin {

namespace {

double integrand(double t) { return 1.0 / std::log(t); }

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(double a, double fa, double b, double fb, double m, double fm, double whole,
                double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = integrand(lm), frm = integrand(rm);
    double left = simpson(a, fa, flm, m, fm);
    double right = simpson(m, fm, frm, b, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double log_integral(double x) {
    if (x < 2.0) throw DomainError("log_integral requires x >= 2");
    if (x == 2.0) return 0.0;
    double a = 2.0, b = x;
    double fa = integrand(a), fb = integrand(b), m = 0.5 * (a + b), fm = integrand(m);
    double whole = simpson(a, fa, fm, b, fb);
    return adaptive(a, fa, b, fb, m, fm, whole, 1e-9, 60);
}

} // namespace artin
