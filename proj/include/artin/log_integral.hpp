#pragma once

namespace artin {

// Li(x) = integral from 2 to x of dt/log t, by adaptive Simpson quadrature
// with absolute error below 1e-8. Throws DomainError for x < 2.
double log_integral(double x);

} // namespace artin
