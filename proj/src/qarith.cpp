#include "a2/qarith.hpp"

#include <cmath>

namespace a2 {

double quantum_integer(int m, cplx q) {
  if (m < 0) throw std::invalid_argument("quantum_integer: m must be >= 0");
  if (std::abs(std::abs(q) - 1.0) > 1e-12)
    throw std::invalid_argument("quantum_integer: q must lie on the unit circle");
  double theta = std::arg(q);
  double s = std::sin(theta);
  if (std::abs(s) < 1e-12)
    throw std::domain_error("quantum_integer: degenerate q = +/-1");
  // (q^m - q^-m)/(q - q^-1) = sin(m theta)/sin(theta) for |q| = 1
  return std::sin(m * theta) / s;
}

QParam params_for_coxeter(int n) {
  if (n < 4) throw std::invalid_argument("params_for_coxeter: need n >= 4");
  QParam p;
  p.n = n;
  p.q = std::polar(1.0, M_PI / n);
  p.delta = quantum_integer(2, p.q);
  p.alpha = quantum_integer(3, p.q);
  return p;
}

}  // namespace a2
