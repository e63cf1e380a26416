#pragma once

#include <complex>
#include <stdexcept>
#include <string>

// Quantum integers and root-of-unity parameters shared by all modules.
//
// All scalar arithmetic in this library is double-precision complex.
// Equality of scalars means |a-b| <= eq_tol * max(1,|a|,|b|); ranks of
// Gram matrices use a relative singular-value threshold.  Exact
// cyclotomic arithmetic is deliberately out of scope.

namespace a2 {

using cplx = std::complex<double>;

struct ScalarPolicy {
  double eq_tol = 1e-9;    // absolute/relative scalar comparison tolerance
  double rank_tol = 1e-8;  // relative singular-value threshold for ranks

  bool eq(cplx a, cplx b) const {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= eq_tol * scale;
  }
  bool is_zero(cplx a) const { return eq(a, cplx(0.0)); }
  bool is_real(cplx a) const {
    return std::abs(a.imag()) <= eq_tol * std::max(1.0, std::abs(a));
  }
};

// [m]_q = (q^m - q^-m)/(q - q^-1).  For q = e^{i pi/n} this equals
// sin(m pi/n)/sin(pi/n), which is the numerically stable form used here.
double quantum_integer(int m, cplx q);

// Parameters at a Coxeter number n >= 4: q = e^{i pi/n}, delta = [2]_q,
// alpha = [3]_q = delta^2 - 1.
struct QParam {
  int n = 0;
  cplx q;
  double delta = 0.0;
  double alpha = 0.0;
};

QParam params_for_coxeter(int n);

}  // namespace a2
