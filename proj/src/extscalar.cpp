#include "hypgeo/extscalar.hpp"

#include <cassert>
#include <cmath>

namespace hypgeo {

ExtReal ext_add(ExtReal x, ExtReal y) {
  if (x.finite() && y.finite()) return ExtReal(x.value + y.value);
  if (x.finite()) return y;
  if (y.finite()) return x;
  if (x.tag == y.tag) return x;
  return ExtReal(0.0);  // inf + (-inf) = 0
}

ExtReal ext_neg(ExtReal x) {
  if (x.finite()) return ExtReal(-x.value);
  return x.tag == ExtTag::PlusInf ? ExtReal::minus_inf() : ExtReal::plus_inf();
}

ExtReal ext_sub(ExtReal x, ExtReal y) { return ext_add(x, ext_neg(y)); }

ExtReal ext_mul(ExtReal x, ExtReal y) {
  if (x.finite() && y.finite()) return ExtReal(x.value * y.value);
  const bool zero_times_inf =
      (x.finite() && x.value == 0.0) || (y.finite() && y.value == 0.0);
  if (zero_times_inf) throw UndefinedProduct("0 * (+-inf) is undefined");
  const int sx = x.finite() ? (x.value > 0 ? +1 : -1) : x.inf_sign();
  const int sy = y.finite() ? (y.value > 0 ? +1 : -1) : y.inf_sign();
  return sx * sy > 0 ? ExtReal::plus_inf() : ExtReal::minus_inf();
}

std::complex<double> ExtScalar::cplx() const {
  assert(finite());
  return {re.value, im};
}

ExtScalar scalar_add(const ExtScalar& x, const ExtScalar& y) {
  ExtReal r = ext_add(x.re, y.re);
  return ExtScalar(r, x.im + y.im);
}

ExtScalar scalar_neg(const ExtScalar& x) {
  return ExtScalar(ext_neg(x.re), -x.im);
}

ExtScalar scalar_sub(const ExtScalar& x, const ExtScalar& y) {
  return scalar_add(x, scalar_neg(y));
}

ExtScalar scalar_scale(double a, const ExtScalar& x) {
  if (x.finite()) return ExtScalar(a * x.re.value, a * x.im);
  return ExtScalar(ext_mul(ExtReal(a), x.re));
}

ExtScalar scalar_sum(std::span<const ExtScalar> terms) {
  int n_inf = 0;
  int inf_balance = 0;
  std::complex<double> fin{0.0, 0.0};
  for (const ExtScalar& t : terms) {
    if (t.finite()) {
      fin += t.cplx();
    } else {
      ++n_inf;
      inf_balance += t.re.inf_sign();
    }
  }
  if (n_inf >= 3)
    throw AssociativityViolation(
        "sum with three or more infinite terms is not associative");
  if (n_inf == 0 || inf_balance == 0) return ExtScalar(fin);
  return inf_balance > 0 ? ExtScalar::plus_inf() : ExtScalar::minus_inf();
}

ExtScalar scalar_sum(std::initializer_list<ExtScalar> terms) {
  return scalar_sum(std::span<const ExtScalar>(terms.begin(), terms.size()));
}

ExtScalar ext_cosh(const ExtScalar& x) {
  if (!x.finite()) return ExtScalar::plus_inf();
  return ExtScalar(std::cosh(x.cplx()));
}

ExtScalar ext_sinh(const ExtScalar& x) {
  if (!x.finite())
    return x.re.inf_sign() > 0 ? ExtScalar::plus_inf() : ExtScalar::minus_inf();
  return ExtScalar(std::sinh(x.cplx()));
}

ExtScalar ext_tanh(const ExtScalar& x) {
  if (!x.finite()) return ExtScalar(double(x.re.inf_sign()));
  return ExtScalar(std::tanh(x.cplx()));
}

double connect_trig_residual(const ExtScalar& x) {
  assert(x.finite());
  const std::complex<double> a = x.cplx();
  const std::complex<double> i{0.0, 1.0};
  double r = std::abs(std::sinh(a) - std::sin(i * a) / i);
  r = std::max(r, std::abs(std::cosh(a) - std::cos(i * a)));
  r = std::max(r, std::abs(std::tanh(a) - std::tan(i * a) / i));
  return r;
}

}  // namespace hypgeo
