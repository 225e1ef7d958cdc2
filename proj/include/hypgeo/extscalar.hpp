#ifndef HYPGEO_EXTSCALAR_HPP
#define HYPGEO_EXTSCALAR_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hypgeo/errors.hpp"

namespace hypgeo {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Extended real line: the reals plus two new elements +inf and -inf with
// the operational rules
//   inf + inf = inf,  -inf + (-inf) = -inf,  inf + (-inf) = 0,
//   +-inf + a = +-inf,  inf*inf = (-inf)*(-inf) = inf,  a*(+-inf) = +-inf.
// The infinities are tags, not IEEE values, so inf + (-inf) = 0 is exact.
enum class ExtTag : std::uint8_t { Finite, PlusInf, MinusInf };

struct ExtReal {
  ExtTag tag = ExtTag::Finite;
  double value = 0.0;  // meaningful only when tag == Finite

  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : tag(ExtTag::Finite), value(v) {}

  static constexpr ExtReal plus_inf() { return ExtReal(ExtTag::PlusInf); }
  static constexpr ExtReal minus_inf() { return ExtReal(ExtTag::MinusInf); }

  constexpr bool finite() const { return tag == ExtTag::Finite; }
  constexpr bool infinite() const { return tag != ExtTag::Finite; }
  // Sign of an infinite element: +1 or -1.
  constexpr int inf_sign() const { return tag == ExtTag::PlusInf ? +1 : -1; }

  friend constexpr bool operator==(ExtReal a, ExtReal b) {
    if (a.tag != b.tag) return false;
    return a.finite() ? a.value == b.value : true;
  }

  // Linear order: -inf < finite < +inf.
  friend constexpr bool operator<(ExtReal a, ExtReal b) {
    if (a.tag == ExtTag::MinusInf) return b.tag != ExtTag::MinusInf;
    if (a.tag == ExtTag::PlusInf) return false;
    if (b.tag == ExtTag::PlusInf) return true;
    if (b.tag == ExtTag::MinusInf) return false;
    return a.value < b.value;
  }
  friend constexpr bool operator>(ExtReal a, ExtReal b) { return b < a; }
  friend constexpr bool operator<=(ExtReal a, ExtReal b) { return !(b < a); }
  friend constexpr bool operator>=(ExtReal a, ExtReal b) { return !(a < b); }

 private:
  constexpr explicit ExtReal(ExtTag t) : tag(t), value(0.0) {}
};

ExtReal ext_add(ExtReal x, ExtReal y);
ExtReal ext_neg(ExtReal x);
ExtReal ext_sub(ExtReal x, ExtReal y);
// Throws UndefinedProduct for 0 * (+-inf).
ExtReal ext_mul(ExtReal x, ExtReal y);

// Complex scalar whose real part lives on the extended real line. Carries
// lengths and angles such as d + (pi/2)i. Normalization: an infinite real
// part absorbs any imaginary part, +-inf + bi = +-inf + 0i.
struct ExtScalar {
  ExtReal re;
  double im = 0.0;

  constexpr ExtScalar() = default;
  constexpr ExtScalar(double r) : re(r) {}
  ExtScalar(ExtReal r, double i = 0.0) : re(r), im(r.finite() ? i : 0.0) {}
  ExtScalar(double r, double i) : re(r), im(i) {}
  ExtScalar(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  static ExtScalar plus_inf() { return ExtScalar(ExtReal::plus_inf()); }
  static ExtScalar minus_inf() { return ExtScalar(ExtReal::minus_inf()); }

  bool finite() const { return re.finite(); }
  bool is_real(double tol = 0.0) const {
    return !finite() || std::abs(im) <= tol;
  }
  // Finite value as std::complex; asserts finiteness in debug builds.
  std::complex<double> cplx() const;

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    return a.re == b.re && (!a.re.finite() || a.im == b.im);
  }
};

ExtScalar scalar_add(const ExtScalar& x, const ExtScalar& y);
ExtScalar scalar_neg(const ExtScalar& x);
ExtScalar scalar_sub(const ExtScalar& x, const ExtScalar& y);
// Multiplication by a finite real factor (alpha * (+-inf) = +-inf).
ExtScalar scalar_scale(double a, const ExtScalar& x);

// Sum of a list. Infinite terms are combined first (at most two are allowed,
// a +inf/-inf pair cancels to zero), then the finite terms are accumulated;
// this makes the result independent of the order of the terms. Three or more
// infinite terms raise AssociativityViolation.
ExtScalar scalar_sum(std::span<const ExtScalar> terms);
ExtScalar scalar_sum(std::initializer_list<ExtScalar> terms);

// Hyperbolic functions extended by cosh(+-inf) = inf, sinh(+-inf) = +-inf,
// tanh(+-inf) = +-1; finite arguments use the complex-analytic functions.
ExtScalar ext_cosh(const ExtScalar& x);
ExtScalar ext_sinh(const ExtScalar& x);
ExtScalar ext_tanh(const ExtScalar& x);

// Max residual of the three identities sinh a = (1/i) sin(ia),
// cosh a = cos(ia), tanh a = (1/i) tan(ia) at a finite argument.
double connect_trig_residual(const ExtScalar& x);

}  // namespace hypgeo

#endif
