#include "hypgeo/trig.hpp"

#include <cassert>
#include <cmath>

namespace hypgeo {

namespace {

using cplx = std::complex<double>;
const cplx kI{0.0, 1.0};

bool real_like(const cplx& z, double tol = 1e-13) {
  return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z.real()));
}

}  // namespace

ExtScalar angle_from_cos(cplx c, double clamp_tol) {
  if (real_like(c)) {
    const double x = c.real();
    if (std::abs(x) <= 1.0 + clamp_tol)
      return ExtScalar(std::acos(std::clamp(x, -1.0, 1.0)));
  }
  return ExtScalar(std::acos(c));
}

ExtScalar length_from_cosh(cplx c, double clamp_tol) {
  if (real_like(c)) {
    const double x = c.real();
    if (x >= 1.0 - clamp_tol) return ExtScalar(std::acosh(std::max(1.0, x)));
  }
  return ExtScalar(std::acosh(c));
}

ExtScalar length_from_tanh(cplx c, double clamp_tol) {
  if (real_like(c)) {
    const double x = c.real();
    if (std::abs(std::abs(x) - 1.0) <= clamp_tol)
      return x > 0 ? ExtScalar::plus_inf() : ExtScalar::minus_inf();
    if (std::abs(x) < 1.0) return ExtScalar(std::atanh(x));
  }
  return ExtScalar(std::atanh(c));
}

TriangleData TriangleData::from_sides(const ExtScalar& a, const ExtScalar& b,
                                      const ExtScalar& c) {
  if (!a.finite() || !b.finite() || !c.finite())
    throw GeometryError("triangle from sides needs finite side lengths");
  TriangleData t;
  t.a = a; t.b = b; t.c = c;
  const cplx sa = std::sinh(a.cplx()), sb = std::sinh(b.cplx()),
             sc = std::sinh(c.cplx());
  const cplx ca = std::cosh(a.cplx()), cb = std::cosh(b.cplx()),
             cc = std::cosh(c.cplx());
  if (std::abs(sb * sc) == 0.0 || std::abs(sa * sc) == 0.0 ||
      std::abs(sa * sb) == 0.0)
    throw DegenerateTriangle("zero side");
  t.alpha = angle_from_cos((cb * cc - ca) / (sb * sc));
  t.beta = angle_from_cos((ca * cc - cb) / (sa * sc));
  t.gamma = angle_from_cos((ca * cb - cc) / (sa * sb));
  t.s = scalar_scale(0.5, scalar_sum({a, b, c}));
  t.delta = scalar_scale(
      0.5, scalar_sub(ExtScalar(kPi),
                      scalar_sum({t.alpha, t.beta, t.gamma})));
  return t;
}

ExtScalar side_from_cosine_law(const ExtScalar& a, const ExtScalar& b,
                               const ExtScalar& gamma) {
  assert(gamma.finite());
  if (!a.finite() || !b.finite()) return ExtScalar::plus_inf();
  const cplx v = std::cosh(a.cplx()) * std::cosh(b.cplx()) -
                 std::sinh(a.cplx()) * std::sinh(b.cplx()) *
                     std::cos(gamma.cplx());
  return length_from_cosh(v);
}

ExtScalar angle_from_dual_cosine_law(const ExtScalar& alpha,
                                     const ExtScalar& beta,
                                     const ExtScalar& c) {
  assert(alpha.finite() && beta.finite() && c.finite());
  const cplx v = -std::cos(alpha.cplx()) * std::cos(beta.cplx()) +
                 std::sin(alpha.cplx()) * std::sin(beta.cplx()) *
                     std::cosh(c.cplx());
  return angle_from_cos(v);
}

double sine_law_residual(const TriangleData& t) {
  const cplx sa = std::sinh(t.a.cplx()), sb = std::sinh(t.b.cplx()),
             sc = std::sinh(t.c.cplx());
  const cplx na = std::sin(t.alpha.cplx()), nb = std::sin(t.beta.cplx()),
             nc = std::sin(t.gamma.cplx());
  double r = std::abs(sa * nb - sb * na);
  r = std::max(r, std::abs(sb * nc - sc * nb));
  r = std::max(r, std::abs(sc * na - sa * nc));
  return r;
}

ExtScalar defect_area(const TriangleData& t) {
  return scalar_sub(ExtScalar(kPi),
                    scalar_sum({t.alpha, t.beta, t.gamma}));
}

ExtScalar area_via_height(const ExtScalar& a1, const ExtScalar& a2,
                          const ExtScalar& m_a) {
  // The height splits the triangle into two right triangles with
  // tan(T_i/2) = tanh(a_i/2) tanh(m_a/2); the halves add under atan.
  const cplx tm = std::tanh(0.5 * m_a.cplx());
  const cplx t1 = std::tanh(0.5 * a1.cplx()) * tm;
  const cplx t2 = std::tanh(0.5 * a2.cplx()) * tm;
  return ExtScalar(2.0 * (std::atan(t1) + std::atan(t2)));
}

ExtScalar heron_area(const ExtScalar& a, const ExtScalar& b,
                     const ExtScalar& c) {
  const cplx s = 0.5 * (a.cplx() + b.cplx() + c.cplx());
  const cplx prod = std::tanh(0.5 * s) * std::tanh(0.5 * (s - a.cplx())) *
                    std::tanh(0.5 * (s - b.cplx())) *
                    std::tanh(0.5 * (s - c.cplx()));
  if (real_like(prod, 1e-12) && prod.real() <= 0.0) return ExtScalar(0.0);
  return ExtScalar(4.0 * std::atan(std::sqrt(prod)));
}

LambertData lambert_solve(const ExtScalar& a, const ExtScalar& d) {
  assert(a.finite() && d.finite() && a.is_real(0.0) && d.is_real(0.0));
  const double av = a.re.value, dv = d.re.value;
  const double p = std::sinh(av) * std::sinh(dv);
  if (p > 1.0 + 1e-12)
    throw NoRealSolution("lambert quadrangle: sinh a sinh d > 1");
  LambertData q;
  q.a = a;
  q.d = d;
  q.b = length_from_tanh(cplx(std::tanh(dv) * std::cosh(av)));
  q.c = length_from_tanh(cplx(std::tanh(av) * std::cosh(dv)));
  q.phi = angle_from_cos(cplx(p));
  return q;
}

double lambert_residuals(const LambertData& q) {
  // Relations with possibly infinite sides are matched through ext values.
  const ExtScalar tb = ext_tanh(q.b), tc = ext_tanh(q.c);
  const ExtScalar sb = ext_sinh(q.b), sc = ext_sinh(q.c);
  const ExtScalar chb = ext_cosh(q.b), chc = ext_cosh(q.c);
  const double av = q.a.re.value, dv = q.d.re.value;
  const double phi = q.phi.re.value;

  auto diff = [](const ExtScalar& x, double y) {
    if (!x.finite()) return std::isinf(y) ? 0.0 : 1e300;
    return std::abs(x.cplx() - cplx(y));
  };
  auto ratio_diff = [](double num, const ExtScalar& den, double target) {
    if (!den.finite()) return std::abs(target);  // finite/inf -> 0
    return std::abs(num / den.cplx() - cplx(target));
  };

  double r = diff(tb, std::tanh(dv) * std::cosh(av));
  r = std::max(r, diff(tc, std::tanh(av) * std::cosh(dv)));
  r = std::max(r, sb.finite() && chc.finite()
                      ? std::abs(sb.cplx() - std::sinh(dv) * chc.cplx())
                      : ((!sb.finite() && !chc.finite()) ? 0.0 : 1e300));
  r = std::max(r, sc.finite() && chb.finite()
                      ? std::abs(sc.cplx() - std::sinh(av) * chb.cplx())
                      : ((!sc.finite() && !chb.finite()) ? 0.0 : 1e300));
  // cos phi = tanh b tanh c = sinh a sinh d
  if (tb.finite() && tc.finite())
    r = std::max(r, std::abs(tb.cplx() * tc.cplx() - cplx(std::cos(phi))));
  r = std::max(r, std::abs(std::sinh(av) * std::sinh(dv) - std::cos(phi)));
  // sin phi = cosh d / cosh b = cosh a / cosh c
  r = std::max(r, ratio_diff(std::cosh(dv), chb, std::sin(phi)));
  r = std::max(r, ratio_diff(std::cosh(av), chc, std::sin(phi)));
  // tan phi = 1/(tanh a sinh b) = 1/(tanh d sinh c)
  r = std::max(r, ratio_diff(1.0 / std::tanh(av), sb, std::tan(phi)));
  r = std::max(r, ratio_diff(1.0 / std::tanh(dv), sc, std::tan(phi)));
  return r;
}

PentagonSides pentagon_solve(const ExtScalar& a, const ExtScalar& b) {
  assert(a.finite() && b.finite());
  const double av = a.re.value, bv = b.re.value;
  const double p = std::sinh(av) * std::sinh(bv);
  if (p <= 1.0 + 1e-12)
    throw NoRealPentagon("right-angled pentagon needs sinh a sinh b > 1");
  const double w = std::sqrt(p * p - 1.0);
  PentagonSides out;
  out.d = ExtScalar(std::acosh(p));
  out.c = ExtScalar(std::asinh(std::cosh(av) / w));
  out.e = ExtScalar(std::asinh(std::cosh(bv) / w));
  return out;
}

namespace {

cplx sin_ext(const ExtScalar& x) {
  assert(x.finite());
  return std::sin(x.cplx());
}

}  // namespace

SineCaseReport extended_sine_check(const ProjPoint& A, const ProjPoint& B,
                                   const ProjPoint& C, double tol) {
  if (C.category != Category::Real)
    throw NotRightAngled("the right-angle vertex C must be a real point");
  const ProjLine lab = join(A, B, tol);
  const ProjLine lac = join(A, C, tol);
  const ProjLine lbc = join(B, C, tol);
  {
    const SegmentPair g = line_angle(lac, lbc, tol);
    const bool right =
        (g.forward.finite() && std::abs(g.forward.cplx() - cplx(kPi / 2)) < 1e-7) ||
        (g.backward.finite() && std::abs(g.backward.cplx() - cplx(kPi / 2)) < 1e-7);
    if (!right) throw NotRightAngled("angle at C is not pi/2");
  }

  SineCaseReport rep;
  rep.label = "A " + to_string(A.category) + ", B " + to_string(B.category) +
              ", AB " + to_string(lab.category);

  const ExtScalar a_len = segment_lengths(B, C, tol).forward;
  const ExtScalar c_len = segment_lengths(A, B, tol).forward;
  const ExtScalar alpha = line_angle(lab, lac, tol).forward;
  const ExtScalar sinh_c = ext_sinh(c_len);
  const ExtScalar sinh_a = ext_sinh(a_len);

  // Angles valued +-inf and products inf * 0 have no numeric content; the
  // convention is that the theorem holds in these configurations.
  if (!alpha.finite() || lab.category == Category::AtInfinity) {
    rep.indeterminate = true;
    return rep;
  }
  const cplx sa = sin_ext(alpha);
  if (!sinh_c.finite()) {
    if (std::abs(sa) < 1e-9) {
      rep.indeterminate = true;
      return rep;
    }
    rep.residual = sinh_a.finite() ? 1e300 : 0.0;
    return rep;
  }
  if (!sinh_a.finite()) {
    rep.residual = 1e300;
    return rep;
  }
  rep.residual = std::abs(sinh_c.cplx() * sa - sinh_a.cplx());
  return rep;
}

}  // namespace hypgeo
