#include "hypgeo/measure.hpp"

#include <algorithm>
#include <cmath>

namespace hypgeo {

namespace {

double clamped_acosh(double x) { return std::acosh(std::max(1.0, x)); }

SegmentPair dispatch(const ProjPoint& A, const ProjPoint& B, Category lcat) {
  const double q = minkowski(A.rep, B.rep);
  const Category ca = A.category, cb = B.category;
  const ExtScalar inf = ExtScalar::plus_inf();
  const ExtScalar ninf = ExtScalar::minus_inf();

  if (lcat == Category::Real) {
    if (ca == Category::Real && cb == Category::Real) {
      const double d = clamped_acosh(-q);
      return {ExtScalar(d), ExtScalar(-d, kPi)};
    }
    if (ca == Category::Ideal && cb == Category::Ideal) {
      const double d = clamped_acosh(std::abs(q));
      if (q < 0.0) return {ExtScalar(d, kPi), ExtScalar(-d)};
      return {ExtScalar(-d), ExtScalar(d, kPi)};
    }
    if ((ca == Category::Real && cb == Category::Ideal) ||
        (ca == Category::Ideal && cb == Category::Real)) {
      const double d = std::asinh(std::abs(q));
      const double sigma = q < 0.0 ? 1.0 : -1.0;
      return {ExtScalar(sigma * d, kPi / 2), ExtScalar(-sigma * d, kPi / 2)};
    }
    // One point at infinity: the all-real segment measures +inf, the one
    // through ideal territory -inf.
    return q < 0.0 ? SegmentPair{inf, ninf} : SegmentPair{ninf, inf};
  }

  if (lcat == Category::AtInfinity) {
    if (ca == Category::Ideal && cb == Category::Ideal) {
      // The infinite point of the tangent line splits the segments into
      // (pi i, 0); it lies in the forward segment iff q < 0.
      if (q < 0.0) return {ExtScalar(0.0, kPi), ExtScalar(0.0)};
      return {ExtScalar(0.0), ExtScalar(0.0, kPi)};
    }
    // Infinite-ideal pair on a line at infinity.
    return {ExtScalar(0.0, kPi / 2), ExtScalar(0.0, kPi / 2)};
  }

  // Ideal line: only ideal points live here; the lengths are the angle of
  // the polars times i.
  const double theta = std::acos(std::clamp(q, -1.0, 1.0));
  return {ExtScalar(0.0, theta), ExtScalar(0.0, kPi - theta)};
}

}  // namespace

SegmentPair segment_lengths(const ProjPoint& A, const ProjPoint& B,
                            double tol) {
  if (same_projective(A.rep, B.rep, tol))
    throw CoincidentPoints("segment lengths of coincident points");
  ProjLine l = [&] {
    try {
      return join(A, B, tol);
    } catch (const CoincidentArguments&) {
      throw CoincidentPoints("segment lengths of coincident points");
    }
  }();
  return dispatch(A, B, l.category);
}

SegmentPair segment_lengths_on_line(const ProjPoint& A, const ProjPoint& B,
                                    const ProjLine& l, double tol) {
  if (!incident(A, l, std::max(tol, 1e-7)) || !incident(B, l, std::max(tol, 1e-7)))
    throw GeometryError("points are not on the given line");
  if (same_projective(A.rep, B.rep, tol)) {
    if (l.category == Category::AtInfinity &&
        A.category == Category::AtInfinity &&
        B.category == Category::AtInfinity)
      return {ExtScalar(0.0), ExtScalar(0.0, kPi)};
    throw CoincidentPoints("segment lengths of coincident points");
  }
  return dispatch(A, B, l.category);
}

ExtScalar distance(const ProjPoint& A, const ProjPoint& B, double tol) {
  return segment_lengths(A, B, tol).forward;
}

namespace {

// angle = segment / i, except that the pair of ultraparallel real lines
// (dual pair: two ideal points on a real line) takes the conjugate branch,
// matching the convention that their angle is p/i = -p*i.
ExtScalar seg_over_i(const ExtScalar& v, bool conjugate) {
  if (!v.finite()) return v;  // infinite angles stay infinite
  const double re = v.im;
  const double im = -v.re.value;
  return conjugate ? ExtScalar(re, -im) : ExtScalar(re, im);
}

}  // namespace

SegmentPair line_angle(const ProjLine& a, const ProjLine& b, double tol) {
  if (same_projective(a.rep, b.rep, tol))
    throw CoincidentLines("angle of coincident lines");
  const ProjPoint A = pole(a, tol);
  const ProjPoint B = pole(b, tol);
  ProjLine dual = [&] {
    try {
      return join(A, B, tol);
    } catch (const CoincidentArguments&) {
      throw CoincidentLines("angle of coincident lines");
    }
  }();
  const SegmentPair seg = dispatch(A, B, dual.category);
  const bool ultrap = A.category == Category::Ideal &&
                      B.category == Category::Ideal &&
                      dual.category == Category::Real;
  return {seg_over_i(seg.forward, ultrap), seg_over_i(seg.backward, ultrap)};
}

namespace {

// |x - y| where segment values are compared modulo the full line length pi*i.
double diff_mod_line(const ExtScalar& x, const ExtScalar& y) {
  if (!x.finite() || !y.finite()) {
    if (!x.finite() && !y.finite())
      return x.re.inf_sign() == y.re.inf_sign() ? 0.0 : 1e300;
    return 1e300;
  }
  const double dre = x.re.value - y.re.value;
  double dim = std::fmod(x.im - y.im, kPi);
  if (dim > kPi / 2) dim -= kPi;
  if (dim < -kPi / 2) dim += kPi;
  return std::hypot(dre, dim);
}

ExtScalar times_i(const ExtScalar& v) {
  if (!v.finite()) return v;  // i * (+-inf angle) stays the infinite length
  return ExtScalar(-v.im, v.re.value);
}

}  // namespace

double duality_check(const ProjPoint& A, const ProjPoint& B, double tol) {
  const SegmentPair seg = segment_lengths(A, B, tol);
  const SegmentPair ang = line_angle(polar(A, tol), polar(B, tol), tol);
  const ExtScalar f = times_i(ang.forward), g = times_i(ang.backward);
  const double direct = std::max(diff_mod_line(seg.forward, f),
                                 diff_mod_line(seg.backward, g));
  const double crossed = std::max(diff_mod_line(seg.forward, g),
                                  diff_mod_line(seg.backward, f));
  return std::min(direct, crossed);
}

double signed_sinh_distance(const ProjPoint& p, const ProjLine& l) {
  if (p.category != Category::Real || l.category != Category::Real)
    throw GeometryError("signed distance needs a real point and a real line");
  const double qll = minkowski(l.rep, l.rep);
  return minkowski(p.rep, l.rep) / std::sqrt(qll);
}

}  // namespace hypgeo
