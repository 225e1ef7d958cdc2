#include "hypgeo/cycle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <cmath>
#include <complex>

namespace hypgeo {

namespace {

using cplx = std::complex<double>;

double ext_abs(const ExtScalar& v) {
  if (!v.finite()) return 1e300;
  return std::abs(v.cplx());
}

// |a - b| with matching infinities counting as zero.
double ext_diff(const ExtScalar& a, const ExtScalar& b) {
  if (!a.finite() || !b.finite()) {
    if (!a.finite() && !b.finite())
      return a.re.inf_sign() == b.re.inf_sign() ? 0.0 : 1e300;
    return 1e300;
  }
  return std::abs(a.cplx() - b.cplx());
}

}  // namespace

std::string to_string(CycleKind k) {
  switch (k) {
    case CycleKind::Circle: return "circle";
    case CycleKind::Paracycle: return "paracycle";
    case CycleKind::Hypercycle: return "hypercycle";
    case CycleKind::PointCycle: return "point";
  }
  return "?";
}

Cycle::Cycle(MVec axis, double level, double tol) {
  const double n = coord_norm(axis);
  if (n == 0.0) throw ZeroVector("cycle axis is the zero vector");
  const double q = minkowski(axis, axis);
  if (std::abs(q) <= tol * n * n) {
    // Paracycle: fix the scale by level = -1.
    if (axis.z < 0.0) { axis = -axis; level = -level; }
    if (level >= -tol * n) throw EmptyCycle("no real points on this paracycle");
    axis_ = (1.0 / -level) * axis;
    level_ = -1.0;
    kind_ = CycleKind::Paracycle;
    return;
  }
  if (q < 0.0) {
    const double s = 1.0 / std::sqrt(-q);
    axis = s * axis;
    level *= s;
    if (axis.z < 0.0) { axis = -axis; level = -level; }
    if (level > -1.0 + 1e-9)
      throw EmptyCycle("level inside (-1, inf): no real points");
    axis_ = axis;
    if (level >= -1.0 - 1e-12) {
      level_ = -1.0;
      kind_ = CycleKind::PointCycle;
    } else {
      level_ = level;
      kind_ = CycleKind::Circle;
    }
    return;
  }
  const double s = 1.0 / std::sqrt(q);
  axis = s * axis;
  level *= s;
  if (level > 0.0) { axis = -axis; level = -level; }
  axis_ = axis;
  level_ = level;
  kind_ = CycleKind::Hypercycle;
}

ProjPoint Cycle::center() const { return classify_point(axis_); }

ExtScalar Cycle::radius() const {
  switch (kind_) {
    case CycleKind::Circle: return ExtScalar(std::acosh(-level_));
    case CycleKind::PointCycle: return ExtScalar(0.0);
    case CycleKind::Paracycle: return ExtScalar::plus_inf();
    case CycleKind::Hypercycle:
      return ExtScalar(std::asinh(-level_), kPi / 2);
  }
  return ExtScalar(0.0);
}

double Cycle::sigma() const {
  return std::sqrt(std::max(0.0, level_ * level_ + minkowski(axis_, axis_)));
}

Cycle cycle_from_center_radius(const ProjPoint& center, const ExtScalar& r) {
  if (!r.finite()) {
    throw EmptyCycle("a paracycle is fixed by a point, not a radius");
  }
  const double re = r.re.value, im = r.im;
  switch (center.category) {
    case Category::Real:
      if (std::abs(im) > 1e-9)
        throw EmptyCycle("complex radius at a real center");
      return Cycle(center.rep, -std::cosh(re));
    case Category::Ideal:
      if (std::abs(im - kPi / 2) > 1e-9)
        throw EmptyCycle("hypercycle radius must be t + (pi/2)i");
      return Cycle(center.rep, -std::sinh(re));
    case Category::AtInfinity:
      throw EmptyCycle("a paracycle is fixed by a point, not a radius");
  }
  throw EmptyCycle("unreachable");
}

Cycle cycle_from_center_point(const ProjPoint& center, const ProjPoint& p) {
  if (p.category != Category::Real)
    throw GeometryError("cycle through a non-real point is not determined");
  const double v = minkowski(p.rep, center.rep);
  if (std::abs(v) < 1e-14)
    throw EmptyCycle("point lies on the polar of the center");
  return Cycle(center.rep, v);
}

Cycle line_cycle(const ProjLine& l) {
  if (l.category != Category::Real)
    throw GeometryError("only real lines are cycles");
  return Cycle(l.rep, 0.0);
}

Cycle point_cycle(const ProjPoint& p) {
  if (p.category != Category::Real)
    throw GeometryError("point cycles need real points");
  return Cycle(p.rep, -1.0);
}

Cycle cycle_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                    std::array<int, 3> signs) {
  // Rows (G x_i, -sign_i) of a rank-3 system; the cycle vector spans the
  // null space, computed as the 4D cross product.
  const MVec xs[3] = {a.rep, b.rep, c.rep};
  double rows[3][4];
  for (int i = 0; i < 3; ++i) {
    rows[i][0] = xs[i].x;
    rows[i][1] = xs[i].y;
    rows[i][2] = -xs[i].z;
    rows[i][3] = -double(signs[i]);
  }
  double w[4];
  for (int j = 0; j < 4; ++j) {
    double m[3][3];
    for (int r = 0; r < 3; ++r) {
      int cc = 0;
      for (int k = 0; k < 4; ++k)
        if (k != j) m[r][cc++] = rows[r][k];
    }
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    w[j] = (j % 2 == 0 ? 1.0 : -1.0) * det;
  }
  const MVec f{w[0], w[1], w[2]};
  if (coord_norm(f) + std::abs(w[3]) < 1e-13)
    throw DegenerateTriangle("three points do not span a cycle");
  return Cycle(f, w[3]);
}

bool on_cycle(const Cycle& c, const ProjPoint& p, double tol) {
  if (p.category != Category::Real) return false;
  return std::abs(minkowski(p.rep, c.axis()) - c.level()) <= tol;
}

bool on_full_cycle(const Cycle& c, const ProjPoint& p, double tol) {
  if (p.category != Category::Real) return false;
  return std::abs(std::abs(minkowski(p.rep, c.axis())) - std::abs(c.level())) <=
         tol;
}

bool in_interior(const Cycle& c, const ProjPoint& p) {
  return minkowski(p.rep, c.axis()) > c.level();
}

namespace {

// Orthonormal tangent direction at a curve point toward the interior.
MVec interior_direction(const Cycle& c, const MVec& p) {
  MVec u = c.axis() + minkowski(c.axis(), p) * p;
  const double n = std::sqrt(std::max(1e-300, minkowski(u, u)));
  return (1.0 / n) * u;
}

}  // namespace

ProjPoint interior_witness(const Cycle& c, double depth) {
  const ProjPoint p0 = sample_points(c, 1).at(0);
  const MVec u = interior_direction(c, p0.rep);
  MVec w = std::cosh(depth) * p0.rep + std::sinh(depth) * u;
  ProjPoint cand = classify_point(w);
  if (!in_interior(c, cand)) {
    w = std::cosh(depth) * p0.rep - std::sinh(depth) * u;
    cand = classify_point(w);
  }
  return cand;
}

std::vector<ProjPoint> sample_points(const Cycle& c, int n) {
  std::vector<ProjPoint> out;
  out.reserve(n);
  const MVec f = c.axis();
  switch (c.kind()) {
    case CycleKind::PointCycle: {
      for (int i = 0; i < n; ++i) out.push_back(classify_point(f));
      return out;
    }
    case CycleKind::Circle: {
      // Orthonormal spacelike frame perpendicular to the timelike axis.
      const MVec seed = std::abs(f.x) < 0.9 ? MVec{1, 0, 0} : MVec{0, 1, 0};
      MVec e1 = seed + minkowski(seed, f) * f;
      e1 = (1.0 / std::sqrt(minkowski(e1, e1))) * e1;
      MVec e2 = mink_cross(f, e1);
      e2 = (1.0 / std::sqrt(minkowski(e2, e2))) * e2;
      const double r = std::acosh(-c.level());
      for (int i = 0; i < n; ++i) {
        const double th = 2.0 * kPi * i / std::max(1, n) + 0.37;
        const MVec x = std::cosh(r) * f +
                       std::sinh(r) * (std::cos(th) * e1 + std::sin(th) * e2);
        out.push_back(classify_point(x));
      }
      return out;
    }
    case CycleKind::Hypercycle: {
      // Frame: e0 timelike on the axis line, e1 = e0 x f spacelike.
      const ProjLine axis_line = classify_line(f);
      const LineBasis lb = line_basis(axis_line);
      const double t = std::asinh(-c.level());
      for (int i = 0; i < n; ++i) {
        const double s = n == 1 ? 0.3 : -2.0 + 4.0 * i / (n - 1.0);
        const MVec x = std::cosh(t) * (std::cosh(s) * lb.e0 +
                                       std::sinh(s) * lb.e1) -
                       std::sinh(t) * f;
        out.push_back(classify_point(x));
      }
      return out;
    }
    case CycleKind::Paracycle: {
      // Null frame: f, a second null g with Q(f,g) = -2, e spacelike.
      const MVec g0{-f.x, -f.y, f.z};
      const double scale = -2.0 / minkowski(f, g0);
      const MVec g = scale * g0;
      MVec e = mink_cross(f, g);
      e = (1.0 / std::sqrt(minkowski(e, e))) * e;
      for (int i = 0; i < n; ++i) {
        const double s = n == 1 ? 0.3 : -2.0 + 4.0 * i / (n - 1.0);
        const MVec x = ((1.0 + s * s) / 2.0) * f + 0.5 * g + s * e;
        out.push_back(classify_point(x));
      }
      return out;
    }
  }
  return out;
}

std::vector<ProjPoint> intersect_line_cycle(const ProjLine& l, const Cycle& c,
                                            double tol) {
  if (l.category != Category::Real)
    throw GeometryError("cycle chords are real lines");
  const LineBasis lb = line_basis(l, tol);
  const double P = minkowski(lb.e0, c.axis());
  const double S = minkowski(lb.e1, c.axis());
  const double mu = c.level();
  const double D = P * P - S * S;
  const double scale = std::max(P * P, S * S);
  std::vector<double> taus;
  if (scale == 0.0) return {};
  if (std::abs(D) <= 1e-14 * scale) {
    // P cosh t + S sinh t = P e^t for S = P, P e^{-t} for S = -P.
    const double v = mu / P;
    if (v > 0.0) taus.push_back(S * P > 0.0 ? std::log(v) : -std::log(v));
  } else if (D > 0.0) {
    const double amp = std::sqrt(D);
    const double phi = std::atanh(S / P);
    const double v = mu / ((P > 0 ? 1.0 : -1.0) * amp);
    if (v >= 1.0 - 1e-13) {
      const double w = std::acosh(std::max(1.0, v));
      taus.push_back(-phi + w);
      if (w > 1e-13) taus.push_back(-phi - w);
    }
  } else {
    const double amp = std::sqrt(-D);
    const double psi = std::atanh(P / S);
    const double v = mu / ((S > 0 ? 1.0 : -1.0) * amp);
    taus.push_back(std::asinh(v) - psi);
  }
  std::vector<ProjPoint> pts;
  for (double t : taus) pts.push_back(point_at_tau(lb, ExtScalar(t), tol));
  return pts;
}

double cinner(const CVec& a, const CVec& b) {
  return minkowski(a.f, b.f) + a.mu * b.mu;
}

CVec cvec_sub(const CVec& a, const CVec& b) {
  return CVec{a.f - b.f, a.mu - b.mu};
}

CVec ivec(const Cycle& c) {
  const double s = c.sigma();
  if (s < 1e-12) throw GeometryError("point cycles have no unit vector");
  return CVec{(1.0 / s) * c.axis(), c.level() / s};
}

CVec lift_point(const ProjPoint& p) {
  if (p.category != Category::Real)
    throw GeometryError("only real points lift to null vectors");
  return CVec{p.rep, -1.0};
}

double inversive_product(const Cycle& a, const Cycle& b) {
  return cinner(ivec(a), ivec(b));
}

ExtScalar power(const ProjPoint& P, const Cycle& c, const ProjLine& chord,
                double tol) {
  if (!incident(P, chord, std::max(tol, 1e-7)))
    throw GeometryError("chord does not pass through the point");
  const auto pts = intersect_line_cycle(chord, c, tol);
  if (pts.size() != 2) throw NoIntersection("chord does not meet the cycle twice");
  const LineBasis lb = line_basis(chord, tol);
  const ExtScalar ta = line_tau(lb, pts[0], tol);
  const ExtScalar tb = line_tau(lb, pts[1], tol);
  if (P.category == Category::Ideal) {
    // Chords through an ideal point are perpendicular to its polar, and the
    // segment lengths are u + (pi/2)i with u the signed distance from the
    // polar crossing; tanh((u + i pi/2)/2) = tanh u + i sech u. The product
    // is reported with nonnegative imaginary part since flipping the chord
    // orientation conjugates it.
    const auto cp = lb.coords(P.rep);
    const double foot = std::atanh(cp[0] / cp[1]);
    auto phi = [&](const ExtScalar& t) {
      const double u = t.re.value - foot;
      return cplx(std::tanh(u), 1.0 / std::cosh(u));
    };
    cplx prod = phi(ta) * phi(tb);
    if (prod.imag() < 0.0) prod = std::conj(prod);
    return ExtScalar(prod);
  }
  const ExtScalar tp = line_tau(lb, P, tol);
  const ExtScalar wa = ext_tanh(scalar_scale(0.5, scalar_sub(ta, tp)));
  const ExtScalar wb = ext_tanh(scalar_scale(0.5, scalar_sub(tb, tp)));
  return ExtScalar(wa.cplx() * wb.cplx());
}

ProjLine power_axis(const Cycle& c1, const Cycle& c2, double tol) {
  if (same_projective(c1.axis(), c2.axis(), 1e-12))
    throw ConcentricCycles("no axis of equal powers");
  const CVec a = ivec(c1), b = ivec(c2);
  const MVec l = b.mu * a.f - a.mu * b.f;
  if (coord_norm(l) <= 1e-12)
    throw ConcentricCycles("no axis of equal powers");
  return classify_line(l, tol);
}

TangencyReport tangency(const Cycle& c1, const Cycle& c2, double tol) {
  const bool para = c1.kind() == CycleKind::Paracycle ||
                    c2.kind() == CycleKind::Paracycle;
  const bool concentric = same_projective(c1.axis(), c2.axis(), 1e-12);
  if (para || (concentric && c1.kind() != CycleKind::Circle)) {
    // Center distances degenerate (inf - inf); measure in cycle space.
    double ip;
    if (c1.kind() == CycleKind::PointCycle || c2.kind() == CycleKind::PointCycle) {
      const bool p1 = c1.kind() == CycleKind::PointCycle;
      const Cycle& pc = p1 ? c1 : c2;
      const Cycle& other = p1 ? c2 : c1;
      if (other.kind() == CycleKind::PointCycle)
        return {1e300, TangencyKind::None};
      const double v = cinner(lift_point(classify_point(pc.axis())), ivec(other));
      const double r = std::abs(v);
      return {r, r <= tol ? TangencyKind::External : TangencyKind::None};
    }
    ip = inversive_product(c1, c2);
    const double rext = std::abs(ip + 1.0);
    const double rint = std::abs(ip - 1.0);
    if (rext <= rint) return {rext, rext <= tol ? TangencyKind::External : TangencyKind::None};
    return {rint, rint <= tol ? TangencyKind::Internal : TangencyKind::None};
  }

  const ExtScalar r1 = c1.radius(), r2 = c2.radius();
  SegmentPair seg;
  if (concentric) {
    seg = {ExtScalar(0.0), ExtScalar(0.0, kPi)};
  } else {
    seg = segment_lengths(classify_point(c1.axis()), classify_point(c2.axis()));
  }
  const ExtScalar cand_ext = scalar_add(r1, r2);
  const ExtScalar cand_int1 = scalar_sub(r1, r2);
  const ExtScalar cand_int2 = scalar_sub(r2, r1);
  TangencyReport best{1e300, TangencyKind::None};
  auto update = [&](const ExtScalar& d, const ExtScalar& target,
                    TangencyKind k) {
    const double r = ext_diff(d, target);
    if (r < best.residual) best = {r, k};
  };
  for (const ExtScalar& d : {seg.forward, seg.backward}) {
    update(d, cand_ext, TangencyKind::External);
    update(d, cand_int1, TangencyKind::Internal);
    update(d, cand_int2, TangencyKind::Internal);
  }
  if (best.residual > tol) best.kind = TangencyKind::None;
  // Touching a line realizes both signed readings at once; report the
  // degenerate case canonically as external.
  else if (c1.is_line(1e-11) || c2.is_line(1e-11))
    best.kind = TangencyKind::External;
  return best;
}

namespace {

int case_tag_of(CycleKind a, CycleKind b) {
  auto rank = [](CycleKind k) {
    switch (k) {
      case CycleKind::Circle:
      case CycleKind::PointCycle: return 0;
      case CycleKind::Paracycle: return 1;
      case CycleKind::Hypercycle: return 2;
    }
    return 0;
  };
  const int x = rank(a), y = rank(b);
  const int lo = std::min(x, y), hi = std::max(x, y);
  if (lo == 0 && hi == 0) return 1;
  if (lo == 0 && hi == 1) return 2;
  if (lo == 0 && hi == 2) return 3;
  if (lo == 1 && hi == 1) return 4;
  if (lo == 1 && hi == 2) return 5;
  return 6;
}

// Internal similitude center by the sinh-ratio division of the center
// segment (circle pair with real centers).
ProjPoint ratio_internal_center(const Cycle& c1, const Cycle& c2) {
  const MVec o1 = c1.center().rep, o2 = c2.center().rep;
  const double d = std::acosh(std::max(1.0, -minkowski(o1, o2)));
  const MVec t = (1.0 / std::sinh(d)) * (o2 - std::cosh(d) * o1);
  const double s1 = std::sinh(std::acosh(-c1.level()));
  const double s2 = std::sinh(std::acosh(-c2.level()));
  return classify_point((s2 + std::cosh(d) * s1) * o1 + std::sinh(d) * s1 * t);
}

}  // namespace

std::vector<ProjLine> common_tangents(const Cycle& c1, const Cycle& c2,
                                      double tol) {
  if (c1.is_line(1e-9) || c2.is_line(1e-9))
    throw GeometryError("common tangents of a line cycle are degenerate");
  const Sym3 d1 = c1.conic().adjugate();
  const Sym3 d2 = c2.conic().adjugate();
  std::vector<ProjLine> out;
  for (const MVec& lv : conic_intersect(d1, d2)) {
    // lv is a plain coefficient vector; the stored line representative is
    // its Q-dual. Keep tangents that touch the stored branch at a genuinely
    // real point (hypercycle conics carry a mirror branch and close up at
    // the axis ends on the absolute).
    bool ok = true;
    for (const Cycle* c : {&c1, &c2}) {
      const MVec x = c->conic().adjugate().apply(lv);
      const double qx = minkowski(x, x);
      if (!(qx < -1e-10 * coord_norm(x) * coord_norm(x))) { ok = false; break; }
      const ProjPoint tp = classify_point(x);
      if (std::abs(minkowski(tp.rep, c->axis()) - c->level()) > 1e-6) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(classify_line(MVec{lv.x, lv.y, -lv.z}, tol));
  }
  return out;
}

SimilitudePair similitude_centers_via_tangents(const Cycle& c1,
                                               const Cycle& c2, double tol) {
  if (c1 == c2) throw IdenticalCycles();
  const auto tangents = common_tangents(c1, c2, tol);
  const ProjPoint w1 = c1.kind() == CycleKind::Circle
                           ? classify_point(c1.axis())
                           : interior_witness(c1);
  const ProjPoint w2 = c2.kind() == CycleKind::Circle
                           ? classify_point(c2.axis())
                           : interior_witness(c2);
  std::vector<ProjLine> direct, separating;
  for (const ProjLine& t : tangents) {
    const double s1 = minkowski(w1.rep, t.rep);
    const double s2 = minkowski(w2.rep, t.rep);
    (s1 * s2 >= 0.0 ? direct : separating).push_back(t);
  }
  SimilitudePair out;
  out.case_tag = case_tag_of(c1.kind(), c2.kind());
  if (direct.size() != 2)
    throw NoSolution("external similitude center: direct tangents not found");
  out.external = meet(direct[0], direct[1], tol);
  if (separating.size() == 2) {
    out.internal = meet(separating[0], separating[1], tol);
  } else if (c1.kind() == CycleKind::Circle && c2.kind() == CycleKind::Circle) {
    out.internal = ratio_internal_center(c1, c2);
  } else {
    throw NoSolution("internal similitude center not determined");
  }
  return out;
}

SimilitudePair similitude_centers(const Cycle& c1, const Cycle& c2,
                                  double tol) {
  if (c1 == c2) throw IdenticalCycles();
  if (c1.kind() == CycleKind::Circle && c2.kind() == CycleKind::Circle) {
    // Closed form. r is the smaller radius, carried by Or.
    const bool swap = std::acosh(-c1.level()) > std::acosh(-c2.level());
    const Cycle& cr = swap ? c2 : c1;
    const Cycle& cR = swap ? c1 : c2;
    const MVec o_r = cr.axis(), o_R = cR.axis();
    const double q = -minkowski(o_r, o_R);
    if (q <= 1.0 + 1e-14) throw ConcentricCycles("coincident centers");
    const double d = std::acosh(q);
    const double r = std::acosh(-cr.level());
    const double R = std::acosh(-cR.level());
    const MVec t = (1.0 / std::sinh(d)) * (o_R - std::cosh(d) * o_r);
    const double shr = std::sinh(r), shR = std::sinh(R);
    SimilitudePair out;
    out.case_tag = 1;
    out.internal = classify_point((shR + std::cosh(d) * shr) * o_r +
                                  std::sinh(d) * shr * t);
    out.external = classify_point((shR - std::cosh(d) * shr) * o_r -
                                  std::sinh(d) * shr * t,
                                  1e-7);
    return out;
  }
  return similitude_centers_via_tangents(c1, c2, tol);
}

double secant_ratio_check(const ProjPoint& S, const Cycle& c1, const Cycle& c2,
                          const ProjLine& secant, double tol) {
  if (!incident(S, secant, 1e-7))
    throw GeometryError("secant does not pass through the similitude center");

  auto tanh_halves = [&](const ProjLine& line) {
    const LineBasis lb = line_basis(line, tol);
    // tanh(S./2) per category of S; an ideal S measures from its polar
    // crossing with values tanh u + i sech u.
    std::function<cplx(const ExtScalar&)> w;
    if (S.category == Category::Ideal) {
      const auto cs = lb.coords(S.rep);
      const double foot = std::atanh(cs[0] / cs[1]);
      w = [foot](const ExtScalar& t) {
        const double u = t.re.value - foot;
        return cplx(std::tanh(u), 1.0 / std::cosh(u));
      };
    } else {
      const ExtScalar ts = line_tau(lb, S, tol);
      w = [ts](const ExtScalar& t) {
        return ext_tanh(scalar_scale(0.5, scalar_sub(t, ts))).cplx();
      };
    }
    auto values = [&](const Cycle& c) {
      auto pts = intersect_line_cycle(line, c, tol);
      if (pts.empty()) throw NoIntersection("secant misses a cycle");
      if (pts.size() == 1) pts.push_back(pts[0]);
      std::array<ExtScalar, 2> taus{line_tau(lb, pts[0], tol),
                                    line_tau(lb, pts[1], tol)};
      if (taus[1].re.value < taus[0].re.value) std::swap(taus[0], taus[1]);
      return std::array<cplx, 2>{w(taus[0]), w(taus[1])};
    };
    return std::pair{values(c1), values(c2)};
  };

  auto ratios = [&](const ProjLine& line) {
    const auto [a, b] = tanh_halves(line);
    // Two candidate pairings; the lemma's correspondence is the consistent one.
    const double scale = std::max(
        1e-30, std::max(std::abs(a[0] * b[1]), std::abs(a[1] * b[0])));
    const double mis1 = std::abs(a[0] * b[1] - a[1] * b[0]) / scale;
    const double mis2 = std::abs(a[0] * b[0] - a[1] * b[1]) / scale;
    if (mis1 <= mis2) return std::pair{a[0] / b[0], mis1};
    return std::pair{a[0] / b[1], mis2};
  };

  const ProjLine axis =
      join(classify_point(c1.axis()), classify_point(c2.axis()), tol);
  const auto [ref, dref] = ratios(axis);
  const auto [val, dval] = ratios(secant);
  const double scale = std::max(1.0, std::abs(ref));
  // Chord orientations are not intrinsic; a flip conjugates the ratio.
  const double dist =
      std::min(std::abs(val - ref), std::abs(std::conj(val) - ref));
  return std::max({dref, dval, dist / scale});
}

std::array<ProjLine, 4> similitude_axes(const Cycle& c1, const Cycle& c2,
                                        const Cycle& c3, double tol) {
  const SimilitudePair s12 = similitude_centers(c1, c2, tol);
  const SimilitudePair s13 = similitude_centers(c1, c3, tol);
  const SimilitudePair s23 = similitude_centers(c2, c3, tol);
  auto axis_of = [&](const ProjPoint& a, const ProjPoint& b,
                     const ProjPoint& c) {
    // Join the best-conditioned pair, then check the third.
    const ProjPoint* pts[3] = {&a, &b, &c};
    double best = -1.0;
    ProjLine line;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const MVec cr = mink_cross(pts[i]->rep, pts[j]->rep);
        if (coord_norm(cr) > best) {
          best = coord_norm(cr);
          line = classify_line(cr, tol);
        }
      }
    if (best <= 1e-10)
      throw DegenerateConfiguration("similitude centers collapse");
    return line;
  };
  return {axis_of(s12.external, s13.external, s23.external),
          axis_of(s12.external, s13.internal, s23.internal),
          axis_of(s12.internal, s13.external, s23.internal),
          axis_of(s12.internal, s13.internal, s23.external)};
}

namespace {

CVec reflect(const CVec& p, const CVec& v) {
  const double vv = cinner(v, v);
  const double t = 2.0 * cinner(p, v) / vv;
  return CVec{p.f - t * v.f, p.mu - t * v.mu};
}

ExtScalar inversion_constant(const Cycle& c) {
  switch (c.kind()) {
    case CycleKind::Circle: {
      const double mu = c.level();
      return ExtScalar((mu + 1.0) / (mu - 1.0));
    }
    case CycleKind::Hypercycle: {
      const double t = std::asinh(-c.level());
      const cplx w{std::tanh(t), 1.0 / std::cosh(t)};
      return ExtScalar(w * w);
    }
    case CycleKind::Paracycle:
      return ExtScalar(1.0);  // products through an infinite center collapse
    case CycleKind::PointCycle:
      break;
  }
  throw GeometryError("point cycles define no inversion");
}

}  // namespace

Inversion inversion_in_cycle(const Cycle& c) {
  if (c.kind() == CycleKind::PointCycle)
    throw GeometryError("point cycles define no inversion");
  return Inversion{c.center(), inversion_constant(c),
                   CVec{c.axis(), c.level()}};
}

Inversion make_inversion(const ProjPoint& center, const ExtScalar& k) {
  if (!k.finite() || ext_abs(k) < 1e-14)
    throw GeometryError("inversion constant must be finite and nonzero");
  switch (center.category) {
    case Category::Real: {
      if (std::abs(k.im) > 1e-12)
        throw GeometryError("a real-centered inversion has a real constant");
      const double kv = k.re.value;
      const CVec v{(1.0 - kv) * center.rep, -(1.0 + kv)};
      return Inversion{center, k, v};
    }
    case Category::Ideal: {
      const cplx kc = k.cplx();
      if (std::abs(std::abs(kc) - 1.0) > 1e-9)
        throw GeometryError("an ideal-centered inversion has |k| = 1");
      double phi = std::arg(kc) / 2.0;
      if (std::sin(phi) < 0.0) phi += kPi;
      const double cphi = std::cos(phi);
      if (std::abs(cphi) >= 1.0 - 1e-12)
        throw GeometryError("k = 1 defines no inversion");
      const double t = std::atanh(cphi);
      return Inversion{center, k, CVec{center.rep, -std::sinh(t)}};
    }
    case Category::AtInfinity:
      throw GeometryError(
          "an inversion at an infinite center is fixed by its paracycle; "
          "use inversion_in_cycle");
  }
  throw GeometryError("unreachable");
}

Inversion inversion_swapping(const Cycle& c1, const Cycle& c2) {
  if (c1 == c2) throw IdenticalCycles();
  const CVec v = cvec_sub(ivec(c1), ivec(c2));
  const double vv = cinner(v, v);
  const double nf = coord_norm(v.f) + std::abs(v.mu);
  if (nf < 1e-12) throw IdenticalCycles();
  if (vv <= 1e-12)
    throw NoExternalCenter("no real cycle of inversion swaps these cycles");
  return inversion_in_cycle(Cycle(v.f, v.mu));
}

ProjPoint invert_point(const Inversion& inv, const ProjPoint& m, double tol) {
  if (same_projective(m.rep, inv.center.rep, tol))
    throw CenterInput("the center has no inverse point");
  if (m.category == Category::Real) {
    const CVec img = reflect(lift_point(m), inv.vec);
    return classify_point(img.f, tol);
  }
  // Extended route along the line through the center.
  const ProjLine line = join(inv.center, m, tol);
  if (line.category != Category::Real)
    throw GeometryError("inverse of a non-real point off a real line");
  const LineBasis lb = line_basis(line, tol);
  const ExtScalar ts = line_tau(lb, inv.center, tol);
  if (!ts.finite())
    throw GeometryError("inverse of a non-real point at an infinite center");
  const ExtScalar tm = line_tau(lb, m, tol);
  const cplx thalf = ext_tanh(scalar_scale(0.5, scalar_sub(tm, ts))).cplx();
  const cplx target = inv.power_k.cplx() / thalf;
  const cplx tn = 2.0 * std::atanh(target);
  const ExtScalar tau_n = scalar_add(ts, ExtScalar(tn));
  if (!tau_n.finite()) return point_at_tau(lb, tau_n, tol);
  // Reduce the imaginary part modulo pi (a full turn of the line).
  double im = std::fmod(tau_n.im, kPi);
  if (im > kPi / 2 + 1e-9) im -= kPi;
  if (im < -kPi / 2 - 1e-9) im += kPi;
  return point_at_tau(lb, ExtScalar(tau_n.re.value, im), tol);
}

Cycle invert_cycle(const Inversion& inv, const Cycle& c) {
  const CVec img = reflect(CVec{c.axis(), c.level()}, inv.vec);
  return Cycle(img.f, img.mu);
}

std::vector<Cycle> tangent_cycles(const Cycle& c1, const Cycle& c2,
                                  const Cycle& c3,
                                  std::array<TangencyKind, 3> kinds,
                                  double residual_tol) {
  const Cycle* cs[3] = {&c1, &c2, &c3};
  double rows[3][4];
  double targets[3];
  for (int i = 0; i < 3; ++i) {
    CVec v;
    if (cs[i]->kind() == CycleKind::PointCycle) {
      v = lift_point(classify_point(cs[i]->axis()));
      targets[i] = 0.0;
    } else {
      v = ivec(*cs[i]);
      targets[i] = kinds[i] == TangencyKind::External ? -1.0 : 1.0;
    }
    rows[i][0] = v.f.x;
    rows[i][1] = v.f.y;
    rows[i][2] = -v.f.z;
    rows[i][3] = v.mu;
  }

  // Null direction of the 3x4 system.
  double w[4];
  for (int j = 0; j < 4; ++j) {
    double m[3][3];
    for (int r = 0; r < 3; ++r) {
      int cc = 0;
      for (int k = 0; k < 4; ++k)
        if (k != j) m[r][cc++] = rows[r][k];
    }
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    w[j] = (j % 2 == 0 ? 1.0 : -1.0) * det;
  }
  int j0 = 0;
  for (int j = 1; j < 4; ++j)
    if (std::abs(w[j]) > std::abs(w[j0])) j0 = j;
  if (std::abs(w[j0]) < 1e-13)
    throw NoSolution("tangency system is degenerate");

  auto solve_particular = [&](const double rhs[3], double x[4]) {
    // Fix the null-dominant coordinate to zero and solve 3x3.
    double m[3][3], b[3];
    int cols[3];
    int cc = 0;
    for (int k = 0; k < 4; ++k)
      if (k != j0) cols[cc++] = k;
    for (int r = 0; r < 3; ++r) {
      for (int ci = 0; ci < 3; ++ci) m[r][ci] = rows[r][cols[ci]];
      b[r] = rhs[r];
    }
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det) < 1e-16) throw NoSolution("tangency system is singular");
    double sol[3];
    for (int i = 0; i < 3; ++i) {
      double mi[3][3];
      for (int r = 0; r < 3; ++r)
        for (int ci = 0; ci < 3; ++ci) mi[r][ci] = m[r][ci];
      for (int r = 0; r < 3; ++r) mi[r][i] = b[r];
      const double di = mi[0][0] * (mi[1][1] * mi[2][2] - mi[1][2] * mi[2][1]) -
                        mi[0][1] * (mi[1][0] * mi[2][2] - mi[1][2] * mi[2][0]) +
                        mi[0][2] * (mi[1][0] * mi[2][1] - mi[1][1] * mi[2][0]);
      sol[i] = di / det;
    }
    x[j0] = 0.0;
    for (int i = 0; i < 3; ++i) x[cols[i]] = sol[i];
  };

  auto minkowski4 = [](const double a[4], const double b[4]) {
    return a[0] * b[0] + a[1] * b[1] - a[2] * b[2] + a[3] * b[3];
  };

  std::vector<Cycle> found;
  auto consider = [&](const double x[4]) {
    const MVec f{x[0], x[1], x[2]};
    if (coord_norm(f) + std::abs(x[3]) < 1e-12) return;
    Cycle cand;
    try {
      cand = Cycle(f, x[3]);
    } catch (const GeometryError&) {
      return;  // degenerate candidate on the empty boundary
    }
    for (const Cycle& c : found)
      if (same_projective(c.axis(), cand.axis(), 1e-8) &&
          std::abs(c.level() - cand.level()) < 1e-8)
        return;
    for (int i = 0; i < 3; ++i) {
      const TangencyReport rep = tangency(cand, *cs[i], residual_tol);
      if (rep.residual > residual_tol) return;
      // Point incidences and line touches carry no orientation to match.
      if (cs[i]->kind() != CycleKind::PointCycle && !cs[i]->is_line(1e-11) &&
          rep.kind != kinds[i])
        return;
    }
    found.push_back(cand);
  };

  for (double flip : {1.0, -1.0}) {
    double rhs[3];
    for (int i = 0; i < 3; ++i) rhs[i] = flip * targets[i];
    double x0[4];
    try {
      solve_particular(rhs, x0);
    } catch (const NoSolution&) {
      continue;
    }
    // <x0 + t w, x0 + t w> = 1.
    const double a = minkowski4(w, w);
    const double b = 2.0 * minkowski4(x0, w);
    const double cq = minkowski4(x0, x0) - 1.0;
    std::vector<double> ts;
    if (std::abs(a) < 1e-14) {
      if (std::abs(b) > 1e-14) ts.push_back(-cq / b);
    } else {
      const double disc = b * b - 4.0 * a * cq;
      const double scale = b * b + std::abs(4.0 * a * cq);
      if (disc > 1e-12 * scale) {
        const double sq = std::sqrt(disc);
        ts.push_back((-b + sq) / (2.0 * a));
        ts.push_back((-b - sq) / (2.0 * a));
      } else if (disc > -1e-10 * scale) {
        // A (near-)double root sits at the vertex, free of the sqrt noise.
        ts.push_back(-b / (2.0 * a));
      }
    }
    for (double t : ts) {
      double x[4];
      for (int i = 0; i < 4; ++i) x[i] = x0[i] + t * w[i];
      consider(x);
    }
  }

  if (found.empty())
    throw NoSolution("no tangent cycle matches the requested kinds");
  std::sort(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) {
    auto key = [](const Cycle& c) {
      const ExtScalar r = c.radius();
      return r.finite() ? r.re.value : 1e300;
    };
    return key(a) < key(b);
  });
  return found;
}

}  // namespace hypgeo
