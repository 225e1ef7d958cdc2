#include "hypgeo/triangle_centers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>

namespace hypgeo {

namespace {

using cplx = std::complex<double>;

cplx csinh(const ExtScalar& v) { return std::sinh(v.cplx()); }
cplx ccosh(const ExtScalar& v) { return std::cosh(v.cplx()); }

double det3(const MVec& a, const MVec& b, const MVec& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

// A midpoint that tolerates sign-ambiguous (ideal) representatives.
ProjPoint midpoint_robust(const ProjPoint& a, const ProjPoint& b) {
  const MVec plus = a.rep + b.rep;
  if (minkowski(plus, plus) < 0.0) return classify_point(plus);
  const MVec minus = a.rep - b.rep;
  if (minkowski(minus, minus) < 0.0) return classify_point(minus);
  throw DegenerateConfiguration("no real midpoint for this pair");
}

}  // namespace

HypTriangle HypTriangle::from_vertices(const ProjPoint& A, const ProjPoint& B,
                                       const ProjPoint& C, double tol) {
  HypTriangle t;
  t.A = A;
  t.B = B;
  t.C = C;
  const ExtScalar a = segment_lengths(B, C, tol).forward;
  const ExtScalar b = segment_lengths(C, A, tol).forward;
  const ExtScalar c = segment_lengths(A, B, tol).forward;
  if (a.finite() && b.finite() && c.finite()) {
    t.data = TriangleData::from_sides(a, b, c);
  } else {
    t.data.a = a;
    t.data.b = b;
    t.data.c = c;
  }
  return t;
}

HypTriangle HypTriangle::from_sides(double a, double b, double c) {
  const double cos_alpha = (std::cosh(b) * std::cosh(c) - std::cosh(a)) /
                           (std::sinh(b) * std::sinh(c));
  if (!(std::abs(cos_alpha) < 1.0))
    throw DegenerateTriangle("sides violate the triangle inequality");
  const double alpha = std::acos(cos_alpha);
  const MVec pa{0, 0, 1};
  const MVec pb{std::sinh(c), 0, std::cosh(c)};
  const MVec pc{std::sinh(b) * std::cos(alpha), std::sinh(b) * std::sin(alpha),
                std::cosh(b)};
  return from_vertices(classify_point(pa), classify_point(pb),
                       classify_point(pc));
}

ProjLine HypTriangle::side_line(int i) const {
  switch (i) {
    case 0: return join(B, C);
    case 1: return join(C, A);
    default: return join(A, B);
  }
}

ExtScalar height(const HypTriangle& t, int i) {
  const ProjPoint& v = t.vertex(i);
  const ProjLine l = t.side_line(i);
  const ProjPoint foot = perp_foot(v, l);
  return segment_lengths(foot, v).forward;
}

ExtScalar staudtian(const HypTriangle& t) {
  const cplx s = 0.5 * (t.data.a.cplx() + t.data.b.cplx() + t.data.c.cplx());
  const cplx prod = std::sinh(s) * std::sinh(s - t.data.a.cplx()) *
                    std::sinh(s - t.data.b.cplx()) *
                    std::sinh(s - t.data.c.cplx());
  return ExtScalar(std::sqrt(prod));
}

ExtScalar angular_staudtian(const HypTriangle& t) {
  const cplx d = t.data.delta.cplx();
  const cplx prod = std::sin(d) * std::sin(d + t.data.alpha.cplx()) *
                    std::sin(d + t.data.beta.cplx()) *
                    std::sin(d + t.data.gamma.cplx());
  return ExtScalar(std::sqrt(prod));
}

double staudtian_identity_suite(const HypTriangle& t) {
  const cplx n = staudtian(t).cplx();
  const cplx N = angular_staudtian(t).cplx();
  const cplx sa = csinh(t.data.a), sb = csinh(t.data.b), sc = csinh(t.data.c);
  const cplx na = std::sin(t.data.alpha.cplx()),
             nb = std::sin(t.data.beta.cplx()),
             nc = std::sin(t.data.gamma.cplx());
  const cplx d = t.data.delta.cplx();
  const cplx s = 0.5 * (t.data.a.cplx() + t.data.b.cplx() + t.data.c.cplx());

  double r = 0.0;
  auto upd = [&r](cplx lhs, cplx rhs) {
    r = std::max(r, std::abs(lhs - rhs));
  };

  // Product form for the half angles.
  upd(std::sin(0.5 * t.data.alpha.cplx()) * std::sin(0.5 * t.data.beta.cplx()) *
          std::sin(0.5 * t.data.gamma.cplx()),
      n * n / (std::sinh(s) * sa * sb * sc));
  // sin angle = 2n / product of the adjacent sinh sides.
  upd(na, 2.0 * n / (sb * sc));
  upd(nb, 2.0 * n / (sa * sc));
  upd(nc, 2.0 * n / (sa * sb));
  // Half-side formulas from the dual quantities.
  upd(std::sinh(0.5 * t.data.c.cplx()),
      std::sqrt(std::sin(d) * std::sin(d + t.data.gamma.cplx()) / (na * nb)));
  upd(std::cosh(0.5 * t.data.c.cplx()),
      std::sqrt(std::sin(d + t.data.alpha.cplx()) *
                std::sin(d + t.data.beta.cplx()) / (na * nb)));
  // cosh(a/2) cosh(b/2) cosh(c/2) = N^2 / (sin a sin b sin g sin d).
  upd(std::cosh(0.5 * t.data.a.cplx()) * std::cosh(0.5 * t.data.b.cplx()) *
          std::cosh(0.5 * t.data.c.cplx()),
      N * N / (na * nb * nc * std::sin(d)));
  // sinh side = 2N / product of the adjacent angle sines.
  upd(sa, 2.0 * N / (nb * nc));
  upd(sb, 2.0 * N / (na * nc));
  upd(sc, 2.0 * N / (na * nb));
  // Height forms of the two Staudtians.
  const cplx hc = csinh(ExtScalar(height(
      HypTriangle{t.A, t.B, t.C, t.data}, 2).cplx()));
  upd(n, 0.5 * hc * sc);
  upd(N, 0.5 * hc * nc);
  // Connection between the Staudtians and the quotient form.
  upd(2.0 * n * n, N * sa * sb * sc);
  upd(N / n, na / sa);
  return r;
}

TriangularCoords triangular_coords(const ProjPoint& X, const HypTriangle& t) {
  // Linear form: n_K(X) = (1/2) sinh(side_K) Q(X, side line), oriented so
  // that the coordinate of the opposite vertex is positive. Coincides with
  // the Staudtian of the sub-triangle up to that sign.
  const double orient = det3(t.A.rep, t.B.rep, t.C.rep);
  if (std::abs(orient) < 1e-14)
    throw DegenerateTriangle("collinear vertices");
  TriangularCoords out;
  const cplx sides[3] = {csinh(t.data.a), csinh(t.data.b), csinh(t.data.c)};
  for (int k = 0; k < 3; ++k) {
    const ProjLine l = t.side_line(k);
    const double lnorm = std::sqrt(minkowski(l.rep, l.rep));
    const double sgn =
        minkowski(t.vertex(k).rep, l.rep) > 0.0 ? 1.0 : -1.0;
    out.n[k] = 0.5 * std::abs(sides[k]) * sgn *
               minkowski(X.rep, l.rep) / lnorm;
  }
  return out;
}

double section_ratio(const ProjPoint& X, const HypTriangle& t, int vertex) {
  const ProjLine cevian = join(t.vertex(vertex), X);
  const ProjLine base = t.side_line(vertex);
  const ProjPoint foot = meet(cevian, base);
  const LineBasis lb = line_basis(base);
  const ProjPoint& b = t.vertex((vertex + 1) % 3);
  const ProjPoint& c = t.vertex((vertex + 2) % 3);
  const double tb = line_tau(lb, b).re.value;
  const double tc = line_tau(lb, c).re.value;
  switch (foot.category) {
    case Category::Real:
      return std::sinh(line_tau(lb, foot).re.value - tb) /
             std::sinh(tc - line_tau(lb, foot).re.value);
    case Category::AtInfinity:
      return -1.0;
    case Category::Ideal: {
      // Extended segments to an ideal foot have lengths u + (pi/2)i with u
      // measured from the polar crossing; their sinh quotient is real.
      const auto cf = lb.coords(foot.rep);
      const double q0 = std::atanh(cf[0] / cf[1]);
      return -std::cosh(q0 - tb) / std::cosh(tc - q0);
    }
  }
  throw GeometryError("unreachable");
}

CentroidReport centroid(const HypTriangle& t) {
  const ProjPoint ma = midpoint_robust(t.B, t.C);
  const ProjPoint mb = midpoint_robust(t.C, t.A);
  const ProjPoint mc = midpoint_robust(t.A, t.B);
  const ProjLine med_a = join(t.A, ma);
  const ProjLine med_b = join(t.B, mb);
  const ProjLine med_c = join(t.C, mc);
  CentroidReport rep;
  rep.M = meet(med_a, med_b);
  rep.concurrency_residual = incidence_residual(rep.M, med_c);
  const cplx am = csinh(segment_lengths(t.A, rep.M).forward);
  const cplx mma = csinh(segment_lengths(rep.M, ma).forward);
  const cplx ama = csinh(segment_lengths(t.A, ma).forward);
  rep.ratio_413 = std::abs(am / mma);
  rep.ratio_414 = std::abs(ama / mma);
  return rep;
}

double centroid_line_identity(const HypTriangle& t, const ProjLine& y) {
  const ProjPoint M = centroid(t).M;
  const double w = std::sqrt(1.0 + 2.0 * (1.0 + ccosh(t.data.a).real() +
                                          ccosh(t.data.b).real() +
                                          ccosh(t.data.c).real()));
  const double dm = signed_sinh_distance(M, y);
  const double da = signed_sinh_distance(t.A, y);
  const double db = signed_sinh_distance(t.B, y);
  const double dc = signed_sinh_distance(t.C, y);
  // The identity is sign-consistent once the sides of the line agree.
  return std::min(std::abs(dm - (da + db + dc) / w),
                  std::abs(dm + (da + db + dc) / w));
}

double centroid_minimality_identity(const HypTriangle& t, const ProjPoint& Y) {
  const CentroidReport rep = centroid(t);
  const TriangularCoords cm = triangular_coords(rep.M, t);
  const double n = std::abs(staudtian(t).cplx());
  const double quot = n / cm.n[0];
  const double lhs = ccosh(distance(Y, rep.M)).real();
  const double rhs = (ccosh(distance(Y, t.A)).real() +
                      ccosh(distance(Y, t.B)).real() +
                      ccosh(distance(Y, t.C)).real()) /
                     quot;
  return std::abs(lhs - rhs);
}

Circumcenters circumcenters(const HypTriangle& t) {
  Circumcenters out;
  const std::array<std::array<int, 3>, 4> signs{{
      {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}};
  for (int k = 0; k < 4; ++k) {
    const Cycle cyc = cycle_through(t.A, t.B, t.C, signs[k]);
    out.cycle[k] = cyc;
    out.center[k] = cyc.center();
    out.radius[k] = cyc.radius();
  }
  return out;
}

ExtScalar hypercycle_three_point_distance(const ExtScalar& a,
                                          const ExtScalar& b,
                                          const ExtScalar& c) {
  const cplx s = 0.5 * (a.cplx() + b.cplx() + c.cplx());
  const cplx n = std::sqrt(std::sinh(s) * std::sinh(s - a.cplx()) *
                           std::sinh(s - b.cplx()) * std::sinh(s - c.cplx()));
  const cplx v = n / (2.0 * std::sinh(0.5 * a.cplx()) *
                      std::sinh(0.5 * b.cplx()) * std::sinh(0.5 * c.cplx()));
  if (!(std::abs(v.imag()) < 1e-12) || v.real() >= 1.0)
    throw NotHypercyclic("the circumscribed cycle is not a hypercycle");
  return ExtScalar(std::atanh(v.real()));
}

namespace {

// Interior and exterior bisector lines at vertex i.
std::pair<ProjLine, ProjLine> bisectors_at(const HypTriangle& t, int i) {
  const ProjPoint& v = t.vertex(i);
  const ProjPoint& p = t.vertex((i + 1) % 3);
  const ProjPoint& q = t.vertex((i + 2) % 3);
  MVec u = join(v, p).rep;
  MVec w = join(v, q).rep;
  u = (1.0 / std::sqrt(minkowski(u, u))) * u;
  w = (1.0 / std::sqrt(minkowski(w, w))) * w;
  const ProjLine cand1 = classify_line(u + w);
  const ProjLine cand2 = classify_line(u - w);
  // The interior bisector separates the two other vertices.
  const double s1 = minkowski(p.rep, cand1.rep) * minkowski(q.rep, cand1.rep);
  if (s1 < 0.0) return {cand1, cand2};
  return {cand2, cand1};
}

ExtScalar point_line_distance(const ProjPoint& p, const ProjLine& l) {
  if (p.category == Category::Real) {
    const double q = minkowski(p.rep, l.rep) /
                     std::sqrt(minkowski(l.rep, l.rep));
    return ExtScalar(std::asinh(std::abs(q)));
  }
  const ProjPoint foot = perp_foot(p, l);
  const ExtScalar d = segment_lengths(foot, p).forward;
  if (!d.finite()) return d;
  return ExtScalar(std::abs(d.re.value), d.im);
}

}  // namespace

InExcenters incenter_excenters(const HypTriangle& t) {
  const auto [ia, ea] = bisectors_at(t, 0);
  const auto [ib, eb] = bisectors_at(t, 1);
  const auto [ic, ec] = bisectors_at(t, 2);
  InExcenters out;
  out.I = meet(ia, ib);
  out.concurrency_residual = incidence_residual(out.I, ic);
  out.I_A = meet(eb, ec);
  out.I_B = meet(ea, ec);
  out.I_C = meet(ea, eb);
  out.r = point_line_distance(out.I, t.side_line(0));
  out.r_A = point_line_distance(out.I_A, t.side_line(0));
  out.r_B = point_line_distance(out.I_B, t.side_line(1));
  out.r_C = point_line_distance(out.I_C, t.side_line(2));
  return out;
}

OIReport oi_distance(const HypTriangle& t) {
  const Circumcenters cc = circumcenters(t);
  const InExcenters ie = incenter_excenters(t);
  if (cc.center[0].category != Category::Real ||
      ie.I.category != Category::Real)
    throw NonRealCenters("O and I must both be real");
  OIReport rep;
  rep.direct = same_projective(cc.center[0].rep, ie.I.rep, 1e-12)
                   ? ExtScalar(0.0)
                   : distance(cc.center[0], ie.I);
  const cplx R = cc.radius[0].cplx();
  const cplx r = ie.r.cplx();
  const cplx a = t.data.a.cplx(), b = t.data.b.cplx(), c = t.data.c.cplx();
  const cplx base = 2.0 * std::cosh(0.5 * a) * std::cosh(0.5 * b) *
                    std::cosh(0.5 * c) * std::cosh(r) * std::cosh(R);
  const cplx second = std::cosh(0.5 * (a + b + c)) * std::cosh(R - r);
  rep.formula_plus = length_from_cosh(base + second);
  rep.formula_minus = length_from_cosh(base - second);
  const double dplus = std::abs(rep.formula_plus.cplx() - rep.direct.cplx());
  const double dminus = std::abs(rep.formula_minus.cplx() - rep.direct.cplx());
  rep.sign_used = dminus <= dplus ? OISign::Minus : OISign::Plus;
  return rep;
}

LimitDeviations euclidean_limit_deviations(const HypTriangle& t, double eps) {
  const double a = t.data.a.cplx().real() * eps;
  const double b = t.data.b.cplx().real() * eps;
  const double c = t.data.c.cplx().real() * eps;
  const HypTriangle te = HypTriangle::from_sides(a, b, c);
  LimitDeviations dev;

  const CentroidReport cm = centroid(te);
  {
    // A line at the scale of the triangle, not through it.
    const double h = 0.8 * eps;
    const MVec p1{std::sinh(h), 0.0, std::cosh(h)};
    const MVec p2{std::sinh(h) * std::cos(0.4), std::sinh(h) * std::sin(0.4),
                  std::cosh(h)};
    const ProjLine y = join(classify_point(p1), classify_point(p2));
    const double dm = std::asinh(signed_sinh_distance(cm.M, y));
    const double da = std::asinh(signed_sinh_distance(te.A, y));
    const double db = std::asinh(signed_sinh_distance(te.B, y));
    const double dc = std::asinh(signed_sinh_distance(te.C, y));
    dev.centroid_line = std::min(std::abs(dm - (da + db + dc) / 3.0),
                                 std::abs(dm + (da + db + dc) / 3.0));
  }
  {
    const double h = 0.6 * eps;
    const ProjPoint Y =
        classify_point(MVec{std::sinh(h) * 0.3, std::sinh(h) * 0.8,
                            std::cosh(h)});
    auto d2 = [&](const ProjPoint& p) {
      const double d = distance(Y, p).cplx().real();
      return d * d;
    };
    const double dm = distance(Y, cm.M).cplx().real();
    dev.moment = std::abs(d2(te.A) + d2(te.B) + d2(te.C) -
                          (distance(cm.M, te.A).cplx().real() *
                               distance(cm.M, te.A).cplx().real() +
                           distance(cm.M, te.B).cplx().real() *
                               distance(cm.M, te.B).cplx().real() +
                           distance(cm.M, te.C).cplx().real() *
                               distance(cm.M, te.C).cplx().real() +
                           3.0 * dm * dm));
  }
  const Circumcenters cc = circumcenters(te);
  const InExcenters ie = incenter_excenters(te);
  const double R = cc.radius[0].cplx().real();
  const double r = ie.r.cplx().real();
  {
    const double om = distance(cc.center[0], cm.M).cplx().real();
    dev.om = std::abs(om * om - (R * R - (a * a + b * b + c * c) / 9.0));
  }
  {
    const double T = defect_area(te.data).cplx().real();
    const double sines = std::sin(te.data.alpha.cplx().real()) *
                         std::sin(te.data.beta.cplx().real()) *
                         std::sin(te.data.gamma.cplx().real());
    dev.area = std::abs(T - 2.0 * R * R * sines);
  }
  {
    const double oi = distance(cc.center[0], ie.I).cplx().real();
    dev.euler = std::abs(oi * oi - (R * R - 2.0 * r * R));
  }
  return dev;
}

}  // namespace hypgeo
