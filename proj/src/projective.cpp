#include "hypgeo/projective.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hypgeo {

double coord_norm(MVec v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

MVec mink_cross(MVec u, MVec v) {
  // Euclidean cross product with the z component negated gives the Q-dual.
  const double cx = u.y * v.z - u.z * v.y;
  const double cy = u.z * v.x - u.x * v.z;
  const double cz = u.x * v.y - u.y * v.x;
  return {cx, cy, -cz};
}

std::string to_string(Category c) {
  switch (c) {
    case Category::Real: return "real";
    case Category::AtInfinity: return "at_infinity";
    case Category::Ideal: return "ideal";
  }
  return "?";
}

namespace {

Category categorize(MVec v, double tol, double* q_out) {
  const double n = coord_norm(v);
  if (n == 0.0) throw ZeroVector("cannot classify the zero vector");
  const double q = minkowski(v, v);
  if (q_out) *q_out = q;
  if (std::abs(q) <= tol * n * n) return Category::AtInfinity;
  return q < 0.0 ? Category::Real : Category::Ideal;
}

// Scale to |Q| = 1 where possible; lightlike vectors are scaled so the
// largest coordinate magnitude is 1 (that coordinate is always z). Real
// points are lifted to the upper sheet, other categories keep their sign.
MVec normalize_rep(MVec v, Category cat, double q) {
  switch (cat) {
    case Category::Real: {
      MVec u = (1.0 / std::sqrt(-q)) * v;
      if (u.z < 0.0) u = -u;
      return u;
    }
    case Category::Ideal:
      return (1.0 / std::sqrt(q)) * v;
    case Category::AtInfinity: {
      const double m = std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
      return (1.0 / m) * v;
    }
  }
  return v;
}

}  // namespace

ProjPoint classify_point(MVec p, double tol) {
  double q = 0.0;
  const Category cat = categorize(p, tol, &q);
  return ProjPoint{normalize_rep(p, cat, q), cat};
}

ProjLine classify_line(MVec l, double tol) {
  double q = 0.0;
  const Category cat_as_point = categorize(l, tol, &q);
  // Category of the line is dual to the category of its pole.
  Category cat = cat_as_point;
  if (cat_as_point == Category::Real) cat = Category::Ideal;
  else if (cat_as_point == Category::Ideal) cat = Category::Real;
  return ProjLine{normalize_rep(l, cat_as_point, q), cat};
}

ProjPoint pole(const ProjLine& l, double tol) { return classify_point(l.rep, tol); }

ProjLine polar(const ProjPoint& p, double tol) { return classify_line(p.rep, tol); }

bool same_projective(MVec a, MVec b, double tol) {
  const MVec c = mink_cross(a, b);
  // mink_cross only flips a sign, so the Euclidean cross-product bound holds.
  return coord_norm(c) <= tol * coord_norm(a) * coord_norm(b);
}

ProjLine join(const ProjPoint& p, const ProjPoint& q, double tol) {
  const MVec l = mink_cross(p.rep, q.rep);
  const double n = coord_norm(l);
  if (n <= tol * coord_norm(p.rep) * coord_norm(q.rep))
    throw CoincidentArguments("join of coincident points");
  return classify_line(l, tol);
}

ProjPoint meet(const ProjLine& a, const ProjLine& b, double tol) {
  const MVec p = mink_cross(a.rep, b.rep);
  const double n = coord_norm(p);
  if (n <= tol * coord_norm(a.rep) * coord_norm(b.rep))
    throw CoincidentArguments("meet of coincident lines");
  return classify_point(p, tol);
}

bool incident(const ProjPoint& p, const ProjLine& l, double tol) {
  return std::abs(minkowski(p.rep, l.rep)) <=
         tol * coord_norm(p.rep) * coord_norm(l.rep);
}

double incidence_residual(const ProjPoint& p, const ProjLine& l) {
  return std::abs(minkowski(p.rep, l.rep)) /
         (coord_norm(p.rep) * coord_norm(l.rep));
}

ProjPoint midpoint(const ProjPoint& a, const ProjPoint& b, double tol) {
  const MVec m = a.rep + b.rep;
  const double q = minkowski(m, m);
  if (!(q < 0.0))
    throw DegenerateConfiguration("midpoint of this pair is not a real point");
  (void)tol;
  return classify_point(m, tol);
}

ProjLine perpendicular(const ProjPoint& p, const ProjLine& l, double tol) {
  return join(p, pole(l, tol), tol);
}

ProjPoint perp_foot(const ProjPoint& p, const ProjLine& l, double tol) {
  return meet(perpendicular(p, l, tol), l, tol);
}

Motion Motion::identity() {
  Motion mo;
  for (int i = 0; i < 3; ++i) mo.m[i][i] = 1.0;
  return mo;
}

Motion Motion::rotation(double theta) {
  Motion mo = identity();
  const double c = std::cos(theta), s = std::sin(theta);
  mo.m[0][0] = c; mo.m[0][1] = -s;
  mo.m[1][0] = s; mo.m[1][1] = c;
  return mo;
}

Motion Motion::boost_x(double t) {
  Motion mo = identity();
  const double c = std::cosh(t), s = std::sinh(t);
  mo.m[0][0] = c; mo.m[0][2] = s;
  mo.m[2][0] = s; mo.m[2][2] = c;
  return mo;
}

Motion Motion::compose(const Motion& a, const Motion& b) {
  Motion r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

MVec Motion::apply(MVec v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

ProjPoint Motion::apply(const ProjPoint& p) const {
  return ProjPoint{apply(p.rep), p.category};
}

ProjLine Motion::apply(const ProjLine& l) const {
  return ProjLine{apply(l.rep), l.category};
}

LineBasis line_basis(const ProjLine& l, double tol) {
  if (l.category != Category::Real)
    throw DegenerateConfiguration("line basis requires a real line");
  const double qll = minkowski(l.rep, l.rep);
  // Q-orthogonal projection of the z axis into the plane Q(x, l) = 0 is
  // always timelike there (the plane of a real line has signature (+,-)).
  const MVec ez{0, 0, 1};
  MVec e0 = ez - (minkowski(ez, l.rep) / qll) * l.rep;
  const double q0 = minkowski(e0, e0);
  e0 = (1.0 / std::sqrt(-q0)) * e0;
  if (e0.z < 0.0) e0 = -e0;
  MVec e1 = mink_cross(l.rep, e0);
  const double q1 = minkowski(e1, e1);
  e1 = (1.0 / std::sqrt(q1)) * e1;
  (void)tol;
  return LineBasis{e0, e1};
}

ExtScalar line_tau(const LineBasis& basis, const ProjPoint& p, double tol) {
  const auto c = basis.coords(p.rep);
  const double c0 = c[0], c1 = c[1];
  const double n = std::hypot(c0, c1);
  if (n == 0.0) throw ZeroVector("point does not lie on the line");
  switch (p.category) {
    case Category::Real:
      // Stored reps sit on the upper sheet, so c0 > 0.
      return ExtScalar(std::atanh(c1 / std::abs(c0) * (c0 < 0 ? -1.0 : 1.0)));
    case Category::AtInfinity:
      return (c1 / c0 > 0.0) ? ExtScalar::plus_inf() : ExtScalar::minus_inf();
    case Category::Ideal: {
      const double q = std::atanh(c0 / c1);
      const double sigma = c1 > 0.0 ? 1.0 : -1.0;
      return ExtScalar(sigma * q, kPi / 2);
    }
  }
  (void)tol;
  throw GeometryError("unreachable");
}

ProjPoint point_at_tau(const LineBasis& basis, const ExtScalar& tau,
                       double tol) {
  if (!tau.finite()) {
    const double s = tau.re.inf_sign() > 0 ? 1.0 : -1.0;
    return classify_point(basis.vec(1.0, s), tol);
  }
  const double t = tau.re.value;
  if (std::abs(tau.im) <= 1e-9)
    return classify_point(basis.vec(std::cosh(t), std::sinh(t)), tol);
  if (std::abs(tau.im - kPi / 2) <= 1e-9)
    return classify_point(basis.vec(std::sinh(t), std::cosh(t)), tol);
  if (std::abs(tau.im + kPi / 2) <= 1e-9)
    return classify_point(basis.vec(std::sinh(t), -std::cosh(t)), tol);
  throw GeometryError("tau has no point on the line: imaginary part must be 0 or +-pi/2");
}

}  // namespace hypgeo
