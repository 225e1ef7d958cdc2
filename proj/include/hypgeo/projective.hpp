#ifndef HYPGEO_PROJECTIVE_HPP
#define HYPGEO_PROJECTIVE_HPP

#include <array>
#include <cmath>
#include <string>

#include "hypgeo/errors.hpp"
#include "hypgeo/extscalar.hpp"

namespace hypgeo {

// Coordinate vector of the Minkowski model. The bilinear form has signature
// (+,+,-):  Q(u,v) = u.x v.x + u.y v.y - u.z v.z.  Real points of the
// hyperbolic plane are the projective classes with Q < 0, the absolute is
// Q = 0, ideal points lie outside at Q > 0.
struct MVec {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr MVec() = default;
  constexpr MVec(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  friend constexpr MVec operator+(MVec a, MVec b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr MVec operator-(MVec a, MVec b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr MVec operator*(double s, MVec v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend constexpr MVec operator-(MVec v) { return {-v.x, -v.y, -v.z}; }
  friend constexpr bool operator==(MVec a, MVec b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

constexpr double minkowski(MVec u, MVec v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

// Euclidean norm of the coordinate triple, used for relative tolerances.
double coord_norm(MVec v);

// Dual of the span of two vectors: Q(cross(u,v), u) = Q(cross(u,v), v) = 0.
MVec mink_cross(MVec u, MVec v);

enum class Category : std::uint8_t { Real, AtInfinity, Ideal };

std::string to_string(Category c);

constexpr double kClassifyTol = 1e-9;  // relative, |Q| <= tol * |rep|^2

// A projective point, classified against the absolute. The representative
// vector is normalized (see classify_point) but its sign is preserved; for
// ideal and infinite points the sign selects which of the two segments
// toward another point counts as the forward one.
struct ProjPoint {
  MVec rep;
  Category category = Category::Real;
};

// A projective line, stored as its Q-dual vector (the pole): the line is
// the point set { x : Q(x, rep) = 0 }. Q(rep,rep) > 0 means a real line,
// = 0 a line at infinity (tangent to the absolute), < 0 an ideal line.
struct ProjLine {
  MVec rep;
  Category category = Category::Real;
};

ProjPoint classify_point(MVec p, double tol = kClassifyTol);
ProjLine classify_line(MVec l, double tol = kClassifyTol);

ProjPoint pole(const ProjLine& l, double tol = kClassifyTol);
ProjLine polar(const ProjPoint& p, double tol = kClassifyTol);

bool same_projective(MVec a, MVec b, double tol = kClassifyTol);

ProjLine join(const ProjPoint& p, const ProjPoint& q,
              double tol = kClassifyTol);
ProjPoint meet(const ProjLine& a, const ProjLine& b, double tol = kClassifyTol);

bool incident(const ProjPoint& p, const ProjLine& l, double tol = kClassifyTol);

// Incidence residual |Q(p,l)| scaled by the representative norms.
double incidence_residual(const ProjPoint& p, const ProjLine& l);

// Midpoint of the segment spanned by the representatives (for two real
// points the real midpoint; for two ideal points on a real line the real
// fixed point of the swap, i.e. the midpoint of the segment between the
// polar feet).
ProjPoint midpoint(const ProjPoint& a, const ProjPoint& b,
                   double tol = kClassifyTol);

// Line through p orthogonal to l.
ProjLine perpendicular(const ProjPoint& p, const ProjLine& l,
                       double tol = kClassifyTol);
// Foot of the perpendicular from p on l.
ProjPoint perp_foot(const ProjPoint& p, const ProjLine& l,
                    double tol = kClassifyTol);

// A Q-orthogonal transformation (hyperbolic motion). Covectors transform by
// the same matrix.
struct Motion {
  std::array<std::array<double, 3>, 3> m{};

  static Motion identity();
  static Motion rotation(double theta);          // about (0,0,1)
  static Motion boost_x(double t);               // translation along y = 0
  static Motion compose(const Motion& a, const Motion& b);

  MVec apply(MVec v) const;
  ProjPoint apply(const ProjPoint& p) const;
  ProjLine apply(const ProjLine& l) const;
};

// Orthonormal 2-basis of a real line: e0 timelike (Q=-1, z>0), e1 spacelike
// (Q=+1), both on the line. Coordinates of incident vectors follow as
// (c0, c1) = (-Q(v,e0), Q(v,e1)).
struct LineBasis {
  MVec e0, e1;
  std::array<double, 2> coords(MVec v) const {
    return {-minkowski(v, e0), minkowski(v, e1)};
  }
  MVec vec(double c0, double c1) const { return c0 * e0 + c1 * e1; }
};

// Throws if the line is not real.
LineBasis line_basis(const ProjLine& l, double tol = kClassifyTol);

// Extended position of a point of a real line in a given basis:
// real points map to their signed distance t from e0, ideal points to
// t + (pi/2)i where t locates the foot of their polar, infinite points to
// +-inf. Signed extended lengths along the line are tau differences.
ExtScalar line_tau(const LineBasis& basis, const ProjPoint& p,
                   double tol = kClassifyTol);

// Point of the line at extended position tau (inverse of line_tau).
ProjPoint point_at_tau(const LineBasis& basis, const ExtScalar& tau,
                       double tol = kClassifyTol);

}  // namespace hypgeo

#endif
