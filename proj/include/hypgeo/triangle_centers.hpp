#ifndef HYPGEO_TRIANGLE_CENTERS_HPP
#define HYPGEO_TRIANGLE_CENTERS_HPP

#include <array>
#include <vector>

#include "hypgeo/cycle.hpp"
#include "hypgeo/measure.hpp"
#include "hypgeo/projective.hpp"
#include "hypgeo/trig.hpp"

namespace hypgeo {

// A triangle of the extended plane. Vertices may be of any category; the
// derived data uses the forward segments of the stored representatives.
struct HypTriangle {
  ProjPoint A, B, C;
  TriangleData data;

  static HypTriangle from_vertices(const ProjPoint& A, const ProjPoint& B,
                                   const ProjPoint& C,
                                   double tol = kClassifyTol);
  static HypTriangle from_sides(double a, double b, double c);

  const ProjPoint& vertex(int i) const { return i == 0 ? A : (i == 1 ? B : C); }
  ProjLine side_line(int i) const;  // line opposite vertex i
};

// Height from vertex i onto the opposite side line.
ExtScalar height(const HypTriangle& t, int i);

// n = sqrt(sinh s sinh(s-a) sinh(s-b) sinh(s-c)).
ExtScalar staudtian(const HypTriangle& t);
// N = sqrt(sin d sin(d+alpha) sin(d+beta) sin(d+gamma)), d the half defect.
ExtScalar angular_staudtian(const HypTriangle& t);

// Max residual over the Staudtian identity family: the product form for the
// half angles, the sine quotients for angles and sides, the half-side
// formulas, the height forms of n and N, 2n^2 = N sinh a sinh b sinh c and
// N/n = sin(alpha)/sinh(a).
double staudtian_identity_suite(const HypTriangle& t);

// Signed triangular coordinates (n_A(X) : n_B(X) : n_C(X)); the sign of an
// entry flips on the far side of the respective side line.
struct TriangularCoords {
  std::array<double, 3> n;
};
TriangularCoords triangular_coords(const ProjPoint& X, const HypTriangle& t);

// Ratio of section (B X_A C) = sinh(B X_A) / sinh(X_A C) for the cevian
// through X from vertex A.
double section_ratio(const ProjPoint& X, const HypTriangle& t, int vertex);

struct CentroidReport {
  ProjPoint M;
  double concurrency_residual = 0.0;   // medians meet in one point
  double ratio_413 = 0.0;              // sinh AM / sinh MM_A
  double ratio_414 = 0.0;              // sinh AM_A / sinh MM_A
};
CentroidReport centroid(const HypTriangle& t);

// Residual of the distance-sum identity for a test line y:
// sinh d'_M = (sinh d'_A + sinh d'_B + sinh d'_C) / W with
// W = sqrt(1 + 2(1 + cosh a + cosh b + cosh c)).
double centroid_line_identity(const HypTriangle& t, const ProjLine& y);
// Residual of cosh YM = (cosh YA + cosh YB + cosh YC) / (n / n_A(M)).
double centroid_minimality_identity(const HypTriangle& t, const ProjPoint& Y);

struct Circumcenters {
  // index 0: the cycle through the plain segments; 1..3: the variants with
  // the complementary segments around vertex A, B, C.
  std::array<ProjPoint, 4> center;
  std::array<ExtScalar, 4> radius;
  std::array<Cycle, 4> cycle;
};
Circumcenters circumcenters(const HypTriangle& t);

// tanh d = n / (2 sinh(a/2) sinh(b/2) sinh(c/2)) for the common distance of
// the vertices from the axis of their hypercyclic circumcycle; throws
// NotHypercyclic when the circumcycle is a proper circle.
ExtScalar hypercycle_three_point_distance(const ExtScalar& a,
                                          const ExtScalar& b,
                                          const ExtScalar& c);

struct InExcenters {
  ProjPoint I, I_A, I_B, I_C;
  ExtScalar r, r_A, r_B, r_C;
  double concurrency_residual = 0.0;  // interior bisectors meet in I
};
InExcenters incenter_excenters(const HypTriangle& t);

enum class OISign { Plus, Minus };

struct OIReport {
  ExtScalar direct;        // distance(O, I)
  ExtScalar formula_plus;  // arccosh of the sum with +
  ExtScalar formula_minus; // arccosh of the sum with -
  OISign sign_used = OISign::Minus;
};
// cosh OI = 2 cosh(a/2) cosh(b/2) cosh(c/2) cosh r cosh R
//           -+ cosh((a+b+c)/2) cosh(R - r); reports which sign matches.
OIReport oi_distance(const HypTriangle& t);

struct LimitDeviations {
  double centroid_line;   // d'_M vs mean of d'_A, d'_B, d'_C
  double moment;          // YA^2+YB^2+YC^2 vs MA^2+MB^2+MC^2+3YM^2
  double om;              // OM^2 vs R^2 - (a^2+b^2+c^2)/9
  double area;            // T vs 2 R^2 sin a sin b sin g
  double euler;           // OI^2 vs R^2 - 2 r R
};
// Deviations of the Euclidean identities for the triangle scaled by eps.
LimitDeviations euclidean_limit_deviations(const HypTriangle& t, double eps);

}  // namespace hypgeo

#endif
