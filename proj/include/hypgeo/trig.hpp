#ifndef HYPGEO_TRIG_HPP
#define HYPGEO_TRIG_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "hypgeo/extscalar.hpp"
#include "hypgeo/measure.hpp"
#include "hypgeo/projective.hpp"

namespace hypgeo {

// Branch helpers. All follow the selection that keeps imaginary parts of
// lengths in {0, pi/2, pi} and gives ultraparallel angles a negative
// imaginary part: acos(x > 1) = -i*arcosh(x), atanh(x > 1) = atanh(1/x) + i*pi/2.
ExtScalar angle_from_cos(std::complex<double> c, double clamp_tol = 1e-12);
ExtScalar length_from_cosh(std::complex<double> c, double clamp_tol = 1e-12);
ExtScalar length_from_tanh(std::complex<double> c, double clamp_tol = 1e-12);

// Sides, angles and derived quantities of a triangle, all extended scalars.
struct TriangleData {
  ExtScalar a, b, c;
  ExtScalar alpha, beta, gamma;
  ExtScalar s;      // semiperimeter
  ExtScalar delta;  // half defect, 2*delta = pi - (alpha+beta+gamma)

  static TriangleData from_sides(const ExtScalar& a, const ExtScalar& b,
                                 const ExtScalar& c);
};

// Law of cosines: cosh c = cosh a cosh b - sinh a sinh b cos gamma.
ExtScalar side_from_cosine_law(const ExtScalar& a, const ExtScalar& b,
                               const ExtScalar& gamma);

// Dual law: cos gamma = -cos alpha cos beta + sin alpha sin beta cosh c.
ExtScalar angle_from_dual_cosine_law(const ExtScalar& alpha,
                                     const ExtScalar& beta,
                                     const ExtScalar& c);

// Max cyclic deviation of sinh a sin beta = sinh b sin alpha.
double sine_law_residual(const TriangleData& t);

// T = pi - (alpha + beta + gamma).
ExtScalar defect_area(const TriangleData& t);

// Area from a height m_a and the signed parts a1 + a2 into which its foot
// splits the opposite side: T/2 = atan(tanh(a1/2) tanh(m_a/2)) +
// atan(tanh(a2/2) tanh(m_a/2)).
ExtScalar area_via_height(const ExtScalar& a1, const ExtScalar& a2,
                          const ExtScalar& m_a);

// tan(T/4) = sqrt(tanh(s/2) tanh((s-a)/2) tanh((s-b)/2) tanh((s-c)/2)).
ExtScalar heron_area(const ExtScalar& a, const ExtScalar& b,
                     const ExtScalar& c);

// Quadrangle with right angles at A, B, D; phi is the angle at C.
// Sides AB = a, BC = b, CD = c, DA = d.
struct LambertData {
  ExtScalar a, b, c, d, phi;
};

// Solve the quadrangle from the two sides a, d adjacent to the right angle
// at A. Throws NoRealSolution when sinh a sinh d > 1; at the boundary the
// quadrangle degenerates to b = c = +inf, phi = 0.
LambertData lambert_solve(const ExtScalar& a, const ExtScalar& d);

// Max residual over the eight side/angle relations of the quadrangle.
double lambert_residuals(const LambertData& q);

// Right-angled pentagon with consecutive side lengths a, b, c, d, e:
// cosh d = sinh a sinh b, sinh c = cosh a / w, sinh e = cosh b / w with
// w = sqrt(sinh^2 a sinh^2 b - 1). Throws NoRealPentagon for
// sinh a sinh b <= 1.
struct PentagonSides {
  ExtScalar c, d, e;
};
PentagonSides pentagon_solve(const ExtScalar& a, const ExtScalar& b);

// One case of the extended sine theorem sinh a = sinh c sin alpha on a
// triangle with the right angle at a real vertex C.
struct SineCaseReport {
  std::string label;           // vertex categories, e.g. "A ideal, B real"
  bool indeterminate = false;  // inf * 0 occurred, nothing to check
  double residual = 0.0;       // |sinh c sin alpha - sinh a| when determinate
};

// Verifies the theorem for the configuration of the given vertices; the
// right angle must be at C and C must be real.
SineCaseReport extended_sine_check(const ProjPoint& A, const ProjPoint& B,
                                   const ProjPoint& C,
                                   double tol = kClassifyTol);

}  // namespace hypgeo

#endif
