#ifndef HYPGEO_MEASURE_HPP
#define HYPGEO_MEASURE_HPP

#include "hypgeo/extscalar.hpp"
#include "hypgeo/projective.hpp"

namespace hypgeo {

// The two segment lengths determined by a pair of points (or the two angles
// of a pair of lines). When both entries are finite the segments sum to
// pi*i and the angles to pi.
struct SegmentPair {
  ExtScalar forward;
  ExtScalar backward;
};

// Lengths of the two segments AB and BA. The forward segment is the set of
// nonnegative combinations of the stored representatives, so flipping the
// sign of an ideal or infinite representative swaps the roles. Real pairs
// give (d, -d + pi i); a real/ideal pair gives (+-d + (pi/2)i, ...) with
// positive sign exactly when the polar of the ideal point crosses the
// forward segment; pairs with a point at infinity on a real line give
// (+inf, -inf) with +inf on the side whose segment carries only real points.
SegmentPair segment_lengths(const ProjPoint& A, const ProjPoint& B,
                            double tol = kClassifyTol);

// Same with the carrier line given explicitly. This admits the one
// degenerate configuration the pairwise form cannot: two coincident points
// at infinity on a line at infinity, whose segments measure (0, pi i).
SegmentPair segment_lengths_on_line(const ProjPoint& A, const ProjPoint& B,
                                    const ProjLine& l,
                                    double tol = kClassifyTol);

// The two angles of a pair of lines, derived from the segment pair of their
// poles. Real intersecting lines give (phi, pi - phi); real parallels give
// (0, pi); ultraparallel lines give (p/i, pi - p/i) with p the length of the
// common perpendicular (negative imaginary part, the branch that makes
// cos(angle) = cosh p).
SegmentPair line_angle(const ProjLine& a, const ProjLine& b,
                       double tol = kClassifyTol);

// Hyperbolic distance of two points as a single extended value (the forward
// segment length).
ExtScalar distance(const ProjPoint& A, const ProjPoint& B,
                   double tol = kClassifyTol);

// Residual of the duality "distance = i * angle of the polars", matched
// over the two domain choices of each measure (values compare modulo pi*i).
double duality_check(const ProjPoint& A, const ProjPoint& B,
                     double tol = kClassifyTol);

// Signed distance from a point to a real line: sinh of it equals Q(p, l)
// for normalized representatives; the sign identifies the side.
double signed_sinh_distance(const ProjPoint& p, const ProjLine& l);

}  // namespace hypgeo

#endif
