#ifndef HYPGEO_CYCLE_HPP
#define HYPGEO_CYCLE_HPP

#include <array>
#include <optional>
#include <vector>

#include "hypgeo/conic.hpp"
#include "hypgeo/extscalar.hpp"
#include "hypgeo/measure.hpp"
#include "hypgeo/projective.hpp"

namespace hypgeo {

enum class CycleKind : std::uint8_t { Circle, Paracycle, Hypercycle, PointCycle };

std::string to_string(CycleKind k);

// A cycle is the real point set { x : Q(x, axis) = level } over normalized
// point representatives. One pair (axis, level) covers circles (timelike
// axis), paracycles (lightlike axis), hypercycles and lines (spacelike
// axis, lines at level 0) and degenerate point cycles. Stored canonically:
// |Q(axis,axis)| is 1 (or the lightlike scale fixing level = -1), level <= 0,
// circle axes on the upper sheet.
class Cycle {
 public:
  // The point cycle at the origin; mostly useful as a container default.
  Cycle() = default;
  // Canonicalizes and validates; throws EmptyCycle if no real points solve
  // the equation and ZeroVector for a vanishing axis.
  Cycle(MVec axis, double level, double tol = kClassifyTol);

  const MVec& axis() const { return axis_; }
  double level() const { return level_; }
  CycleKind kind() const { return kind_; }

  ProjPoint center() const;
  ExtScalar radius() const;
  bool is_line(double tol = 1e-12) const {
    return kind_ == CycleKind::Hypercycle && std::abs(level_) <= tol;
  }

  // sqrt(level^2 + Q(axis,axis)): sinh r, 1, cosh t for circle, paracycle,
  // hypercycle; zero only for point cycles.
  double sigma() const;

  Sym3 conic() const { return cycle_conic(axis_, level_); }

  bool operator==(const Cycle& o) const = default;

 private:
  MVec axis_{0.0, 0.0, 1.0};
  double level_ = -1.0;
  CycleKind kind_ = CycleKind::PointCycle;
};

Cycle cycle_from_center_radius(const ProjPoint& center, const ExtScalar& r);
// Cycle centered at `center` through `p`; the only way to pin a paracycle.
Cycle cycle_from_center_point(const ProjPoint& center, const ProjPoint& p);
Cycle line_cycle(const ProjLine& l);
Cycle point_cycle(const ProjPoint& p);

// Cycle through three points: solves Q(x_i, f) = sign_i * level. Flipped
// signs select the complementary-segment variants (the hypercycles through
// the same vertices).
Cycle cycle_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                    std::array<int, 3> signs = {1, 1, 1});

bool on_cycle(const Cycle& c, const ProjPoint& p, double tol = 1e-9);
// Membership in the full conic |Q(p, axis)| = |level|, which includes the
// mirror branch of a hypercycle (where images of points that wrap through
// infinity land, and where the complementary-segment circumcycles run).
bool on_full_cycle(const Cycle& c, const ProjPoint& p, double tol = 1e-9);
// Q(p, axis) > level side (circle interiors, horoball, axis side).
bool in_interior(const Cycle& c, const ProjPoint& p);
// A real point strictly inside, at offset `depth` from a curve point.
ProjPoint interior_witness(const Cycle& c, double depth = 0.25);

std::vector<ProjPoint> sample_points(const Cycle& c, int n);

// Real intersection points of a real line with a cycle (0, 1 or 2).
std::vector<ProjPoint> intersect_line_cycle(const ProjLine& l, const Cycle& c,
                                            double tol = kClassifyTol);

// Vector of the cycle space R^{3,1}: <(f,mu),(g,nu)> = Q(f,g) + mu*nu.
// Cycles are unit vectors, points lift to null vectors (p, -1).
struct CVec {
  MVec f;
  double mu = 0.0;
};
double cinner(const CVec& a, const CVec& b);
CVec cvec_sub(const CVec& a, const CVec& b);
CVec ivec(const Cycle& c);            // unit vector; throws on point cycles
CVec lift_point(const ProjPoint& p);  // null lift of a real point
// <ivec(c1), ivec(c2)>: -1 at external tangency, +1 at internal.
double inversive_product(const Cycle& a, const Cycle& b);

// Power of a point: tanh(PA/2) tanh(PB/2) over a chord through P meeting
// the cycle in A, B, with signed extended lengths along the oriented chord.
// Chord-independent; for an ideal P the value is reported with nonnegative
// imaginary part (the orientation of a chord is not intrinsic).
ExtScalar power(const ProjPoint& P, const Cycle& c, const ProjLine& chord,
                double tol = kClassifyTol);

// Locus of equal powers of two cycles.
ProjLine power_axis(const Cycle& c1, const Cycle& c2,
                    double tol = kClassifyTol);

enum class TangencyKind : std::uint8_t { External, Internal, None };

struct TangencyReport {
  double residual = 0.0;
  TangencyKind kind = TangencyKind::None;
};

// |distance(centers) - (r1 +- r2)| in the extended metric, minimized over
// the sign and the two center segments; the minimizing sign names the kind
// (None when the residual exceeds tol). Paracycles, whose center distances
// degenerate to inf - inf, are measured by the inversive product instead.
TangencyReport tangency(const Cycle& c1, const Cycle& c2, double tol = 1e-7);

struct SimilitudePair {
  ProjPoint external;
  ProjPoint internal;
  int case_tag = 0;  // 1..6: CC, CP, CH, PP, PH, HH by cycle kinds
};

// Centers of similitude. Circle pairs use the closed form; the other kind
// combinations intersect common tangents; the internal center of
// intersecting circles falls back to the sinh-ratio division.
SimilitudePair similitude_centers(const Cycle& c1, const Cycle& c2,
                                  double tol = kClassifyTol);
// Tangent-intersection route for any kinds (the oracle for the closed form).
SimilitudePair similitude_centers_via_tangents(const Cycle& c1,
                                               const Cycle& c2,
                                               double tol = kClassifyTol);

// Common tangent lines of two cycles (up to four).
std::vector<ProjLine> common_tangents(const Cycle& c1, const Cycle& c2,
                                      double tol = kClassifyTol);

// Deviation of tanh(SM/2) : tanh(SM'/2) along one secant from the ratio
// along the center line, minimized over the point pairings.
double secant_ratio_check(const ProjPoint& S, const Cycle& c1, const Cycle& c2,
                          const ProjLine& secant, double tol = kClassifyTol);

// The four axes of similitude of three cycles; axis k contains three of the
// six pairwise centers.
std::array<ProjLine, 4> similitude_axes(const Cycle& c1, const Cycle& c2,
                                        const Cycle& c3,
                                        double tol = kClassifyTol);

// Inversion with center S and constant k = tanh(SM/2) tanh(SN'/2). Realized
// as the reflection in a cycle vector, which covers real, infinite and
// ideal centers uniformly.
struct Inversion {
  ProjPoint center;
  ExtScalar power_k;
  CVec vec;  // reflection vector; <vec,vec> != 0
};

Inversion inversion_in_cycle(const Cycle& c);
// Real center: real k != 0. Ideal center: unimodular complex k != 1, the
// branch with the fixed hypercycle on the oriented side of the rep.
Inversion make_inversion(const ProjPoint& center, const ExtScalar& k);
// Inversion at the external similitude center swapping the two cycles.
Inversion inversion_swapping(const Cycle& c1, const Cycle& c2);

// Image of a point. The map is the projective extension of the defining
// product: points so deep inside the fixed cycle that tanh(SM/2) falls
// below the constant have half-lines that close up through infinity, and
// their images come back on the far side (where the product holds with the
// complementary segment reading).
ProjPoint invert_point(const Inversion& inv, const ProjPoint& m,
                       double tol = kClassifyTol);
Cycle invert_cycle(const Inversion& inv, const Cycle& c);

// All cycles tangent to the three given ones with the requested tangency
// kind per cycle (point-cycle constraints are incidences and ignore the
// flag). Solved in cycle-vector space: three linear conditions against the
// unit quadric. Results are verified and sorted by radius; throws
// NoSolution if no candidate satisfies the requested kinds.
std::vector<Cycle> tangent_cycles(const Cycle& c1, const Cycle& c2,
                                  const Cycle& c3,
                                  std::array<TangencyKind, 3> kinds,
                                  double residual_tol = 1e-7);

}  // namespace hypgeo

#endif
