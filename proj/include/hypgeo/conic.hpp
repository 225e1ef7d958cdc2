#ifndef HYPGEO_CONIC_HPP
#define HYPGEO_CONIC_HPP

#include <array>
#include <vector>

#include "hypgeo/projective.hpp"

namespace hypgeo {

// Symmetric 3x3 matrix acting on plain homogeneous coordinates.
struct Sym3 {
  std::array<std::array<double, 3>, 3> m{};

  double eval(MVec u, MVec v) const;
  double quad(MVec u) const { return eval(u, u); }
  MVec apply(MVec v) const;

  Sym3 adjugate() const;
  double det() const;
  double frob() const;

  friend Sym3 operator+(const Sym3& a, const Sym3& b);
  friend Sym3 operator*(double s, const Sym3& a);
};

// Rank-1 conic g g^T.
Sym3 outer(MVec g);

// Real intersection points of two conics, via a degenerate member of the
// pencil, Newton-polished on both quadrics. Up to four points, each
// appearing once (projective duplicates merged).
std::vector<MVec> conic_intersect(const Sym3& A, const Sym3& B);

// The conic of a cycle {Q(x,f)^2 = level^2 * (-Q(x,x))} as a point quadric;
// its adjugate is the dual (tangent-line) quadric.
Sym3 cycle_conic(MVec axis, double level);

}  // namespace hypgeo

#endif
