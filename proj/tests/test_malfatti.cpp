#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypgeo/malfatti.hpp"
#include "support/direct_malfatti.hpp"
#include "support/testutil.hpp"

using namespace hypgeo;
using testutil::Rng;

namespace {

Cycle circle_at(double x, double y, double r) {
  const double d = std::hypot(x, y);
  const MVec center = d == 0.0
                          ? MVec{0, 0, 1}
                          : MVec{std::sinh(d) * x / d, std::sinh(d) * y / d,
                                 std::cosh(d)};
  return cycle_from_center_radius(classify_point(center), ExtScalar(r));
}

MalfattiInstance symmetric_instance(double rho = 1.0, double r = 0.35) {
  std::array<Cycle, 3> c;
  for (int k = 0; k < 3; ++k) {
    const double th = 2.0 * kPi * k / 3.0;
    c[k] = circle_at(rho * std::cos(th), rho * std::sin(th), r);
  }
  return make_malfatti_instance(c[0], c[1], c[2]);
}

bool cycles_match(const Cycle& a, const Cycle& b, double tol) {
  return same_projective(a.axis(), b.axis(), tol) &&
         std::abs(a.level() - b.level()) < tol;
}

MalfattiInstance random_instance(Rng& rng) {
  for (;;) {
    std::array<Cycle, 3> c;
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      const double th = 2.0 * kPi * k / 3.0 + rng.uniform(-0.4, 0.4);
      const double rho = rng.uniform(0.7, 1.3);
      const double r = rng.uniform(0.15, 0.45);
      c[k] = circle_at(rho * std::cos(th), rho * std::sin(th), r);
    }
    if (!ok) continue;
    // Separation >= 0.1 and radius ratio <= 3.
    double rmin = 1e9, rmax = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double r = c[k].radius().cplx().real();
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
    }
    if (rmax / rmin > 3.0) continue;
    bool separated = true;
    for (int i = 0; i < 3 && separated; ++i)
      for (int j = i + 1; j < 3 && separated; ++j) {
        const double d = distance(classify_point(c[i].axis()),
                                  classify_point(c[j].axis()))
                             .cplx()
                             .real();
        const double gap = d - c[i].radius().cplx().real() -
                           c[j].radius().cplx().real();
        if (gap < 0.1) separated = false;
      }
    if (!separated) continue;
    return make_malfatti_instance(c[0], c[1], c[2]);
  }
}

}  // namespace

TEST_CASE("step 1 swap cycles separate and exchange the pairs") {
  const MalfattiInstance inst = symmetric_instance();
  const auto inv = steiner_step1(inst);
  const std::array<std::array<int, 2>, 3> others{{{1, 2}, {0, 2}, {0, 1}}};
  for (int k = 0; k < 3; ++k) {
    const Inversion swap = inversion_in_cycle(inv[k]);
    const Cycle img = invert_cycle(swap, inst.c[others[k][0]]);
    CHECK(cycles_match(img, inst.c[others[k][1]], 1e-9));
    // The swap cycle separates the pair: sampled points of the two given
    // cycles lie on opposite sides.
    for (const ProjPoint& p : sample_points(inst.c[others[k][0]], 8))
      for (const ProjPoint& q : sample_points(inst.c[others[k][1]], 8)) {
        const double sp = minkowski(p.rep, inv[k].axis()) - inv[k].level();
        const double sq = minkowski(q.rep, inv[k].axis()) - inv[k].level();
        CHECK(sp * sq < 0.0);
      }
  }
}

TEST_CASE("symmetric instance: full pipeline with congruent solution") {
  const MalfattiInstance inst = symmetric_instance();
  const MalfattiSolution sol = malfatti_steiner(inst);
  const MalfattiCheck check = verify_malfatti(sol, inst);
  CHECK(check.pass(1e-8));
  CHECK(check.entries.size() == 9);
  for (const auto& e : check.entries) {
    CHECK(e.residual < 1e-8);
    CHECK(e.kind == TangencyKind::External);
  }
  // Threefold symmetry: congruent Malfatti cycles and congruent l cycles.
  const double r0 = sol.m[0].radius().cplx().real();
  CHECK(std::abs(sol.m[1].radius().cplx().real() - r0) < 1e-8);
  CHECK(std::abs(sol.m[2].radius().cplx().real() - r0) < 1e-8);
  const double lr0 = sol.l[0].radius().cplx().real();
  CHECK(std::abs(sol.l[1].radius().cplx().real() - lr0) < 1e-7);
  CHECK(std::abs(sol.l[2].radius().cplx().real() - lr0) < 1e-7);
  // The k cycles touch their given cycles at the P points.
  for (int x = 0; x < 3; ++x) {
    CHECK(on_cycle(sol.k[x], sol.P[x], 1e-8));
    CHECK(on_cycle(inst.c[x], sol.P[x], 1e-8));
    CHECK(on_cycle(sol.l[x], sol.P[x], 1e-8));
  }
  CHECK(sol.fourth_tangency_residual < 1e-8);

  // Perturbing a solution cycle breaks the verification locally.
  MalfattiSolution bad = sol;
  bad.m[0] = Cycle(bad.m[0].axis(), bad.m[0].level() - 1e-3);
  const MalfattiCheck badcheck = verify_malfatti(bad, inst);
  CHECK(!badcheck.pass(1e-8));
  int touched = 0;
  for (const auto& e : badcheck.entries)
    if (e.residual > 1e-6) ++touched;
  CHECK(touched == 4);  // exactly the four tangencies involving m1
}

TEST_CASE("random admissible instances succeed and agree with the direct solve") {
  Rng rng(139);
  int done = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const MalfattiInstance inst = random_instance(rng);
    MalfattiSolution sol;
    try {
      sol = malfatti_steiner(inst);
    } catch (const GeometryError& e) {
      FAIL_CHECK(e.what());
      continue;
    }
    const MalfattiCheck check = verify_malfatti(sol, inst);
    CHECK(check.pass(1e-8));

    const auto direct = direct_malfatti::solve_from_scratch(inst);
    REQUIRE(direct.has_value());
    // Match solution cycles pairwise (both sorted by angle of the center).
    for (int j = 0; j < 3; ++j) {
      double best = 1e300;
      for (int i = 0; i < 3; ++i) {
        const double d =
            coord_norm(sol.m[j].axis() - (*direct)[i].axis()) +
            std::abs(sol.m[j].level() - (*direct)[i].level());
        best = std::min(best, d);
      }
      CHECK(best < 1e-7);
    }
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("equivariance under motions") {
  Rng rng(149);
  const MalfattiInstance inst = symmetric_instance(0.9, 0.3);
  const MalfattiSolution sol = malfatti_steiner(inst);
  const Motion mo = testutil::random_motion(rng);
  std::array<Cycle, 3> moved;
  for (int i = 0; i < 3; ++i) {
    // Cycles transform by mapping axis vectors (levels are invariant).
    moved[i] = Cycle(mo.apply(inst.c[i].axis()), inst.c[i].level());
  }
  const MalfattiInstance minst =
      make_malfatti_instance(moved[0], moved[1], moved[2]);
  const MalfattiSolution msol = malfatti_steiner(minst);
  for (int j = 0; j < 3; ++j) {
    double best = 1e300;
    for (int i = 0; i < 3; ++i) {
      const Cycle mapped = Cycle(mo.apply(sol.m[j].axis()), sol.m[j].level());
      best = std::min(best,
                      coord_norm(mapped.axis() - msol.m[i].axis()) +
                          std::abs(mapped.level() - msol.m[i].level()));
    }
    CHECK(best < 1e-9);
  }
}

TEST_CASE("classical instance: three lines of a triangle") {
  // Sides of a fat triangle as line cycles, oriented toward the interior.
  const double h = 1.2;
  std::array<Cycle, 3> sides;
  for (int k = 0; k < 3; ++k) {
    const double th = 2.0 * kPi * k / 3.0;
    // Line at distance h from the origin, polar of an ideal point.
    const MVec pole{std::cosh(h) * std::cos(th), std::cosh(h) * std::sin(th),
                    std::sinh(h)};
    Cycle line = line_cycle(classify_line(pole));
    // Orient the interior side toward the origin.
    if (minkowski(MVec{0, 0, 1}, line.axis()) < line.level())
      line = Cycle(-line.axis(), line.level());
    sides[k] = line;
  }
  const MalfattiInstance inst =
      make_malfatti_instance(sides[0], sides[1], sides[2]);
  const MalfattiSolution sol = malfatti_steiner(inst);
  const MalfattiCheck check = verify_malfatti(sol, inst);
  CHECK(check.pass(1e-8));
  for (const Cycle& m : sol.m) CHECK(m.kind() == CycleKind::Circle);
}

TEST_CASE("overlapping input is rejected") {
  CHECK_THROWS_AS(make_malfatti_instance(circle_at(-0.3, 0, 0.4),
                                         circle_at(0.3, 0, 0.4),
                                         circle_at(0, 1.2, 0.3)),
                  GeometryError);
}
