#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hypgeo/cycle.hpp"
#include "support/frozen.hpp"
#include "support/testutil.hpp"

using namespace hypgeo;
using testutil::Rng;

namespace {

Cycle circle_at(double x, double r, double y = 0.0) {
  const double d = std::hypot(x, y);
  const MVec center = d == 0.0
                          ? MVec{0, 0, 1}
                          : MVec{std::sinh(d) * x / d, std::sinh(d) * y / d,
                                 std::cosh(d)};
  return cycle_from_center_radius(classify_point(center), ExtScalar(r));
}

double residual_on(const Cycle& c, const ProjPoint& p) {
  return std::abs(minkowski(p.rep, c.axis()) - c.level());
}

}  // namespace

TEST_CASE("cycle construction and derived kind, center, radius") {
  const Cycle circ = circle_at(0.3, 0.5);
  CHECK(circ.kind() == CycleKind::Circle);
  CHECK(circ.center().category == Category::Real);
  CHECK(std::abs(circ.radius().cplx().real() - 0.5) < 1e-12);

  const ProjPoint ideal = classify_point({std::cosh(0.2), 0, std::sinh(0.2)});
  const Cycle hyper = cycle_from_center_radius(ideal, ExtScalar(0.7, kPi / 2));
  CHECK(hyper.kind() == CycleKind::Hypercycle);
  CHECK(hyper.center().category == Category::Ideal);
  CHECK(std::abs(hyper.radius().cplx() - std::complex<double>(0.7, kPi / 2)) <
        1e-12);

  const ProjPoint inf = classify_point({1, 0, 1});
  const Cycle para = cycle_from_center_point(inf, classify_point({0, 0, 1}));
  CHECK(para.kind() == CycleKind::Paracycle);
  CHECK(para.center().category == Category::AtInfinity);
  CHECK(!para.radius().finite());

  CHECK(point_cycle(classify_point({0, 0, 1})).kind() == CycleKind::PointCycle);
  CHECK_THROWS_AS(Cycle({0, 0, 1}, -0.5), EmptyCycle);
  CHECK_THROWS_AS(cycle_from_center_radius(inf, ExtScalar(1.0)), EmptyCycle);

  // Sampled points satisfy the defining equation, for every kind.
  for (const Cycle& c : {circ, hyper, para}) {
    for (const ProjPoint& p : sample_points(c, 9)) {
      CHECK(p.category == Category::Real);
      CHECK(residual_on(c, p) < 1e-12);
    }
  }
}

TEST_CASE("line-cycle intersections land on both objects") {
  Rng rng(61);
  for (int i = 0; i < 60; ++i) {
    const Cycle c = circle_at(rng.uniform(-0.5, 0.5), rng.uniform(0.2, 1.0),
                              rng.uniform(-0.5, 0.5));
    const ProjLine l = testutil::random_real_line(rng, 1.0);
    for (const ProjPoint& p : intersect_line_cycle(l, c)) {
      CHECK(residual_on(c, p) < 1e-9);
      CHECK(incidence_residual(p, l) < 1e-9);
    }
  }
}

TEST_CASE("power of a point: anchors") {
  const Cycle c = circle_at(0.0, 0.5);
  const ProjPoint center = classify_point({0, 0, 1});
  const ProjLine chord = classify_line({0, 1, 0});
  const ExtScalar pw = power(center, c, chord);
  CHECK(std::abs(pw.cplx().real() - frozen::kPowerAtCenterR05) < 1e-12);
  CHECK(std::abs(pw.cplx().imag()) < 1e-14);

  // A point of the cycle has power zero.
  const ProjPoint on = sample_points(c, 3)[1];
  const ProjLine chord2 = join(on, classify_point({0, 0, 1}));
  CHECK(std::abs(power(on, c, chord2).cplx()) < 1e-10);

  // The chord must pass through the point.
  CHECK_THROWS_AS(power(classify_point({std::sinh(2.0), 0, std::cosh(2.0)}), c,
                        classify_line({0, 1, 0.5})),
                  GeometryError);
}

TEST_CASE("power is chord-independent for every center category") {
  Rng rng(67);
  const Cycle c = circle_at(0.25, 0.6, -0.1);
  auto spread_of = [&](const ProjPoint& P) {
    std::vector<ExtScalar> values;
    // Pencil of lines through P.
    const ProjLine l0 = polar(classify_point(P.rep));
    (void)l0;
    const ProjPoint q0 = testutil::random_real_point(rng, 0.4);
    for (int i = 0; i < 400 && values.size() < 60; ++i) {
      const ProjPoint q = testutil::random_real_point(rng, 1.0);
      if (same_projective(q.rep, P.rep, 1e-6)) continue;
      const ProjLine chord = join(P, q);
      try {
        values.push_back(power(P, c, chord));
      } catch (const NoIntersection&) {
      } catch (const GeometryError&) {
      }
    }
    (void)q0;
    REQUIRE(values.size() >= 50);
    double spread = 0.0;
    for (const ExtScalar& v : values)
      spread = std::max(spread, std::abs(v.cplx() - values[0].cplx()));
    return spread;
  };

  const ProjPoint preal = classify_point({std::sinh(1.4), 0.2, std::cosh(1.42)});
  CHECK(spread_of(preal) < 1e-10);
  const ProjPoint pinf = classify_point({std::cos(0.3), std::sin(0.3), 1.0});
  CHECK(spread_of(pinf) < 1e-10);
  const ProjPoint pideal = classify_point({std::cosh(1.0) * std::cos(0.2),
                                           std::cosh(1.0) * std::sin(0.2),
                                           std::sinh(1.0)});
  CHECK(spread_of(pideal) < 1e-10);

  // Interior real point: negative power; exterior: positive; ideal: complex.
  const ProjLine diam = classify_line({0, 1, 0});
  CHECK(power(classify_point({std::sinh(0.1), 0, std::cosh(0.1)}), c, diam)
            .cplx()
            .real() < 0.0);
  CHECK(power(classify_point({std::sinh(1.9), 0, std::cosh(1.9)}), c, diam)
            .cplx()
            .real() > 0.0);
  const ProjPoint pid2 = classify_point({std::cosh(0.9), 0, std::sinh(0.9)});
  CHECK(std::abs(power(pid2, c, diam).cplx().imag()) > 1e-6);
}

TEST_CASE("power against the closed lift form for real points") {
  // Independent route: -<(P,-1),c>/<(P,+1),c> over the unit cycle vector.
  Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    const Cycle c = circle_at(rng.uniform(-0.4, 0.4), rng.uniform(0.2, 0.8),
                              rng.uniform(-0.4, 0.4));
    const ProjPoint P = testutil::random_real_point(rng, 1.6);
    const ProjLine chord = join(P, classify_point(c.axis()));
    ExtScalar pw;
    try {
      pw = power(P, c, chord);
    } catch (const NoIntersection&) {
      continue;
    }
    const CVec ic = ivec(c);
    const double up = cinner(CVec{P.rep, -1.0}, ic);
    const double dn = cinner(CVec{P.rep, 1.0}, ic);
    CHECK(std::abs(pw.cplx().real() - up / dn) < 1e-10);
  }
}

TEST_CASE("axis of equal powers") {
  // Congruent circles: the perpendicular bisector of the center segment.
  const Cycle c1 = circle_at(-0.6, 0.4);
  const Cycle c2 = circle_at(0.6, 0.4);
  const ProjLine ax = power_axis(c1, c2);
  CHECK(incidence_residual(classify_point({0, 0, 1}), ax) < 1e-12);
  CHECK(incidence_residual(classify_point({0, std::sinh(0.8), std::cosh(0.8)}),
                           ax) < 1e-12);

  // Sampled points have equal powers (circle and paracycle).
  const Cycle par = cycle_from_center_point(classify_point({0, 1, 1}),
                                            classify_point({0, 0.2, 1.02})) ;
  const Cycle c3 = circle_at(0.5, 0.45);
  const ProjLine ax2 = power_axis(c3, par);
  CHECK(ax2.category == Category::Real);
  Rng rng(73);
  const LineBasis lb = line_basis(ax2);
  for (int i = 0; i < 12; ++i) {
    const ProjPoint p = point_at_tau(lb, ExtScalar(rng.uniform(-0.8, 0.8)));
    ExtScalar w1, w2;
    int got = 0;
    for (int k = 0; k < 200 && got < 1; ++k) {
      const ProjLine chord = join(p, testutil::random_real_point(rng, 1.2));
      try {
        w1 = power(p, c3, chord);
        w2 = power(p, par, chord);
        ++got;
      } catch (const GeometryError&) {
      }
    }
    if (got == 1) CHECK(std::abs(w1.cplx() - w2.cplx()) < 1e-9);
  }

  // Tangent circles: the axis is the common tangent at the touching point.
  const Cycle t1 = circle_at(-0.3, 0.3);
  const Cycle t2 = circle_at(0.3, 0.3);
  const ProjLine ax3 = power_axis(t1, t2);
  CHECK(incidence_residual(classify_point({0, 0, 1}), ax3) < 1e-12);
  CHECK(tangency(t1, t2).kind == TangencyKind::External);

  CHECK_THROWS_AS(power_axis(circle_at(0.0, 0.3), circle_at(0.0, 0.7)),
                  ConcentricCycles);
}

TEST_CASE("tangency classifier") {
  CHECK(tangency(circle_at(-0.3, 0.3), circle_at(0.3, 0.3)).kind ==
        TangencyKind::External);
  CHECK(tangency(circle_at(-0.3, 0.3), circle_at(0.3, 0.3)).residual < 1e-12);
  // Nested tangent: distance = R - r.
  CHECK(tangency(circle_at(0.2, 0.3), circle_at(0.0, 0.5)).kind ==
        TangencyKind::Internal);
  CHECK(tangency(circle_at(0.2, 0.3), circle_at(0.0, 0.5)).residual < 1e-12);
  const TangencyReport far = tangency(circle_at(-1.0, 0.3), circle_at(1.0, 0.3));
  CHECK(far.kind == TangencyKind::None);
  CHECK(far.residual > 0.1);

  // Circle tangent to a line (zero-distance hypercycle).
  const Cycle line = line_cycle(classify_line({0, 1, 0}));
  const Cycle c = circle_at(0.0, 0.4, 0.4);
  CHECK(tangency(line, c).residual < 1e-12);

  // Circle tangent to a hypercycle from outside the strip.
  const ProjPoint ideal = classify_point({0, std::cosh(0.0), 0.0});
  const Cycle hyp = cycle_from_center_radius(ideal, ExtScalar(0.3, kPi / 2));
  const Cycle c2 = circle_at(0.0, 0.4, 0.7);
  CHECK(tangency(hyp, c2).residual < 1e-12);
  CHECK(tangency(hyp, c2).kind == TangencyKind::External);

  // Circle tangent to a paracycle: the horocycle crosses the y axis at
  // distance 1/2 from the origin, on the center side.
  const Cycle par = cycle_from_center_point(classify_point({0, 1, 1}),
                                            classify_point({0, std::sinh(0.5), std::cosh(0.5)}));
  const Cycle c3 = circle_at(0.0, 0.5, 0.0);
  const TangencyReport tp = tangency(par, c3);
  CHECK(tp.residual < 1e-9);
  CHECK(tp.kind == TangencyKind::External);
}

TEST_CASE("similitude centers of two circles: closed form vs tangents") {
  Rng rng(79);
  for (int i = 0; i < 40; ++i) {
    const double r = rng.uniform(0.15, 0.5);
    const double R = rng.uniform(r, 0.8);
    const double d = r + R + rng.uniform(0.1, 0.8);
    const Cycle c1 = circle_at(-d / 2, r);
    const Cycle c2 = circle_at(d / 2, R);
    const SimilitudePair closed = similitude_centers(c1, c2);
    const SimilitudePair viat = similitude_centers_via_tangents(c1, c2);
    CHECK(closed.case_tag == 1);
    CHECK(closed.internal.category == Category::Real);
    CHECK(same_projective(closed.internal.rep, viat.internal.rep, 1e-9));
    // External centers agree whenever the tangent intersection is stable.
    CHECK(same_projective(closed.external.rep, viat.external.rep, 1e-7));
  }
}

TEST_CASE("external center category switches at sinh R / sinh r = e^d") {
  const double r = 0.4, d = 0.9;
  const double shR_at = std::sinh(r) * std::exp(d);
  auto external_of = [&](double shR) {
    const double R = std::asinh(shR);
    const SimilitudePair s =
        similitude_centers(circle_at(0.0, r), circle_at(d, R));
    return s.external.category;
  };
  CHECK(external_of(shR_at * 0.9) == Category::Ideal);
  CHECK(external_of(shR_at * 1.1) == Category::Real);
  CHECK(external_of(shR_at) == Category::AtInfinity);
}

TEST_CASE("similitude centers of equal circles") {
  const Cycle c1 = circle_at(-0.7, 0.35);
  const Cycle c2 = circle_at(0.7, 0.35);
  const SimilitudePair s = similitude_centers(c1, c2);
  CHECK(s.internal.category == Category::Real);
  CHECK(same_projective(s.internal.rep, {0, 0, 1}, 1e-10));
  CHECK(s.external.category == Category::Ideal);
  // The external center is the pole of the perpendicular bisector.
  const ProjLine bisector = polar(s.external);
  CHECK(incidence_residual(classify_point({0, 0, 1}), bisector) < 1e-10);
  CHECK(bisector.category == Category::Real);
}

TEST_CASE("similitude centers: circle and paracycle") {
  const Cycle c = circle_at(-0.5, 0.35);
  const Cycle par = cycle_from_center_point(
      classify_point({1, 0, 1}),
      classify_point({std::sinh(1.0), 0, std::cosh(1.0)}));
  const SimilitudePair s = similitude_centers(c, par);
  CHECK(s.case_tag == 2);
  CHECK(s.internal.category == Category::Real);
  // Both centers lie on the axis of symmetry (here the x axis).
  CHECK(incidence_residual(s.internal, classify_line({0, 1, 0})) < 1e-8);
  CHECK(incidence_residual(s.external, classify_line({0, 1, 0})) < 1e-8);
}

TEST_CASE("secant ratios through a similitude center are constant") {
  Rng rng(83);
  const Cycle c1 = circle_at(-0.8, 0.3);
  const Cycle c2 = circle_at(0.6, 0.55);
  const SimilitudePair s = similitude_centers(c1, c2);
  for (const ProjPoint& S : {s.external, s.internal}) {
    int used = 0;
    for (int i = 0; i < 300 && used < 50; ++i) {
      const ProjPoint q = testutil::random_real_point(rng, 1.2);
      if (same_projective(q.rep, S.rep, 1e-6)) continue;
      const ProjLine secant = join(S, q);
      try {
        const double dev = secant_ratio_check(S, c1, c2, secant);
        CHECK(dev < 1e-10);
        ++used;
      } catch (const NoIntersection&) {
      }
    }
    CHECK(used >= 50);
  }

  // Equal circles through the internal center: the ratio family is -1.
  const Cycle e1 = circle_at(-0.5, 0.3);
  const Cycle e2 = circle_at(0.5, 0.3);
  const SimilitudePair es = similitude_centers(e1, e2);
  const ProjLine secant = join(
      es.internal,
      classify_point({std::sinh(0.6), std::sinh(0.05), std::cosh(0.61)}));
  CHECK(secant_ratio_check(es.internal, e1, e2, secant) < 1e-10);
}

TEST_CASE("six centers of three cycles lie on four axes") {
  const Cycle c1 = circle_at(-0.9, 0.25);
  const Cycle c2 = circle_at(0.8, 0.4, 0.1);
  const Cycle c3 = circle_at(0.0, 0.3, 1.0);
  const SimilitudePair s12 = similitude_centers(c1, c2);
  const SimilitudePair s13 = similitude_centers(c1, c3);
  const SimilitudePair s23 = similitude_centers(c2, c3);
  const auto axes = similitude_axes(c1, c2, c3);

  const ProjPoint* centers[6] = {&s12.external, &s12.internal, &s13.external,
                                 &s13.internal, &s23.external, &s23.internal};
  // Each axis carries exactly three of the six centers.
  int total_on_axes = 0;
  for (const ProjLine& ax : axes) {
    int on = 0;
    for (const ProjPoint* p : centers)
      if (incidence_residual(*p, ax) < 1e-9) ++on;
    CHECK(on == 3);
    total_on_axes += on;
  }
  CHECK(total_on_axes == 12);

  // Brute force over all 20 triples: the collinear ones are exactly the
  // four axes' triples.
  int collinear = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        const ProjLine l = join(*centers[i], *centers[j]);
        if (incidence_residual(*centers[k], l) < 1e-9) ++collinear;
      }
  CHECK(collinear == 4);
}

TEST_CASE("inversion: fixed cycle, involution, ideal centers") {
  const Cycle inv_cycle = circle_at(0.15, 0.55, -0.1);
  const Inversion inv = inversion_in_cycle(inv_cycle);
  CHECK(inv.center.category == Category::Real);

  // Points of the inversion cycle are fixed.
  for (const ProjPoint& p : sample_points(inv_cycle, 7))
    CHECK(same_projective(invert_point(inv, p).rep, p.rep, 1e-9));

  // Whether the half-line from the center through p closes up through
  // infinity before reaching the inverse (the image lift changes cone).
  auto wraps = [](const Inversion& iv, const ProjPoint& p) {
    const CVec lp{p.rep, -1.0};
    const double t = 2.0 * cinner(lp, iv.vec) / cinner(iv.vec, iv.vec);
    return lp.mu - t * iv.vec.mu > -1e-9;
  };

  // Involution on random points whose images do not wrap.
  Rng rng(89);
  for (int i = 0; i < 80; ++i) {
    const ProjPoint p = testutil::random_real_point(rng, 1.5);
    if (same_projective(p.rep, inv.center.rep, 1e-6)) continue;
    if (wraps(inv, p)) continue;
    const ProjPoint q = invert_point(inv, p);
    const ProjPoint back = invert_point(inv, q);
    CHECK(same_projective(back.rep, p.rep, 1e-9));
    // The defining product holds along the line through the center.
    if (q.category == Category::Real) {
      const ProjLine l = join(inv.center, p);
      const LineBasis lb = line_basis(l);
      const ExtScalar ts = line_tau(lb, inv.center);
      const auto tm = ext_tanh(scalar_scale(0.5, scalar_sub(line_tau(lb, p), ts)));
      const auto tn = ext_tanh(scalar_scale(0.5, scalar_sub(line_tau(lb, q), ts)));
      CHECK(std::abs(tm.cplx() * tn.cplx() - inv.power_k.cplx()) < 1e-9);
    }
  }
  // A wrapped image returns on the far side; the product holds with the
  // complementary reading of the image segment.
  {
    const ProjLine l = join(inv.center, classify_point({0, 0, 1}));
    const LineBasis lb = line_basis(l);
    const ExtScalar ts = line_tau(lb, inv.center);
    const double wrap_d = 2.0 * std::atanh(inv.power_k.cplx().real());
    const ProjPoint p =
        point_at_tau(lb, ExtScalar(ts.re.value + 0.25 * wrap_d));
    const ProjPoint q = invert_point(inv, p);
    const auto tm = ext_tanh(scalar_scale(0.5, scalar_sub(line_tau(lb, p), ts)));
    const auto tn = ext_tanh(scalar_scale(0.5, scalar_sub(line_tau(lb, q), ts)));
    const double direct = std::abs(tm.cplx() * tn.cplx() - inv.power_k.cplx());
    // tanh((x + pi i)/2) = coth(x/2): the wrapped segment carries 1/tn.
    const double comp =
        std::abs(tm.cplx() / tn.cplx() - inv.power_k.cplx());
    CHECK(std::min(direct, comp) < 1e-9);
  }
  CHECK_THROWS_AS(invert_point(inv, inv.center), CenterInput);

  // Ideal-centered inversion: reflection in a hypercycle.
  const ProjPoint ideal = classify_point({std::cosh(0.3), 0, std::sinh(0.3)});
  const Cycle hyp = cycle_from_center_radius(ideal, ExtScalar(0.45, kPi / 2));
  const Inversion hinv = inversion_in_cycle(hyp);
  CHECK(std::abs(std::abs(hinv.power_k.cplx()) - 1.0) < 1e-12);
  for (int i = 0; i < 40; ++i) {
    const ProjPoint p = testutil::random_real_point(rng, 1.2);
    if (same_projective(p.rep, hinv.center.rep, 1e-6)) continue;
    if (wraps(hinv, p)) continue;
    const ProjPoint q = invert_point(hinv, p);
    CHECK(same_projective(invert_point(hinv, q).rep, p.rep, 1e-9));
  }
  for (const ProjPoint& p : sample_points(hyp, 5))
    CHECK(same_projective(invert_point(hinv, p).rep, p.rep, 1e-9));

  // make_inversion round-trips center and constant.
  const Inversion rebuilt = make_inversion(inv.center, inv.power_k);
  for (int i = 0; i < 10; ++i) {
    const ProjPoint p = testutil::random_real_point(rng, 1.0);
    if (same_projective(p.rep, inv.center.rep, 1e-6)) continue;
    CHECK(same_projective(invert_point(rebuilt, p).rep,
                          invert_point(inv, p).rep, 1e-10));
  }
}

TEST_CASE("inversion maps cycles to cycles") {
  const Inversion inv = inversion_in_cycle(circle_at(0.2, 0.5));
  Rng rng(97);
  for (int i = 0; i < 40; ++i) {
    const Cycle c = circle_at(rng.uniform(-0.6, 0.6), rng.uniform(0.15, 0.5),
                              rng.uniform(-0.6, 0.6));
    const Cycle img = invert_cycle(inv, c);
    for (const ProjPoint& p : sample_points(c, 20)) {
      if (same_projective(p.rep, inv.center.rep, 1e-6)) continue;
      // Points that wrap through infinity land on the mirror branch.
      CHECK(on_full_cycle(img, invert_point(inv, p), 1e-9));
    }
    const Cycle back = invert_cycle(inv, img);
    CHECK(same_projective(back.axis(), c.axis(), 1e-9));
    CHECK(std::abs(back.level() - c.level()) < 1e-9);
  }

  // A cycle orthogonal to the inversion cycle maps to itself: take the
  // cycle through two mutually inverse points whose center lies on their
  // bisector... simplest: concentric circles map to concentric circles.
  const Inversion o = inversion_in_cycle(circle_at(0.0, 0.6));
  const Cycle inner = circle_at(0.0, 0.2);
  const Cycle img = invert_cycle(o, inner);
  CHECK(same_projective(img.axis(), inner.axis(), 1e-10));
  CHECK(img.kind() == CycleKind::Circle);
}

TEST_CASE("the swapping inversion is centered at the external center") {
  Rng rng(101);
  for (int i = 0; i < 30; ++i) {
    const double r1 = rng.uniform(0.15, 0.45);
    const double r2 = rng.uniform(0.15, 0.45);
    const double gap = rng.uniform(0.1, 0.7);
    const Cycle c1 = circle_at(-(r1 + gap / 2), r1);
    const Cycle c2 = circle_at(r2 + gap / 2, r2);
    const Inversion inv = inversion_swapping(c1, c2);
    const Cycle img = invert_cycle(inv, c1);
    CHECK(same_projective(img.axis(), c2.axis(), 1e-9));
    CHECK(std::abs(img.level() - c2.level()) < 1e-9);
    const SimilitudePair s = similitude_centers(c1, c2);
    CHECK(same_projective(inv.center.rep, s.external.rep, 1e-8));
  }

  // Equal circles: the inversion cycle degenerates to the bisector line.
  const Cycle e1 = circle_at(-0.5, 0.3);
  const Cycle e2 = circle_at(0.5, 0.3);
  const Inversion binv = inversion_swapping(e1, e2);
  CHECK(inversion_in_cycle(invert_cycle(binv, e1)).center.category ==
        invert_cycle(binv, e1).center().category);
  CHECK(same_projective(invert_cycle(binv, e1).axis(), e2.axis(), 1e-10));
  const Cycle fixed(binv.vec.f, binv.vec.mu);
  CHECK(fixed.is_line(1e-12));

  // Tangent circles: the inversion cycle passes through the tangency point.
  const Cycle t1 = circle_at(-0.3, 0.3);
  const Cycle t2 = circle_at(0.45, 0.45);
  const Inversion tinv = inversion_swapping(t1, t2);
  const Cycle tc(tinv.vec.f, tinv.vec.mu);
  CHECK(residual_on(tc, classify_point({0, 0, 1})) < 1e-10);
}

TEST_CASE("tangent cycles: soddy configuration") {
  // Three mutually tangent equal circles; the inner all-external solution.
  const double r = 0.4;
  // Pairwise tangent: centers at distance 2r from each other.
  const double rho = std::acosh(std::cosh(2 * r) / std::cosh(r) * 0.0 +
                                std::sqrt((std::cosh(2.0 * r) + 1.0) /
                                          (2.0 * std::cosh(2.0 * r) - 1.0) *
                                          0.0 +
                                          1.0));
  (void)rho;
  // Place centers on a symmetric triangle: circumradius rho0 of an
  // equilateral triangle with side 2r: sinh(rho0) = sinh(2r) * k.
  // Solve directly: cosh(2r) = cosh^2(rho0) - sinh^2(rho0) cos(2pi/3).
  const double ch = std::cosh(2.0 * r);
  const double rho0 = std::asinh(std::sqrt((ch - 1.0) / 1.5));
  std::vector<Cycle> given;
  for (int k = 0; k < 3; ++k) {
    const double th = 2.0 * kPi * k / 3.0;
    given.push_back(cycle_from_center_radius(
        classify_point({std::sinh(rho0) * std::cos(th),
                        std::sinh(rho0) * std::sin(th), std::cosh(rho0)}),
        ExtScalar(r)));
  }
  CHECK(tangency(given[0], given[1]).residual < 1e-12);

  const auto sols = tangent_cycles(
      given[0], given[1], given[2],
      {TangencyKind::External, TangencyKind::External, TangencyKind::External});
  CHECK(!sols.empty());
  for (const Cycle& s : sols)
    for (const Cycle& g : given) {
      const TangencyReport rep = tangency(s, g, 1e-6);
      CHECK(rep.residual < 1e-9);
      CHECK(rep.kind == TangencyKind::External);
    }
  // The smallest solution is the inner cycle at the symmetry center.
  CHECK(same_projective(sols[0].axis(), {0, 0, 1}, 1e-8));

  // Point-cycle constraint: a tangent cycle through a prescribed point.
  const ProjPoint p0 = classify_point({0, 0, 1});
  const auto through = tangent_cycles(
      given[0], given[1], point_cycle(p0),
      {TangencyKind::External, TangencyKind::External, TangencyKind::External});
  CHECK(!through.empty());
  for (const Cycle& s : through) CHECK(residual_on(s, p0) < 1e-9);

  // Concentric circles: impossible orientation.
  CHECK_THROWS_AS(
      tangent_cycles(circle_at(0.0, 0.2), circle_at(0.0, 0.9),
                     circle_at(0.0, 0.5),
                     {TangencyKind::External, TangencyKind::External,
                      TangencyKind::External}),
      NoSolution);
}

TEST_CASE("tangent cycles respect requested orientations") {
  const Cycle c1 = circle_at(-0.7, 0.3);
  const Cycle c2 = circle_at(0.7, 0.3);
  const Cycle c3 = circle_at(0.0, 0.3, 1.1);
  int total = 0;
  for (const TangencyKind k1 : {TangencyKind::External, TangencyKind::Internal})
    for (const TangencyKind k2 : {TangencyKind::External, TangencyKind::Internal})
      for (const TangencyKind k3 :
           {TangencyKind::External, TangencyKind::Internal}) {
        try {
          const auto sols = tangent_cycles(c1, c2, c3, {k1, k2, k3});
          total += int(sols.size());
          const std::array<TangencyKind, 3> want{k1, k2, k3};
          const Cycle* cs[3] = {&c1, &c2, &c3};
          for (const Cycle& s : sols)
            for (int i = 0; i < 3; ++i) {
              const TangencyReport rep = tangency(s, *cs[i], 1e-6);
              CHECK(rep.residual < 1e-9);
              CHECK(rep.kind == want[i]);
            }
        } catch (const NoSolution&) {
        }
      }
  CHECK(total >= 8);  // all eight Apollonius solutions across orientations
}
