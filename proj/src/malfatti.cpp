#include "hypgeo/malfatti.hpp"

#include <algorithm>
#include <cmath>

namespace hypgeo {

namespace {

double side_of(const Cycle& c, const ProjPoint& p) {
  return minkowski(p.rep, c.axis()) - c.level();
}

ProjPoint cycle_witness(const Cycle& c) {
  if (c.kind() == CycleKind::Circle || c.kind() == CycleKind::PointCycle)
    return classify_point(c.axis());
  return interior_witness(c);
}

const std::array<std::array<int, 2>, 3> kOthers{{{1, 2}, {0, 2}, {0, 1}}};

}  // namespace

MalfattiInstance make_malfatti_instance(const Cycle& c1, const Cycle& c2,
                                        const Cycle& c3) {
  MalfattiInstance inst{{c1, c2, c3}};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Cycle& a = inst.c[i];
      const Cycle& b = inst.c[j];
      // Bounded interiors must be disjoint or externally tangent; unbounded
      // boundaries (triangle sides as line cycles) may cross each other.
      if (a.kind() == CycleKind::Circle && b.kind() == CycleKind::Circle &&
          inversive_product(a, b) > -1.0 + 1e-9)
        throw GeometryError("given cycles overlap");
    }
  return inst;
}

std::array<Cycle, 3> steiner_step1(const MalfattiInstance& inst) {
  std::array<Cycle, 3> inv;
  for (int k = 0; k < 3; ++k) {
    const int i = kOthers[k][0], j = kOthers[k][1];
    const Inversion swap = inversion_swapping(inst.c[i], inst.c[j]);
    inv[k] = Cycle(swap.vec.f, swap.vec.mu);
  }
  return inv;
}

std::vector<Cycle> steiner_step2_candidates(const MalfattiInstance& inst,
                                            const std::array<Cycle, 3>& inv,
                                            int j) {
  const int a = kOthers[j][0], b = kOthers[j][1];
  // inv[a] and inv[b] are the swap cycles of the pairs containing j.
  const Cycle& ia = inv[a];
  const Cycle& ib = inv[b];
  const double side_a = side_of(ia, cycle_witness(inst.c[j]));
  const double side_b = side_of(ib, cycle_witness(inst.c[j]));

  std::vector<Cycle> out;
  for (const TangencyKind k1 : {TangencyKind::External, TangencyKind::Internal})
    for (const TangencyKind k2 :
         {TangencyKind::External, TangencyKind::Internal})
      for (const TangencyKind k3 :
           {TangencyKind::External, TangencyKind::Internal}) {
        std::vector<Cycle> sols;
        try {
          sols = tangent_cycles(ia, ib, inst.c[j], {k1, k2, k3});
        } catch (const NoSolution&) {
          continue;
        }
        for (const Cycle& s : sols) {
          if (tangency(s, inst.c[j], 1e-6).kind != TangencyKind::External)
            continue;
          const ProjPoint w = cycle_witness(s);
          if (side_of(ia, w) * side_a <= 0.0) continue;
          if (side_of(ib, w) * side_b <= 0.0) continue;
          const bool dup =
              std::any_of(out.begin(), out.end(), [&](const Cycle& c) {
                return same_projective(c.axis(), s.axis(), 1e-7) &&
                       std::abs(c.level() - s.level()) < 1e-7;
              });
          if (!dup) out.push_back(s);
        }
      }
  if (out.empty()) throw NoSolution("no admissible cycle in step 2");
  return out;
}

ProjPoint touch_point(const Cycle& a, const Cycle& b) {
  // The sum (difference) of the unit vectors of externally (internally)
  // tangent cycles is the null lift of their touching point.
  const CVec va = ivec(a), vb = ivec(b);
  const double ip = cinner(va, vb);
  const CVec lift = std::abs(ip + 1.0) <= std::abs(ip - 1.0)
                        ? CVec{va.f + vb.f, va.mu + vb.mu}
                        : cvec_sub(va, vb);
  if (coord_norm(lift.f) < 1e-9) throw NoIntersection("cycles do not touch");
  const ProjPoint p = classify_point(lift.f);
  if (p.category != Category::Real ||
      std::abs(minkowski(p.rep, a.axis()) - a.level()) > 1e-6 ||
      std::abs(minkowski(p.rep, b.axis()) - b.level()) > 1e-6)
    throw NoIntersection("cycles do not touch");
  return p;
}

std::vector<Cycle> steiner_step3_candidates(const std::array<Cycle, 3>& k,
                                            const ProjPoint& P_k, int k_idx) {
  const int i = kOthers[k_idx][0], j = kOthers[k_idx][1];
  std::vector<Cycle> out;
  for (const TangencyKind k1 : {TangencyKind::External, TangencyKind::Internal})
    for (const TangencyKind k2 :
         {TangencyKind::External, TangencyKind::Internal}) {
      std::vector<Cycle> sols;
      try {
        sols = tangent_cycles(k[i], k[j], point_cycle(P_k),
                              {k1, k2, TangencyKind::External});
      } catch (const NoSolution&) {
        continue;
      }
      for (const Cycle& s : sols) {
        const bool dup =
            std::any_of(out.begin(), out.end(), [&](const Cycle& c) {
              return same_projective(c.axis(), s.axis(), 1e-7) &&
                     std::abs(c.level() - s.level()) < 1e-7;
            });
        if (!dup) out.push_back(s);
      }
    }
  if (out.empty()) throw NoSolution("no tangent cycle through the point");
  return out;
}

std::vector<std::pair<Cycle, double>> steiner_step4_candidates(
    const MalfattiInstance& inst, const std::array<Cycle, 3>& l, int j,
    double tol) {
  const int i = kOthers[j][0], k = kOthers[j][1];
  // m[j] touches l[i], l[k] (the separators through the touch points of the
  // pairs containing j) and the two given cycles other than c[j]. Solve
  // from three constraints, verify on the held-out given cycle.
  std::vector<std::pair<Cycle, double>> out;
  for (const TangencyKind k1 : {TangencyKind::External, TangencyKind::Internal})
    for (const TangencyKind k2 :
         {TangencyKind::External, TangencyKind::Internal}) {
      std::vector<Cycle> sols;
      try {
        sols = tangent_cycles(l[i], l[k], inst.c[i],
                              {k1, k2, TangencyKind::External});
      } catch (const NoSolution&) {
        continue;
      }
      for (const Cycle& s : sols) {
        const TangencyReport rep = tangency(s, inst.c[k], 1e300);
        if (rep.kind == TangencyKind::Internal) continue;
        if (rep.residual > tol) continue;
        const bool dup = std::any_of(
            out.begin(), out.end(), [&](const std::pair<Cycle, double>& c) {
              return same_projective(c.first.axis(), s.axis(), 1e-7) &&
                     std::abs(c.first.level() - s.level()) < 1e-7;
            });
        if (!dup) out.emplace_back(s, rep.residual);
      }
    }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

Cycle steiner_step4_solve(const MalfattiInstance& inst,
                          const std::array<Cycle, 3>& l, int j,
                          double* fourth_residual, double tol) {
  const auto cands = steiner_step4_candidates(inst, l, j, tol);
  if (cands.empty())
    throw FourthTangencyFailed("no candidate satisfies the held-out tangency");
  if (fourth_residual) *fourth_residual = cands.front().second;
  return cands.front().first;
}

MalfattiCheck verify_malfatti(const MalfattiSolution& sol,
                              const MalfattiInstance& inst) {
  MalfattiCheck check;
  auto add = [&](const std::string& name, const Cycle& a, const Cycle& b) {
    const TangencyReport rep = tangency(a, b, 1e300);
    check.entries.push_back({name, rep.residual, rep.kind});
    check.max_residual = std::max(check.max_residual, rep.residual);
    if (rep.kind != TangencyKind::External) check.all_external = false;
  };
  add("m1-m2", sol.m[0], sol.m[1]);
  add("m2-m3", sol.m[1], sol.m[2]);
  add("m1-m3", sol.m[0], sol.m[2]);
  for (int j = 0; j < 3; ++j) {
    for (int x : kOthers[j]) {
      add("m" + std::to_string(j + 1) + "-c" + std::to_string(x + 1),
          sol.m[j], inst.c[x]);
    }
  }
  return check;
}

MalfattiSolution malfatti_steiner(const MalfattiInstance& inst) {
  MalfattiSolution sol;
  sol.inv = steiner_step1(inst);

  std::array<std::vector<Cycle>, 3> kcand;
  for (int j = 0; j < 3; ++j)
    kcand[j] = steiner_step2_candidates(inst, sol.inv, j);

  // Enumerate the small branch sets until the verification accepts one.
  for (const Cycle& k0 : kcand[0])
    for (const Cycle& k1 : kcand[1])
      for (const Cycle& k2 : kcand[2]) {
        sol.k = {k0, k1, k2};
        bool touched = true;
        for (int x = 0; x < 3; ++x) {
          try {
            sol.P[x] = touch_point(sol.k[x], inst.c[x]);
          } catch (const NoIntersection&) {
            touched = false;
            break;
          }
        }
        if (!touched) continue;

        std::array<std::vector<Cycle>, 3> lcand;
        bool ok = true;
        for (int x = 0; x < 3 && ok; ++x) {
          try {
            lcand[x] = steiner_step3_candidates(sol.k, sol.P[x], x);
          } catch (const NoSolution&) {
            ok = false;
          }
        }
        if (!ok) continue;

        for (const Cycle& l0 : lcand[0])
          for (const Cycle& l1 : lcand[1])
            for (const Cycle& l2 : lcand[2]) {
              sol.l = {l0, l1, l2};
              std::array<std::vector<std::pair<Cycle, double>>, 3> mcand;
              bool solved = true;
              for (int j = 0; j < 3 && solved; ++j) {
                mcand[j] = steiner_step4_candidates(inst, sol.l, j, 1e-6);
                if (mcand[j].empty()) solved = false;
                if (mcand[j].size() > 3) mcand[j].resize(3);
              }
              if (!solved) continue;
              for (const auto& m0 : mcand[0])
                for (const auto& m1 : mcand[1])
                  for (const auto& m2 : mcand[2]) {
                    sol.m = {m0.first, m1.first, m2.first};
                    sol.fourth_tangency_residual =
                        std::max({m0.second, m1.second, m2.second});
                    if (verify_malfatti(sol, inst).pass(1e-8)) return sol;
                  }
            }
      }
  throw NoSolution("Steiner construction found no verified solution");
}

}  // namespace hypgeo
