#ifndef HYPGEO_MALFATTI_HPP
#define HYPGEO_MALFATTI_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hypgeo/cycle.hpp"

namespace hypgeo {

// Three given cycles with pairwise non-overlapping interiors.
struct MalfattiInstance {
  std::array<Cycle, 3> c;
};

// Validates that the given cycles do not overlap pairwise (tangency kind
// None or External at the input tolerance).
MalfattiInstance make_malfatti_instance(const Cycle& c1, const Cycle& c2,
                                        const Cycle& c3);

struct MalfattiSolution {
  std::array<Cycle, 3> m;          // m[j] touches the other two m and the
                                   // two given cycles other than c[j]
  std::array<Cycle, 3> inv;        // inv[k]: swap cycle of the pair without k
  std::array<Cycle, 3> k;          // k[j] tangent to the two inv through j
                                   // and to c[j] from outside
  std::array<Cycle, 3> l;          // l[k] tangent to the two k's through P[k]
  std::array<ProjPoint, 3> P;      // P[k]: touching point of k[k] and c[k]
  double fourth_tangency_residual = 0.0;
};

// The four construction steps. Steps 2 and 3 return candidate lists per
// index (orientation branches that satisfy the side conditions); the
// pipeline picks the combination the final verification accepts.
std::array<Cycle, 3> steiner_step1(const MalfattiInstance& inst);
std::vector<Cycle> steiner_step2_candidates(const MalfattiInstance& inst,
                                            const std::array<Cycle, 3>& inv,
                                            int j);
ProjPoint touch_point(const Cycle& a, const Cycle& b);
std::vector<Cycle> steiner_step3_candidates(const std::array<Cycle, 3>& k,
                                            const ProjPoint& P_k, int k_idx);
// Candidates for m[j] from three of its four tangency constraints, paired
// with the residual of the held-out one (ascending, within tol).
std::vector<std::pair<Cycle, double>> steiner_step4_candidates(
    const MalfattiInstance& inst, const std::array<Cycle, 3>& l, int j,
    double tol = 1e-6);
// The best candidate; throws FourthTangencyFailed when none passes.
Cycle steiner_step4_solve(const MalfattiInstance& inst,
                          const std::array<Cycle, 3>& l, int j,
                          double* fourth_residual,
                          double tol = 1e-6);

// The whole construction.
MalfattiSolution malfatti_steiner(const MalfattiInstance& inst);

struct MalfattiCheckEntry {
  std::string name;
  double residual = 0.0;
  TangencyKind kind = TangencyKind::None;
};

struct MalfattiCheck {
  std::vector<MalfattiCheckEntry> entries;  // nine tangencies
  double max_residual = 0.0;
  bool all_external = true;
  bool pass(double tol = 1e-8) const {
    return all_external && max_residual < tol;
  }
};

MalfattiCheck verify_malfatti(const MalfattiSolution& sol,
                              const MalfattiInstance& inst);

}  // namespace hypgeo

#endif
