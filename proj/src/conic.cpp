#include "hypgeo/conic.hpp"

#include <algorithm>
#include <cmath>

namespace hypgeo {

double Sym3::eval(MVec u, MVec v) const {
  const double a[3] = {u.x, u.y, u.z};
  const double b[3] = {v.x, v.y, v.z};
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i] * m[i][j] * b[j];
  return s;
}

MVec Sym3::apply(MVec v) const {
  const double b[3] = {v.x, v.y, v.z};
  double r[3];
  for (int i = 0; i < 3; ++i) {
    r[i] = 0.0;
    for (int j = 0; j < 3; ++j) r[i] += m[i][j] * b[j];
  }
  return {r[0], r[1], r[2]};
}

Sym3 Sym3::adjugate() const {
  Sym3 a;
  auto co = [&](int i, int j) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    return m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.m[j][i] = co(i, j);
  return a;
}

double Sym3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double Sym3::frob() const {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
  return std::sqrt(s);
}

Sym3 operator+(const Sym3& a, const Sym3& b) {
  Sym3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

Sym3 operator*(double s, const Sym3& a) {
  Sym3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}

Sym3 outer(MVec g) {
  Sym3 r;
  const double v[3] = {g.x, g.y, g.z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = v[i] * v[j];
  return r;
}

Sym3 cycle_conic(MVec axis, double level) {
  // Q(x,f)^2 + level^2 Q(x,x) as a plain quadratic form.
  const MVec gf{axis.x, axis.y, -axis.z};  // G f
  Sym3 c = outer(gf);
  c.m[0][0] += level * level;
  c.m[1][1] += level * level;
  c.m[2][2] -= level * level;
  return c;
}

namespace {

MVec euclid_cross(MVec u, MVec v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
          u.x * v.y - u.y * v.x};
}

std::array<std::array<double, 3>, 3> cross_mat(MVec p) {
  return {{{0.0, p.z, -p.y}, {-p.z, 0.0, p.x}, {p.y, -p.x, 0.0}}};
}

// Real roots of c3 t^3 + c2 t^2 + c1 t + c0.
std::vector<double> real_cubic_roots(double c3, double c2, double c1,
                                     double c0) {
  std::vector<double> roots;
  const double scale =
      std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  if (scale == 0.0) return roots;
  c3 /= scale; c2 /= scale; c1 /= scale; c0 /= scale;
  if (std::abs(c3) < 1e-13) {
    if (std::abs(c2) < 1e-13) {
      if (std::abs(c1) > 1e-13) roots.push_back(-c0 / c1);
      return roots;
    }
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      roots.push_back((-c1 + sq) / (2.0 * c2));
      roots.push_back((-c1 - sq) / (2.0 * c2));
    }
    return roots;
  }
  const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double off = -a / 3.0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    roots.push_back(off + std::cbrt(-q / 2.0 + sq) + std::cbrt(-q / 2.0 - sq));
  } else {
    const double r = std::sqrt(std::max(0.0, -p * p * p / 27.0));
    const double phi =
        std::acos(std::clamp(-q / (2.0 * std::max(r, 1e-300)), -1.0, 1.0));
    const double m = 2.0 * std::cbrt(r);
    for (int k = 0; k < 3; ++k)
      roots.push_back(off + m * std::cos((phi + 2.0 * kPi * k) / 3.0));
  }
  return roots;
}

// Split a (nearly) degenerate conic into one or two real lines.
std::vector<MVec> split_degenerate(Sym3 c) {
  std::vector<MVec> lines;
  const double scale = c.frob();
  if (scale == 0.0) return lines;
  c = (1.0 / scale) * c;
  const Sym3 adj = c.adjugate();
  int bi = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(adj.m[i][i]) > std::abs(adj.m[bi][bi])) bi = i;
  const double piv = adj.m[bi][bi];
  if (piv < -1e-24) {
    const double beta = std::sqrt(-piv);
    const MVec p{adj.m[0][bi] / beta, adj.m[1][bi] / beta,
                 adj.m[2][bi] / beta};
    const auto cp = cross_mat(p);
    std::array<std::array<double, 3>, 3> d;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) d[i][j] = c.m[i][j] + cp[i][j];
    // c + cross(p) is g h^T up to scale; a maximal entry locates both lines.
    int ri = 0, cj = 0;
    double best = -1.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (std::abs(d[i][j]) > best) {
          best = std::abs(d[i][j]);
          ri = i;
          cj = j;
        }
    if (best <= 1e-12) return lines;
    lines.push_back(MVec{d[ri][0], d[ri][1], d[ri][2]});
    lines.push_back(MVec{d[0][cj], d[1][cj], d[2][cj]});
  } else if (piv <= 1e-24) {
    // Rank 1: a double line.
    int di = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(c.m[i][i]) > std::abs(c.m[di][di])) di = i;
    if (std::abs(c.m[di][di]) <= 1e-12) return lines;
    lines.push_back(MVec{c.m[di][0], c.m[di][1], c.m[di][2]});
  }
  // piv > 0: the lines are complex conjugate, nothing real to intersect.
  return lines;
}

// Real points where the line {x : <g,x> = 0} meets the conic A.
std::vector<MVec> line_conic_points(MVec g, const Sym3& A) {
  std::vector<MVec> pts;
  const MVec cand[3] = {euclid_cross(g, {1, 0, 0}), euclid_cross(g, {0, 1, 0}),
                        euclid_cross(g, {0, 0, 1})};
  int b1 = 0;
  for (int i = 1; i < 3; ++i)
    if (coord_norm(cand[i]) > coord_norm(cand[b1])) b1 = i;
  const MVec u = cand[b1];
  const MVec v = (1.0 / coord_norm(g)) * euclid_cross(g, u);
  const double qu = A.quad(u), qv = A.quad(v), quv = A.eval(u, v);
  const double scale = std::max({std::abs(qu), std::abs(qv), std::abs(quv)});
  if (scale == 0.0) return pts;
  if (std::abs(qu) <= 1e-13 * scale) {
    pts.push_back(u);
    if (std::abs(quv) > 1e-13 * scale)
      pts.push_back((-qv / (2.0 * quv)) * u + v);
    return pts;
  }
  const double disc = quv * quv - qu * qv;
  if (disc < -1e-10 * scale * scale) return pts;
  const double sq = std::sqrt(std::max(0.0, disc));
  pts.push_back(((-quv + sq) / qu) * u + v);
  pts.push_back(((-quv - sq) / qu) * u + v);
  return pts;
}

// Newton polish of a common point of two quadrics.
bool polish(const Sym3& A, const Sym3& B, MVec& x) {
  for (int it = 0; it < 60; ++it) {
    const double n = coord_norm(x);
    if (n == 0.0) return false;
    x = (1.0 / n) * x;
    const double fa = A.quad(x);
    const double fb = B.quad(x);
    if (std::abs(fa) < 1e-15 && std::abs(fb) < 1e-15) return true;
    const MVec ga = 2.0 * A.apply(x);
    const MVec gb = 2.0 * B.apply(x);
    const double J[3][3] = {{ga.x, ga.y, ga.z},
                            {gb.x, gb.y, gb.z},
                            {x.x, x.y, x.z}};
    const double rhs[3] = {-fa, -fb, 0.0};
    const double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                       J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                       J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    if (std::abs(det) < 1e-18)
      return std::abs(fa) < 1e-11 && std::abs(fb) < 1e-11;
    double dx[3];
    for (int i = 0; i < 3; ++i) {
      double Ji[3][3];
      for (int r = 0; r < 3; ++r)
        for (int cc = 0; cc < 3; ++cc) Ji[r][cc] = J[r][cc];
      for (int r = 0; r < 3; ++r) Ji[r][i] = rhs[r];
      const double di = Ji[0][0] * (Ji[1][1] * Ji[2][2] - Ji[1][2] * Ji[2][1]) -
                        Ji[0][1] * (Ji[1][0] * Ji[2][2] - Ji[1][2] * Ji[2][0]) +
                        Ji[0][2] * (Ji[1][0] * Ji[2][1] - Ji[1][1] * Ji[2][0]);
      dx[i] = di / det;
    }
    x = x + MVec{dx[0], dx[1], dx[2]};
  }
  return std::abs(A.quad(x)) < 1e-11 && std::abs(B.quad(x)) < 1e-11;
}

}  // namespace

std::vector<MVec> conic_intersect(const Sym3& A_in, const Sym3& B_in) {
  const Sym3 A = (1.0 / A_in.frob()) * A_in;
  const Sym3 B = (1.0 / B_in.frob()) * B_in;

  // det(A + t B) is a cubic in t; interpolate it at t = 0, 1, -1, 2.
  auto pencil_roots = [](const Sym3& M, const Sym3& N) {
    const double d0 = M.det();
    const double d1 = (M + N).det();
    const double dm1 = (M + -1.0 * N).det();
    const double d2 = (M + 2.0 * N).det();
    const double odd = (d1 - dm1) / 2.0;          // a3 + a1
    const double a2 = (d1 + dm1) / 2.0 - d0;      // a2
    const double a3 = (d2 - d0 - 4.0 * a2 - 2.0 * odd) / 6.0;
    const double a1 = odd - a3;
    return real_cubic_roots(a3, a2, a1, d0);
  };

  std::vector<double> roots = pencil_roots(A, B);
  for (double s : pencil_roots(B, A))
    if (std::abs(s) > 1e-10) roots.push_back(1.0 / s);

  std::vector<MVec> points;
  auto consider = [&](MVec x) {
    if (!polish(A, B, x)) return;
    const double n = coord_norm(x);
    if (n < 1e-12) return;
    x = (1.0 / n) * x;
    for (const MVec& p : points)
      if (same_projective(p, x, 1e-7)) return;
    points.push_back(x);
  };

  for (double t : roots) {
    const Sym3 C = A + t * B;
    for (const MVec& g : split_degenerate(C)) {
      for (const MVec& x : line_conic_points(g, B)) consider(x);
      for (const MVec& x : line_conic_points(g, A)) consider(x);
    }
  }
  return points;
}

}  // namespace hypgeo
