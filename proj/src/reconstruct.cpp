#include "elastinv/reconstruct.hpp"

#include <algorithm>
#include <cmath>

namespace elastinv {

namespace {

constexpr int kA1111 = 0, kA1112 = 1, kA1113 = 2, kA1122 = 3, kA1123 = 4, kA1222 = 5,
              kA1223 = 6, kA2222 = 7, kA2223 = 8;

struct EigDesc {
  std::array<double, 3> vals;  // descending
  Rotation q;                  // rotate_sym2(q, s) = diag(vals)
};

EigDesc eig_desc(const Sym2& s) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(s.to_matrix());
  Mat3 vr;
  EigDesc r;
  for (int i = 0; i < 3; ++i) {
    r.vals[i] = es.eigenvalues()(2 - i);
    vr.col(i) = es.eigenvectors().col(2 - i);
  }
  if (vr.determinant() < 0) vr.col(2) *= -1.0;
  r.q.m = vr.transpose();
  return r;
}

Rotation swap_axes_23() {
  Rotation r;
  r.m << 1, 0, 0, 0, 0, 1, 0, -1, 0;
  return r;
}
Rotation swap_axes_12() {
  Rotation r;
  r.m << 0, 1, 0, -1, 0, 0, 0, 0, 1;
  return r;
}

/// Working state: parts expressed in the current frame plus the
/// intermediates recomputed there.
struct Work {
  Rotation q;  // original -> current frame
  HarmonicParts parts;
  IntermediateSet t;
  JInvariants j;

  void refresh() { compute_intermediates_and_j(parts, t, j); }
  void rotate(const Rotation& r) {
    parts = rotate_parts(r, parts);
    q = r * q;
    refresh();
  }
};

double frob_dot(const Sym2& a, const Sym2& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a(i, j) * b(i, j);
  return s;
}

/// Angle of the 1-3-plane rotation that zeroes the (1,3) entry of x:
/// rotating by theta maps x13 to ((x11 - x33)/2) sin 2theta + x13 cos 2theta.
double plane_zero_angle(const Sym2& x) {
  const double off = x(0, 2);
  const double diff = x(0, 0) - x(2, 2);
  if (off == 0.0) return 0.0;
  return 0.5 * std::atan2(-2.0 * off, diff);
}

void solve2(double a, double b, double c, double d, double r1, double r2, double& x, double& y,
            const char* where) {
  const double det = a * d - b * c;
  if (det == 0.0) throw branch_error(std::string(where) + ": singular 2x2 system");
  x = (r1 * d - r2 * b) / det;
  y = (a * r2 - c * r1) / det;
}

/// Shared solve for (A1112, A1123) from the B13 = 0 and B11 = B33
/// constraints, valid whenever A1223 = 0 and the remaining components are
/// known. Used by II.1.1 and III.2.2.1.
void solve_offpair(const std::array<double, 9>& a, double& x1112, double& x1123,
                   const char* where) {
  const double c = 2 * a[kA1122] + a[kA2222];
  const double r1 = -(c * a[kA1111] + 2 * a[kA1122] * a[kA1122] +
                      5 * a[kA1122] * a[kA2222] + a[kA1222] * a[kA1222] +
                      2 * a[kA2222] * a[kA2222] + 2 * a[kA2223] * a[kA2223]);
  const double r2 = c * a[kA1113] - 4 * a[kA1222] * a[kA2223];
  solve2(3 * a[kA1222], 3 * a[kA2223], 3 * a[kA2223], -3 * a[kA1222], r1, r2, x1112, x1123, where);
}

struct Recovery {
  std::array<double, 9> a{};
  std::vector<std::string> trace;
};

/// Common deep-stratum logic for 2 A1122 + A2222 = 0 (subcase II.2 and
/// its Case-III re-entry III.2.2.2). Knowns arrive in `a`; b11/b22 are the
/// relevant B diagonal values in the working frame (equal in Case II).
/// `third` selects the independent-deviator resolution through the second
/// deviator instead of the canonical in-plane choice.
void core_ii2(Work& w, Recovery& rec, std::array<double, 9>& a, double zeta, double b11,
              double b22, bool swapped, bool third, double tol_a) {
  rec.trace.push_back("II.2");
  const double s2 = a[kA1222] * a[kA1222] + a[kA2223] * a[kA2223];
  a[kA2222] = -2 * a[kA1122];

  if (s2 > tol_a * tol_a) {
    // II.2.1: everything follows from the B constraints.
    rec.trace.push_back("II.2.1");
    a[kA1112] = -a[kA1222] * (a[kA1222] * a[kA1222] + 6 * a[kA2223] * a[kA2223]) / (3 * s2);
    a[kA1123] = a[kA2223] * (3 * a[kA1222] * a[kA1222] - 2 * a[kA2223] * a[kA2223]) / (3 * s2);
    const double p = 4 * a[kA1112] + 3 * a[kA1222];
    const double q = 4 * a[kA1123] + a[kA2223];
    if (p * p + q * q <= tol_a * tol_a) {
      // the case analysis shows both continuations are impossible
      throw branch_error(std::abs(a[kA1112]) <= tol_a ? "II.2.1.1" : "II.2.1.2");
    }
    const double al = a[kA1122];
    solve2(p, q, -q, p, -3 * al * a[kA1112] - al * a[kA1222],
           3 * al * a[kA1123] + 2 * al * a[kA2223], a[kA1111], a[kA1113], "II.2.1");
    return;
  }

  // II.2.2: A1222 = A2223 = 0; the tensor lies on one of two in-plane
  // rotation families, told apart by H22 (computed from A and the driver).
  rec.trace.push_back("II.2.2");
  a[kA1222] = 0;
  a[kA2223] = 0;
  const double al = a[kA1122];
  const double h22 = swapped ? w.t.k(1, 1) : w.t.h(1, 1);
  const double pred1 = -8 * al * al * zeta;  // A1112 = A1123 = 0 family
  const double s2pred = 0.5 * (b11 - b22) + 25.0 / 8.0 * al * al;
  const double pred2 = 4 * zeta * (s2pred - 2 * al * al);  // A1111 = -3/4 al family
  const bool family1 = std::abs(h22 - pred1) <= std::abs(h22 - pred2);
  const Sym2& other = swapped ? w.parts.d1 : w.parts.d2;

  if (family1) {
    if (!third) {
      rec.trace.push_back("II.2.2.1");
      // the in-plane orbit is the circle (A1111 + 3/4 al)^2 + A1113^2 = r2
      const double r2 = 0.25 * b11 - 15.0 / 16.0 * al * al;
      a[kA1111] = -0.75 * al;
      a[kA1113] = std::sqrt(std::max(0.0, r2));
      return;
    }
    rec.trace.push_back("II*.2.2.1");
    // pin the in-plane angle with the second deviator, then read A1111 and
    // A1113 off the G (or N) system
    w.rotate(rotation_in_plane_13(plane_zero_angle(other)));
    const Sym2& e = swapped ? w.parts.d1 : w.parts.d2;
    const Sym2& gt = swapped ? w.t.f : w.t.g;
    const double p2 = 2 * e(0, 0) + e(1, 1);
    const double e13 = e(0, 2);
    const double tol_e = kDefaultTieTol * (e.norm() + 1e-300);
    if (p2 * p2 + 4 * e13 * e13 > tol_e * tol_e) {
      rec.trace.push_back("II*.2.2.1.1");
      solve2(p2, 2 * e13, -2 * e13, p2, gt(0, 0) - al * (e(0, 0) + 2 * e(1, 1)),
             gt(0, 2) + 2 * al * e13, a[kA1111], a[kA1113], "II*.2.2.1.1");
    } else {
      rec.trace.push_back("II*.2.2.1.2");
      const Sym2& nt = swapped ? w.t.m : w.t.n;
      const double e12 = e(0, 1), e23 = e(1, 2);
      const double dd = e12 * e12 + e23 * e23;
      if (dd <= tol_e * tol_e)
        throw branch_error("II*.2.2.1.2: deviators proportional");
      solve2(e12 * e12 - e23 * e23, 2 * e12 * e23, -2 * e12 * e23, e12 * e12 - e23 * e23,
             nt(0, 0) - al * (3 * e(0, 0) * e(0, 0) + e12 * e12), nt(0, 2) + 2 * al * e12 * e23,
             a[kA1111], a[kA1113], "II*.2.2.1.2");
    }
    return;
  }

  a[kA1111] = -0.75 * al;
  a[kA1113] = 0;
  if (!third) {
    rec.trace.push_back("II.2.2.2");
    auto [x, y] = canonical_a1112_a1123(al, 0.0, std::sqrt(std::max(0.0, s2pred)));
    a[kA1112] = x;
    a[kA1123] = y;
    return;
  }
  rec.trace.push_back("II*.2.2.2");
  w.rotate(rotation_in_plane_13(plane_zero_angle(swapped ? w.parts.d1 : w.parts.d2)));
  const Sym2& e = swapped ? w.parts.d1 : w.parts.d2;
  const Sym2& gt = swapped ? w.t.f : w.t.g;
  const double p2 = 2 * e(0, 0) + e(1, 1);
  const double e13 = e(0, 2);
  const double tol_e = kDefaultTieTol * (e.norm() + 1e-300);
  if (p2 * p2 + 4 * e13 * e13 > tol_e * tol_e) {
    rec.trace.push_back("II*.2.2.2.1");
    solve2(p2, 2 * e13, -2 * e13, p2, gt(0, 1) - 2 * al * e(0, 1), gt(1, 2) - 2 * al * e(1, 2),
           a[kA1112], a[kA1123], "II*.2.2.2.1");
  } else {
    rec.trace.push_back("II*.2.2.2.2");
    const Sym2& nt = swapped ? w.t.m : w.t.n;
    const double e12 = e(0, 1), e23 = e(1, 2);
    const double dd = e12 * e12 + e23 * e23;
    if (dd <= tol_e * tol_e) throw branch_error("II*.2.2.2.2: deviators proportional");
    solve2(e12 * e12 - e23 * e23, 2 * e12 * e23, -2 * e12 * e23, e12 * e12 - e23 * e23,
           nt(0, 1) + 2 * al * e(0, 0) * e12, nt(1, 2) + 2 * al * e(0, 0) * e23, a[kA1112],
           a[kA1123], "II*.2.2.2.2");
  }
}

}  // namespace

std::pair<double, double> canonical_a1111_a1113(double alpha, double beta, double gamma) {
  const double eta = std::hypot(beta + 0.75 * alpha, gamma);
  return {-0.75 * alpha, eta};
}

std::pair<double, double> canonical_a1112_a1123(double /*alpha*/, double beta, double gamma) {
  return {0.0, std::hypot(beta, gamma)};
}

std::pair<Rotation, HarmonicParts> canonical_frame(const ElasticityTensor& e, double tie_tol) {
  if (!(tie_tol > 0)) throw std::invalid_argument("canonical_frame: tie_tol must be positive");
  HarmonicParts p = decompose(e);
  IntermediateSet t;
  JInvariants j;
  compute_intermediates_and_j(p, t, j);
  if (j.j2() <= 0 || std::sqrt(j.j2()) <= tie_tol) return {Rotation::identity(), p};
  const EigDesc eb = eig_desc(t.b);
  return {eb.q, rotate_parts(eb.q, p)};
}

CanonicalRepresentative reconstruct(const ElasticityTensor& e, double tie_tol) {
  if (!(tie_tol > 0)) throw std::invalid_argument("reconstruct: tie_tol must be positive");

  Work w;
  w.q = Rotation::identity();
  w.parts = decompose(e);
  w.refresh();

  Recovery rec;
  const double j2 = w.j.j2();
  const double scale_a = std::sqrt(std::max(0.0, j2));
  const double tol_a = tie_tol * (scale_a + 1e-300);

  CanonicalRepresentative out;

  if (scale_a <= tie_tol) {
    // A = 0: only the deviators need a frame
    rec.trace.push_back("A0");
    const double n1 = w.parts.d1.norm(), n2 = w.parts.d2.norm();
    if (n1 > 0 || n2 > 0) w.rotate(eig_desc(n1 >= n2 ? w.parts.d1 : w.parts.d2).q);
    out.frame = w.q;
    out.parts = w.parts;
    out.branch_trace = rec.trace;
    return out;
  }

  // frame 1: diagonalize B, descending
  {
    const EigDesc eb = eig_desc(w.t.b);
    w.rotate(eb.q);
  }
  const EigDesc eb = eig_desc(w.t.b);  // eigenvalues in the new frame
  const double b1 = eb.vals[0], b2 = eb.vals[1], b3 = eb.vals[2];
  const double tol_b = tie_tol * j2;  // tr B = J2
  const bool eq12 = (b1 - b2) <= tol_b;
  const bool eq23 = (b2 - b3) <= tol_b;

  std::array<double, 9>& a = rec.a;

  // deviator roles
  const double n1 = w.parts.d1.norm(), n2 = w.parts.d2.norm();
  const double dev_scale = std::max(n1, n2);
  const bool have_driver = dev_scale > tie_tol * (scale_a + dev_scale);
  const bool swapped = have_driver && n1 <= tie_tol * dev_scale;  // driver is D2
  bool third = false;
  if (have_driver && !swapped && n2 > tie_tol * dev_scale) {
    // proportionality test of D2 against D1
    const double coef = frob_dot(w.parts.d2, w.parts.d1) / (n1 * n1);
    const Sym2 resid = w.parts.d2 - w.parts.d1 * coef;
    third = resid.norm() > tie_tol * n2;
  }

  auto driver = [&]() -> const Sym2& { return swapped ? w.parts.d2 : w.parts.d1; };
  auto tF = [&]() -> const Sym2& { return swapped ? w.t.g : w.t.f; };
  auto tH = [&]() -> const Sym2& { return swapped ? w.t.k : w.t.h; };
  auto tM = [&]() -> const Sym2& { return swapped ? w.t.n : w.t.m; };

  if (!eq12 && !eq23) {
    // ---- Case I: all B eigenvalues distinct ----
    rec.trace.push_back("Case I");
    const double den1 = (b1 - b2) * (b1 - b3);
    const double den2 = (b1 - b2) * (b2 - b3);
    auto pair_solve = [&](double cv, double dv, double& x, double& y) {
      x = (-cv * (b2 + b3) + dv) / den1;
      y = (cv * (b1 + b3) - dv) / den2;
    };
    double dup;
    pair_solve(w.t.c(0, 0), w.t.d(0, 0), a[kA1111], a[kA1122]);
    pair_solve(w.t.c(0, 1), w.t.d(0, 1), a[kA1112], a[kA1222]);
    pair_solve(w.t.c(0, 2), w.t.d(0, 2), a[kA1113], a[kA1223]);
    pair_solve(w.t.c(1, 1), w.t.d(1, 1), dup, a[kA2222]);
    pair_solve(w.t.c(1, 2), w.t.d(1, 2), a[kA1123], a[kA2223]);
  } else if (eq12 && eq23) {
    // ---- Case II: B spherical ----
    rec.trace.push_back("Case II");
    const double bsph = j2 / 3.0;
    if (!have_driver) {
      // both deviators vanish: the J scalars determine the orbit but no
      // componentwise recovery is available; keep the source components
      rec.trace.push_back("II.D0");
      a = w.parts.a.c;
    } else {
      const EigDesc ed = eig_desc(driver());
      w.rotate(ed.q);
      const double g12 = ed.vals[0] - ed.vals[1];
      const double g23 = ed.vals[1] - ed.vals[2];
      const double tol_d = tie_tol * driver().norm();
      if (g12 > tol_d && g23 > tol_d) {
        // unnumbered generic subcase: F and M pin every component pair
        rec.trace.push_back("II.0");
        const double d1v = ed.vals[0], d2v = ed.vals[1];
        const double p = 2 * d1v + d2v, q = d1v + 2 * d2v;
        auto pair_solve = [&](double fv, double mv, double& x, double& y, const char* wh) {
          solve2(p, q, -d2v * p, -d1v * q, fv, mv, x, y, wh);
        };
        double dup;
        pair_solve(tF()(0, 0), tM()(0, 0), a[kA1111], a[kA1122], "II.0");
        pair_solve(tF()(0, 1), tM()(0, 1), a[kA1112], a[kA1222], "II.0");
        pair_solve(tF()(0, 2), tM()(0, 2), a[kA1113], a[kA1223], "II.0");
        pair_solve(tF()(1, 1), tM()(1, 1), dup, a[kA2222], "II.0");
        pair_solve(tF()(1, 2), tM()(1, 2), a[kA1123], a[kA2223], "II.0");
      } else {
        // repeated driver eigenvalue: arrange diag(zeta, -2 zeta, zeta)
        if (g12 <= tol_d)
          w.rotate(swap_axes_23());  // (r, r, s) -> (r, s, r)
        else
          w.rotate(swap_axes_12());  // (r, s, s) -> (s, r, s)
        const double zeta = 0.5 * (driver()(0, 0) + driver()(2, 2));
        // in-plane angle: zero F13
        w.rotate(rotation_in_plane_13(plane_zero_angle(tF())));
        const Sym2& fv = tF();
        a[kA1122] = -fv(0, 0) / (3 * zeta);
        a[kA1222] = -fv(0, 1) / (3 * zeta);
        a[kA1223] = 0;  // F13 = 0 frame
        a[kA2222] = -fv(1, 1) / (3 * zeta);
        a[kA2223] = -fv(1, 2) / (3 * zeta);
        const double c = 2 * a[kA1122] + a[kA2222];
        if (std::abs(c) > tol_a) {
          rec.trace.push_back("II.1");
          const Sym2& hv = tH();
          a[kA1113] = -(hv(0, 2) / zeta + 2 * a[kA1222] * a[kA2223]) / c;
          a[kA1111] = ((hv(2, 2) - hv(0, 0)) / (2 * zeta) -
                       (2 * a[kA1122] * a[kA1122] - a[kA1122] * a[kA2222] +
                        a[kA1222] * a[kA1222] - a[kA2222] * a[kA2222] -
                        a[kA2223] * a[kA2223])) /
                      c;
          const double s2 = a[kA1222] * a[kA1222] + a[kA2223] * a[kA2223];
          if (s2 > tol_a * tol_a) {
            rec.trace.push_back("II.1.1");
            solve_offpair(a, a[kA1112], a[kA1123], "II.1.1");
          } else {
            rec.trace.push_back("II.1.2");
            a[kA1222] = a[kA2223] = 0;
            a[kA1113] = 0;
            a[kA1111] = -a[kA1122] - 2 * a[kA2222];
            const double c1 = a[kA1122] - a[kA2222];
            const double c2 = a[kA1122] + 2 * a[kA2222];
            if (std::abs(c1) > tol_a && std::abs(c2) > tol_a) {
              rec.trace.push_back("II.1.2.1");
              a[kA1112] = a[kA1123] = 0;
            } else if (std::abs(c1) <= tol_a && std::abs(c2) <= tol_a) {
              throw branch_error("II.1.2.4");
            } else if (std::abs(c1) <= tol_a) {
              rec.trace.push_back("II.1.2.3");
              a[kA1123] = 0;
              const double pref = 4 * a[kA1111] + 3 * a[kA1122];
              if (std::abs(pref) <= tol_a) throw branch_error("II.1.2.3: vanishing H12 prefactor");
              a[kA1112] = tH()(0, 1) / (zeta * pref);
            } else {
              rec.trace.push_back("II.1.2.2");
              a[kA1112] = 0;
              const double disc = a[kA1122] * a[kA1122] + a[kA1122] * a[kA2222] -
                                  6 * a[kA2222] * a[kA2222];
              a[kA1123] = std::sqrt(std::max(0.0, disc));
            }
          }
        } else {
          core_ii2(w, rec, a, zeta, bsph, bsph, swapped, third, tol_a);
        }
      }
    }
  } else {
    // ---- Case III: exactly two B eigenvalues equal ----
    rec.trace.push_back("Case III");
    // working frame: repeated value in slots 1 and 3
    double brep, bsim;
    if (eq12) {
      w.rotate(swap_axes_23());
      brep = 0.5 * (b1 + b2);
      bsim = b3;
    } else {
      w.rotate(swap_axes_12());
      brep = 0.5 * (b2 + b3);
      bsim = b1;
    }
    const double denom = bsim - brep;  // B22 - B33, nonzero by dispatch
    auto read_c_knowns = [&]() {
      a[kA1122] = w.t.c(0, 0) / denom;
      a[kA1222] = w.t.c(0, 1) / denom;
      a[kA1223] = w.t.c(0, 2) / denom;
      a[kA2222] = w.t.c(1, 1) / denom;
      a[kA2223] = w.t.c(1, 2) / denom;
    };
    read_c_knowns();
    if (!have_driver) {
      rec.trace.push_back("III.D0");
      a = w.parts.a.c;
    } else {
      // in-plane angle: zero the driver's 13 entry
      w.rotate(rotation_in_plane_13(plane_zero_angle(driver())));
      read_c_knowns();
      const Sym2& dv = driver();
      const double d11 = dv(0, 0), d22 = dv(1, 1), d12 = dv(0, 1), d23 = dv(1, 2);
      const double tol_d = tie_tol * dv.norm();
      const double p = 2 * d11 + d22;
      if (std::abs(p) > tol_d) {
        rec.trace.push_back("III.1");
        const Sym2& fv = tF();
        const double qd = d11 + 2 * d22;
        a[kA1112] = (fv(0, 1) - a[kA1222] * qd - 2 * a[kA1122] * d12 - 2 * a[kA1223] * d23) / p;
        a[kA1123] = (fv(1, 2) - a[kA2223] * qd - 2 * a[kA1223] * d12 + 2 * a[kA1122] * d23 +
                     2 * a[kA2222] * d23) /
                    p;
        a[kA1111] = (fv(0, 0) - a[kA1122] * qd - 2 * d12 * a[kA1112] - 2 * d23 * a[kA1123]) / p;
        a[kA1113] = (fv(0, 2) - a[kA1223] * qd + 2 * a[kA1222] * d23 + 2 * d23 * a[kA1112] -
                     2 * d12 * a[kA1123]) /
                    p;
      } else {
        rec.trace.push_back("III.2");
        const double s2d = d12 * d12 + d23 * d23;
        if (s2d > tol_d * tol_d) {
          rec.trace.push_back("III.2.1");
          const Sym2& fv = tF();
          solve2(2 * d12, 2 * d23, -2 * d23, 2 * d12, fv(0, 0) + 3 * d11 * a[kA1122],
                 fv(0, 2) + 3 * d11 * a[kA1223] + 2 * a[kA1222] * d23, a[kA1112], a[kA1123],
                 "III.2.1");
          rec.trace.push_back("III.2.1.1");
          const Sym2& mv = tM();
          const double dd = d12 * d12 - d23 * d23;
          const double r1 = mv(0, 0) + 2 * a[kA1112] * d11 * d12 -
                            a[kA1122] * (3 * d11 * d11 + d12 * d12) + 2 * a[kA1123] * d11 * d23;
          const double r2 = mv(0, 2) - 2 * a[kA1112] * d11 * d23 + 2 * a[kA1122] * d12 * d23 +
                            2 * a[kA1123] * d11 * d12 - 2 * a[kA1222] * d11 * d23 -
                            a[kA1223] * (3 * d11 * d11 + d12 * d12);
          solve2(dd, 2 * d12 * d23, -2 * d12 * d23, dd, r1, r2, a[kA1111], a[kA1113],
                 "III.2.1.1");
        } else {
          rec.trace.push_back("III.2.2");
          // driver = diag(d11, -2 d11, d11); refine the in-plane angle to
          // zero C13, which pins A1223 = 0
          w.rotate(rotation_in_plane_13(plane_zero_angle(w.t.c)));
          read_c_knowns();
          a[kA1223] = 0;
          const double zeta = 0.5 * (driver()(0, 0) + driver()(2, 2));
          const double c = 2 * a[kA1122] + a[kA2222];
          if (std::abs(c) > tol_a) {
            rec.trace.push_back("III.2.2.1");
            const Sym2& hv = tH();
            a[kA1113] = -(hv(0, 2) / zeta + 2 * a[kA1222] * a[kA2223]) / c;
            a[kA1111] = ((hv(2, 2) - hv(0, 0)) / (2 * zeta) -
                         (2 * a[kA1122] * a[kA1122] - a[kA1122] * a[kA2222] +
                          a[kA1222] * a[kA1222] - a[kA2222] * a[kA2222] -
                          a[kA2223] * a[kA2223])) /
                        c;
            const double s2 = a[kA1222] * a[kA1222] + a[kA2223] * a[kA2223];
            if (s2 > tol_a * tol_a) {
              solve_offpair(a, a[kA1112], a[kA1123], "III.2.2.1");
            } else {
              a[kA1222] = a[kA2223] = 0;
              a[kA1113] = 0;
              a[kA1111] = -a[kA1122] - 2 * a[kA2222];
              const double c1 = a[kA1122] - a[kA2222];
              const double c2 = a[kA1122] + 2 * a[kA2222];
              if (std::abs(c1) > tol_a && std::abs(c2) > tol_a) {
                rec.trace.push_back("III.2.2.1.1");
                a[kA1112] = a[kA1123] = 0;
              } else if (std::abs(c1) <= tol_a && std::abs(c2) <= tol_a) {
                throw branch_error("III.2.2.1.4");
              } else if (std::abs(c2) <= tol_a) {
                rec.trace.push_back("III.2.2.1.2");
                a[kA1112] = 0;
                if (std::abs(a[kA1122]) <= tol_a)
                  throw branch_error("III.2.2.1.2: vanishing A1122");
                a[kA1123] = -2 * tH()(1, 2) / (9 * a[kA1122] * zeta);
              } else {
                rec.trace.push_back("III.2.2.1.3");
                a[kA1123] = 0;
                if (std::abs(a[kA1122]) <= tol_a)
                  throw branch_error("III.2.2.1.3: vanishing A1122");
                a[kA1112] = -tH()(0, 1) / (9 * a[kA1122] * zeta);
              }
            }
          } else {
            rec.trace.push_back(third ? "III*.2.2.2" : "III.2.2.2");
            core_ii2(w, rec, a, zeta, brep, bsim, swapped, third, tol_a);
          }
        }
      }
    }
  }

  HarmonicParts result = w.parts;
  result.a.c = a;

  // restore descending B order for the output frame (Case III works with the
  // repeated eigenvalue in slots 1 and 3)
  {
    HarmonicParts probe = result;
    IntermediateSet t2;
    JInvariants j2v;
    compute_intermediates_and_j(probe, t2, j2v);
    const double bb1 = t2.b(0, 0), bb2 = t2.b(1, 1);
    if (bb2 > bb1 + tol_b) {
      const Rotation r = swap_axes_12();
      result = rotate_parts(r, result);
      w.q = r * w.q;
    } else {
      compute_intermediates_and_j(result, t2, j2v);
      if (t2.b(2, 2) > t2.b(1, 1) + tol_b) {
        const Rotation r = swap_axes_23();
        result = rotate_parts(r, result);
        w.q = r * w.q;
      }
    }
  }

  out.frame = w.q;
  out.parts = result;
  out.branch_trace = rec.trace;
  return out;
}

namespace {

double unit_span(std::uint64_t seed, int salt) {
  std::uint64_t x = seed * 6364136223846793005ULL + 1442695040888963407ULL + salt * 0x9e3779b97f4a7c15ULL;
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return static_cast<double>(x % 100000) / 100000.0;
}

}  // namespace

const std::vector<std::string>& reachable_branch_labels() {
  static const std::vector<std::string> labels = {
      "I",          "II.0",        "II.1.1",      "II.1.2.1",    "II.2.2.1",    "II.2.2.2",
      "III.1",      "III.2.1.1",   "III.2.2.1",   "III.2.2.1.1", "III.2.2.1.2", "III.2.2.1.3",
      "III.2.2.2",  "II*.2.2.1.1", "II*.2.2.1.2", "II*.2.2.2.1", "II*.2.2.2.2", "III*.2.2.2"};
  return labels;
}

bool branch_trace_matches(const std::vector<std::string>& trace, const std::string& label) {
  const std::string want =
      (label == "I" || label == "II" || label == "III") ? "Case " + label : label;
  for (const auto& t : trace)
    if (t == want) return true;
  return false;
}

const std::vector<std::string>& contradictory_branch_labels() {
  static const std::vector<std::string> labels = {"II.1.2.2", "II.1.2.3", "II.1.2.4", "II.2.1",
                                                  "II.2.1.1", "II.2.1.2", "III.2.1.2",
                                                  "III.2.2.1.4"};
  return labels;
}

ElasticityTensor branch_probe(const std::string& label, std::uint64_t seed) {
  for (const auto& c : contradictory_branch_labels())
    if (label == c)
      throw unsupported_label("branch_probe: '" + label + "' is proved contradictory");

  const double u0 = unit_span(seed, 0), u1 = unit_span(seed, 1), u2 = unit_span(seed, 2);
  const double t = 0.6 + 0.8 * u0;           // positive family scale
  const double zeta = (0.5 + u1) * (u2 < 0.5 ? 1.0 : -1.0);
  const double rho = -0.8 + 1.6 * unit_span(seed, 3);
  const double psi = 6.283185307179586 * unit_span(seed, 4);

  HarmonicParts p;
  p.lambda = 0.4 + u1;
  p.mu = 0.7 + u2;

  const Sym2 d1deg = Sym2::diag(zeta, -2 * zeta, zeta);
  auto family_1113 = [&](double al, double beta, double gamma) {
    Harm4 a;
    a.c = {beta, 0, gamma, al, 0, 0, 0, -2 * al, 0};
    return a;
  };
  auto family_1123 = [&](double al, double beta, double gamma) {
    Harm4 a;
    a.c = {-0.75 * al, beta, 0, al, gamma, 0, 0, -2 * al, 0};
    return a;
  };
  const Sym2 d2_generic = Sym2{{2 * t, t, -3 * t, 0, 0, 0}};
  const Sym2 d2_nblock = Sym2{{t, -2 * t, t, 0.8 * t, 0, 0.6 * t}};  // spherical 1-3 block

  if (label == "I") {
    p.a.c = {t, 0, 0, 0.5 * t, 0, 0, 0, 2 * t, 0};
    p.d1 = Sym2{{0.3, -0.1, -0.2, 0.15, 0.05, -0.12}} * (0.5 + u1);
    p.d2 = Sym2{{-0.2, 0.4, -0.2, -0.07, 0.11, 0.09}} * (0.5 + u2);
  } else if (label == "II.0") {
    p.a.c = {8 * t, 0, 0, -4 * t, 0, 0, 0, 8 * t, 0};  // spherical B, cubic symmetry
    p.d1 = Sym2::diag(2 * zeta, zeta, -3 * zeta);
    p.d2 = p.d1 * rho;
  } else if (label == "II.1.1") {
    Harm4 cubic;
    cubic.c = {8 * t, 0, 0, -4 * t, 0, 0, 0, 8 * t, 0};
    p.a = rotate_harm4(random_rotation(seed * 2 + 17), cubic);
    p.d1 = d1deg;
    p.d2 = p.d1 * rho;
  } else if (label == "II.1.2.1") {
    p.a.c = {t, 0, 0, -3 * t, 0, 0, 0, t, 0};  // B = 40 t^2 I exactly
    p.d1 = d1deg;
    p.d2 = p.d1 * rho;
  } else if (label == "II.2.2.1" || label == "II*.2.2.1.1" || label == "II*.2.2.1.2") {
    const double al = 4 * t;
    const double r = 1.25 * al;  // spherical-B circle radius
    p.a = family_1113(al, -0.75 * al + r * std::cos(psi), r * std::sin(psi));
    p.d1 = d1deg;
    p.d2 = label == "II.2.2.1" ? p.d1 * rho
                               : (label == "II*.2.2.1.1" ? d2_generic : d2_nblock);
  } else if (label == "II.2.2.2" || label == "II*.2.2.2.1" || label == "II*.2.2.2.2") {
    const double al = 4 * t;
    const double r = std::sqrt(25.0 / 8.0) * al;
    p.a = family_1123(al, r * std::cos(psi), r * std::sin(psi));
    p.d1 = d1deg;
    p.d2 = label == "II.2.2.2" ? p.d1 * rho
                               : (label == "II*.2.2.2.1" ? d2_generic : d2_nblock);
  } else if (label == "III.1") {
    p.a = family_1113(t, t * (1.0 + 0.3 * u1), 0.2 * t * u2);
    p.d1 = Sym2{{0.9, 0.2, -1.1, 0.25, 0.15, -0.3}} * zeta;
    p.d2 = p.d1 * rho;
  } else if (label == "III.2.1.1") {
    p.a = family_1113(t, t * (1.0 + 0.3 * u1), 0.2 * t * u2);
    p.d1 = Sym2{{0.7 * zeta, -1.4 * zeta, 0.7 * zeta, -0.4 * zeta, 0, 0.5 * zeta}};
    p.d2 = p.d1 * rho;
  } else if (label == "III.2.2.1") {
    p.a.c = {4.2 * t, -3.2 * t, 0, t, 0, 3.6 * t, 0, t, 0};  // B = diag(r, s, r), r != s
    p.d1 = d1deg;
    p.d2 = p.d1 * rho;
  } else if (label == "III.2.2.1.1") {
    p.a.c = {-5 * t, 0, 0, t, 0, 0, 0, 2 * t, 0};
    p.d1 = d1deg;
    p.d2 = p.d1 * rho;
  } else if (label == "III.2.2.1.2") {
    p.a.c = {-3 * t, 2 * t, 0, t, 0, 0, 0, t, 0};
    p.d1 = d1deg;
    p.d2 = p.d1 * rho;
  } else if (label == "III.2.2.1.3") {
    p.a.c = {0, 0, 0, 2 * t, 3 * t, 0, 0, -t, 0};
    p.d1 = d1deg;
    p.d2 = p.d1 * rho;
  } else if (label == "III.2.2.2") {
    p.a.c = {-1.5 * t, -7.0 / 6.0 * t, 0, t, t / 6.0, t, 0, -2 * t, t};
    p.d1 = d1deg;
    p.d2 = p.d1 * rho;
  } else if (label == "III*.2.2.2") {
    const double al = 4 * t;
    p.a = family_1113(al, t, 0);  // B11 = B33 != B22
    p.d1 = d1deg;
    p.d2 = d2_generic;
  } else {
    throw unsupported_label("branch_probe: unknown label '" + label + "'");
  }

  const Rotation q = random_rotation(seed);
  return rotate_elast(q, compose(p));
}

}  // namespace elastinv
