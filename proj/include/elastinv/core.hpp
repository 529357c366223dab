// core.hpp
// Fixed-dimension tensor value types for 3D elasticity work: symmetric
// second-order tensors, harmonic (symmetric traceless) fourth-order tensors,
// the 21-component elasticity tensor in Voigt storage, rotations and the
// SO(3) action, and the trace algebra used by the invariant catalog.
//
// All types are immutable-style value types; all operations are pure.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace elastinv {

using Mat3 = Eigen::Matrix3d;

/// Symmetric second-order tensor, six stored components.
/// Component order: [t11, t22, t33, t23, t13, t12].
struct Sym2 {
  std::array<double, 6> v{};

  static Sym2 zero() { return {}; }
  static Sym2 diag(double a, double b, double c) { return Sym2{{a, b, c, 0, 0, 0}}; }
  static Sym2 from_matrix(const Mat3& m);

  double operator()(int i, int j) const { return v[index(i, j)]; }
  double& at(int i, int j) { return v[index(i, j)]; }

  double trace() const { return v[0] + v[1] + v[2]; }
  Mat3 to_matrix() const;

  /// X - (tr X / 3) I
  Sym2 deviator() const;

  double norm() const;  // Frobenius, off-diagonals counted twice

  Sym2 operator+(const Sym2& o) const;
  Sym2 operator-(const Sym2& o) const;
  Sym2 operator*(double s) const;

  // (i,j) -> storage slot; symmetric in i,j
  static int index(int i, int j);
};

/// Traceless symmetric second-order tensor. Same storage as Sym2; the
/// trace-zero invariant is maintained by the constructing operations and
/// checked in tests rather than by the type system.
using Harm2 = Sym2;

/// Fully symmetric, traceless fourth-order tensor ("harmonic"), stored as its
/// nine independent components in the order
///   [A1111, A1112, A1113, A1122, A1123, A1222, A1223, A2222, A2223].
/// The remaining multiset components follow from tracelessness:
///   A1133 = -A1111 - A1122        A1233 = -A1112 - A1222
///   A2233 = -A1122 - A2222        A1333 = -A1113 - A1223
///   A3333 =  A1111 + 2 A1122 + A2222
///   A2333 = -A1123 - A2223
struct Harm4 {
  std::array<double, 9> c{};

  static Harm4 zero() { return {}; }

  /// Value of A_{ijkl} (0-based indices), derived components included.
  double operator()(int i, int j, int k, int l) const;

  /// All 15 multiset values in the canonical multiset order (see detail/contract.hpp).
  std::array<double, 15> multiset_values() const;

  Harm4 operator+(const Harm4& o) const;
  Harm4 operator-(const Harm4& o) const;
  Harm4 operator*(double s) const;

  double norm() const;  // Frobenius over all 81 components
};

/// Dense fourth-order tensor, no symmetry assumed. Used for raw input
/// validation and as the expansion target for Harm4.
struct Tensor4 {
  std::array<double, 81> v{};
  double operator()(int i, int j, int k, int l) const { return v[((i * 3 + j) * 3 + k) * 3 + l]; }
  double& at(int i, int j, int k, int l) { return v[((i * 3 + j) * 3 + k) * 3 + l]; }
  double norm() const;
};

Tensor4 expand(const Harm4& a);

/// Result of the harmonicity check on raw components.
struct Harm4Check {
  bool ok = false;
  double max_violation = 0.0;  // absolute, before the tol * |A| comparison
  std::string worst;           // description of the worst violated condition
};

/// True iff T is fully symmetric and traceless within tol * ||T||.
Harm4Check is_harmonic4(const Tensor4& t, double tol);

/// Proper rotation (element of SO(3)).
struct Rotation {
  Mat3 m = Mat3::Identity();

  static Rotation identity() { return {}; }
  static Rotation about_axis(int axis, double angle);
  Rotation transposed() const { return Rotation{m.transpose()}; }
  Rotation operator*(const Rotation& o) const { return Rotation{m * o.m}; }

  double orthogonality_defect() const;  // ||Q^T Q - I||_inf
};

/// Rotation by `angle` in the 1-3 plane,
///   Q = [[cos, 0, -sin], [0, 1, 0], [sin, 0, cos]].
Rotation rotation_in_plane_13(double angle);

/// Haar-uniform random rotation, deterministic per seed.
Rotation random_rotation(std::uint64_t seed);

Sym2 rotate_sym2(const Rotation& q, const Sym2& t);    // Q T Q^T
Harm4 rotate_harm4(const Rotation& q, const Harm4& a);

/// Fourth-order elasticity tensor with minor and major symmetries,
/// E_ijkl = E_ijlk = E_jikl = E_klij; stored as the upper triangle of the
/// 6x6 Voigt matrix with the index-pair map 11->1, 22->2, 33->3, 23->4,
/// 13->5, 12->6. Entries are raw tensor components (no shear factors).
struct ElasticityTensor {
  std::array<double, 21> c{};

  static ElasticityTensor zero() { return {}; }
  static ElasticityTensor isotropic(double lambda, double mu);

  double voigt(int i, int j) const { return c[voigt_index(i, j)]; }         // 0-based 6x6
  double& voigt_at(int i, int j) { return c[voigt_index(i, j)]; }
  double component(int i, int j, int k, int l) const;                       // 0-based 3x3x3x3

  ElasticityTensor operator+(const ElasticityTensor& o) const;
  ElasticityTensor operator-(const ElasticityTensor& o) const;
  ElasticityTensor operator*(double s) const;

  double norm() const;  // Frobenius over all 81 components

  static int voigt_index(int i, int j);  // 0-based (I,J), symmetric
  /// Voigt slot -> representative tensor index pair, 0-based.
  static std::pair<int, int> voigt_pair(int i);
};

ElasticityTensor rotate_elast(const Rotation& q, const ElasticityTensor& e);

/// tr(T_a^{p_a} T_b^{p_b} ...) evaluated left to right as 3x3 matrix
/// products. 1 to 3 factors, powers 1 to 3. Throws std::invalid_argument on
/// an empty factor list or out-of-range power.
double trace_product(const std::vector<std::pair<Sym2, int>>& factors);

}  // namespace elastinv
