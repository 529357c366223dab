// intermediates.hpp
// The 11 second-order symmetric tensors built from the harmonic parts,
//
//   D1, D2,
//   B_ij = A_iklm A_jklm          C_ij = A_ijkl B_kl      D_ij = A_ijkl B_km B_lm
//   F_ij = A_ijkl D1_kl           G_ij = A_ijkl D2_kl
//   H_ij = A_ipql A_jpqm D1_lm    K_ij = A_ipql A_jpqm D2_lm
//   M_ij = A_ijkl D1_km D1_lm     N_ij = A_ijkl D2_km D2_lm
//
// and the scalars J2..J10 (B2_ij = B_ik B_jk, P_ijkl = A_ijmn A_klmn):
//   J2 = A:A = tr B    J3 = P:A      J4 = B:B      J5 = B A B
//   J6 = B P B         J7 = B2 A B   J8 = B2 P B   J9 = B2 A B2   J10 = B2 P B2
//
// C, D, F, G, M, N are traceless; tr B = J2 holds exactly (same contraction).

#pragma once

#include "elastinv/core.hpp"
#include "elastinv/harmonic.hpp"

#include <array>

namespace elastinv {

struct IntermediateSet {
  Harm2 d1, d2;  // degree 1
  Sym2 b;        // 2
  Harm2 c;       // 3
  Harm2 d;       // 5
  Harm2 f, g;    // 2
  Sym2 h, k;     // 3
  Harm2 m, n;    // 3

  static constexpr int kCount = 11;

  /// Tensors in catalog order (D1, D2, B, C, D, F, G, H, K, M, N).
  std::array<const Sym2*, kCount> ordered() const {
    return {&d1, &d2, &b, &c, &d, &f, &g, &h, &k, &m, &n};
  }

  /// Polynomial degree of each tensor in the components of E, same order.
  static constexpr std::array<int, kCount> degrees() {
    return {1, 1, 2, 3, 5, 2, 2, 3, 3, 3, 3};
  }
};

struct JInvariants {
  std::array<double, 9> j{};  // J2..J10

  double j2() const { return j[0]; }
  double j3() const { return j[1]; }
  double j4() const { return j[2]; }
  double j5() const { return j[3]; }
  double j6() const { return j[4]; }
  double j7() const { return j[5]; }
  double j8() const { return j[6]; }
  double j9() const { return j[7]; }
  double j10() const { return j[8]; }
};

IntermediateSet compute_intermediates(const HarmonicParts& parts);
JInvariants compute_j(const Harm4& a);

/// Intermediates and J scalars in one pass (they share the B contraction).
void compute_intermediates_and_j(const HarmonicParts& parts, IntermediateSet& out_t,
                                 JInvariants& out_j);

}  // namespace elastinv
