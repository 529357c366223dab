// harmonic.hpp
// Bidirectional map between an elasticity tensor and its five irreducible
// parts (lambda, mu, D1, D2, A):
//
//   E_ijkl = lambda d_ij d_kl + mu (d_ik d_lj + d_il d_kj)
//          + d_ij D1_kl + d_kl D1_ij
//          + 1/2 (d_ki D2_jl + d_kj D2_il + d_li D2_jk + d_lj D2_ik)
//          + A_ijkl
//
// with D1, D2 traceless symmetric and A harmonic. The map is linear and
// bijective; decompose() inverts it by contracting the dilatational trace
// d_ij = E_ijkk and the Voigt trace v_ij = E_ikjk:
//   tr d = 3 (3 lambda + 2 mu),  tr v = 3 (lambda + 4 mu),
//   dev d = 3 D1 + 2 D2,         dev v = 2 D1 + 5/2 D2,
// and A is the remainder.

#pragma once

#include "elastinv/core.hpp"

namespace elastinv {

struct HarmonicParts {
  double lambda = 0.0;
  double mu = 0.0;
  Harm2 d1;
  Harm2 d2;
  Harm4 a;

  HarmonicParts operator*(double s) const;
  HarmonicParts operator+(const HarmonicParts& o) const;
};

ElasticityTensor compose(const HarmonicParts& parts);
HarmonicParts decompose(const ElasticityTensor& e);

/// Parts rotated componentwise (lambda, mu unchanged).
HarmonicParts rotate_parts(const Rotation& q, const HarmonicParts& p);

}  // namespace elastinv
