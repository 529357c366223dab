// rational.hpp
// Exact-rational evaluation of the invariant catalog, used by the relation
// search. Samples assign rationals to the 19 free parameters (9 components
// of A, 5 each of D1 and D2); lambda and mu stay fixed at zero, so the
// degree-1 scalar entries never contribute.

#pragma once

#include "elastinv/catalog.hpp"
#include "elastinv/detail/contract.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>

namespace elastinv {

using Rat = mpq_class;

/// Rational point in the 19-parameter sample space. Deviator component
/// order: [t11, t22, t23, t13, t12] with t33 = -t11 - t22.
struct RationalAssignment {
  std::array<Rat, 9> a{};   // Harm4 storage order
  std::array<Rat, 5> d1{};
  std::array<Rat, 5> d2{};
};

/// Deterministic per seed; numerators and denominators bounded by 10^4, so
/// exact arithmetic stays tractable. The implied A satisfies the harmonic
/// closure exactly by construction.
RationalAssignment sample_point(std::uint64_t seed);

using RatInters = detail::IntersT<Rat>;

RatInters compute_intermediates_exact(const RationalAssignment& p);

/// Exact value of a catalog descriptor at precomputed intermediates.
/// Scalar entries lambda and mu evaluate to 0 (fixed by the sample space).
Rat evaluate_descriptor_exact(const InvariantDescriptor& d, const RatInters& t);

/// Double-precision parts with the same component values, for the
/// rational-vs-float consistency checks.
HarmonicParts to_parts(const RationalAssignment& p);

}  // namespace elastinv
