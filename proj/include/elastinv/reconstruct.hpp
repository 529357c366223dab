// reconstruct.hpp
// Recovery of a canonical orbit representative from the intermediate
// tensors. The driver diagonalizes B (descending eigenvalues), dispatches on
// the eigenvalue pattern of B and on the state of the deviators D1, D2, and
// rebuilds the nine components of A from the intermediate tensors in that
// frame, following the case analysis:
//
//   Case I    all B eigenvalues distinct: every component from the C and D
//             linear systems.
//   Case II   B spherical: frame fixed by diagonalizing the driver deviator;
//             generic drivers solve the F/M systems (branch II.0), drivers
//             with a repeated eigenvalue descend through II.1 / II.2 with the
//             in-plane angle fixed by F13 = 0; the deepest strata (II.2.2.x)
//             are pinned only up to an in-plane angle and are canonicalized
//             (proportional deviators) or resolved through D2 (independent
//             deviators, II*.2.2.x).
//   Case III  exactly two B eigenvalues equal: five components from the C
//             system, the rest via III.1 / III.2.x; III.2.2.2 re-enters the
//             II.2 logic with Case-III data.
//
// Branches the case analysis proves contradictory raise branch_error if
// numeric input ever lands on them.

#pragma once

#include "elastinv/harmonic.hpp"
#include "elastinv/intermediates.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elastinv {

inline constexpr double kDefaultTieTol = 1e-9;

/// Recovery entered a branch the case analysis proves impossible; indicates
/// degenerate numerics or an internal bug. what() names the branch.
struct branch_error : std::runtime_error {
  explicit branch_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// branch_probe() was asked for a branch no real tensor reaches.
struct unsupported_label : std::invalid_argument {
  explicit unsupported_label(const std::string& msg) : std::invalid_argument(msg) {}
};

struct CanonicalRepresentative {
  Rotation frame;  // original coordinates -> canonical frame
  HarmonicParts parts;
  std::vector<std::string> branch_trace;
};

/// Rotation diagonalizing B with descending eigenvalues, and the parts
/// expressed in that frame. Eigenvalue pairs within tie_tol * tr B count as
/// equal for branch dispatch. For A = 0 the frame is the identity.
std::pair<Rotation, HarmonicParts> canonical_frame(const ElasticityTensor& e,
                                                   double tie_tol = kDefaultTieTol);

CanonicalRepresentative reconstruct(const ElasticityTensor& e, double tie_tol = kDefaultTieTol);

/// Canonical (A1111, A1113) for the family
///   A1122 = alpha, A2222 = -2 alpha, A1111 = beta, A1113 = gamma,
///   all other independent components zero,
/// whose in-plane rotation orbit is the circle
///   (A1111 + 3/4 alpha)^2 + A1113^2 = eta^2,  eta = sqrt((beta+3/4 alpha)^2 + gamma^2).
/// Returns (-3/4 alpha, eta); the rotation reaching it has angle
/// theta = (pi - 2 phi)/8 with cos phi = (beta + 3/4 alpha)/eta, sin phi = gamma/eta.
std::pair<double, double> canonical_a1111_a1113(double alpha, double beta, double gamma);

/// Same for the family A1111 = -3/4 alpha, A1112 = beta, A1123 = gamma
/// (A1113 and the rest zero): returns (0, sqrt(beta^2 + gamma^2));
/// theta = (pi - 2 phi)/6.
std::pair<double, double> canonical_a1112_a1123(double alpha, double beta, double gamma);

/// Labels branch_probe can generate, i.e. branches real tensors reach.
const std::vector<std::string>& reachable_branch_labels();

/// Branches the case analysis proves contradictory (probe unsupported).
const std::vector<std::string>& contradictory_branch_labels();

/// Deterministic tensor whose reconstruction trace contains `label`. The
/// seed varies admissible family parameters, applies a random rotation and a
/// positive scale. Throws unsupported_label for contradictory branches.
ElasticityTensor branch_probe(const std::string& label, std::uint64_t seed = 0);

/// True iff `trace` covers `label`; the top-level labels I, II, III appear
/// in traces as "Case I" etc.
bool branch_trace_matches(const std::vector<std::string>& trace, const std::string& label);

}  // namespace elastinv
