// relations.hpp
// Exact-rational search for polynomial relations: is a target invariant a
// linear combination of degree-matched joint monomials of the others? The
// target of degree d sits on the right-hand side b; the joints (products of
// lower-degree catalog invariants with degrees summing to d, plus the other
// degree-d entries) form the columns of A; both are evaluated exactly at
// m >= n rational sample points and Ax = b is solved over Q. A solution is a
// relation with exact coefficients, re-verified at 10 fresh points; no
// solution reports the achieved column rank, which is evidence (not proof)
// of independence.

#pragma once

#include "elastinv/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace elastinv {

/// Product of catalog invariants, stored as sorted catalog indices.
struct Monomial {
  std::vector<int> factors;
  int degree = 0;
  std::string name;
};

struct RelationReport {
  std::string target;
  int degree = 0;
  bool relation_found = false;
  std::vector<std::pair<Monomial, Rat>> coefficients;  // nonzero terms only
  int rank = 0;
  int samples = 0;
  int num_joints = 0;
  bool truncated = false;  // joint list hit the cap
  int verified_points = 0;
};

/// A target is anything evaluatable at a rational sample point; catalog
/// entries and the raw traces (tr B, tr F, ...) both qualify.
struct Target {
  std::string name;
  int degree = 0;
  std::function<Rat(const RatInters&)> eval;
};

Target target_from_catalog(int catalog_index);
Target target_trace(Tens t);  // tr T, degree = deg(T)

/// All joint monomials for a target of degree `target_degree`: products of
/// catalog entries of degree in [2, target_degree-1] with degrees summing to
/// target_degree, plus the catalog entries of degree exactly target_degree
/// other than `exclude_index` (pass -1 to keep them all). Deduplicated by
/// commutativity; capped at max_joints (0 = no cap) with truncation flagged
/// via the return size == cap.
std::vector<Monomial> build_joints(int target_degree, int exclude_index = -1,
                                   std::size_t max_joints = 0);

/// Throws std::invalid_argument when num_samples < number of joints.
RelationReport find_relation(const Target& target, int num_samples, std::uint64_t seed = 0,
                             std::size_t max_joints = 0);
RelationReport find_relation(int catalog_index, int num_samples, std::uint64_t seed = 0,
                             std::size_t max_joints = 0);

/// find_relation for every catalog entry whose table degree is d. Joints are
/// built from the entry's true polynomial degree, which is what exposes the
/// duplicate-suspect degree-10 entry as a relation against its degree-8 twin.
std::vector<RelationReport> certify_table1_degree(int d, int num_samples, std::uint64_t seed = 0,
                                                  std::size_t max_joints = 0);

/// Sample-matrix evaluation (rows = samples, columns = joints then target).
/// The OpenMP kernel parallelizes across samples; the serial reference is
/// kept for testing. Results are exact, so the two must agree exactly.
std::vector<std::vector<Rat>> evaluate_samples_serial(const Target& target,
                                                      const std::vector<Monomial>& joints,
                                                      int num_samples, std::uint64_t seed);
std::vector<std::vector<Rat>> evaluate_samples(const Target& target,
                                               const std::vector<Monomial>& joints,
                                               int num_samples, std::uint64_t seed);

}  // namespace elastinv
