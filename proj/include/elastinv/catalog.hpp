// catalog.hpp
// Invariant descriptors, the 251-entry functional-basis catalog, and the
// raw closure of the 8 trace types over the 11 intermediate tensors.

#pragma once

#include "elastinv/core.hpp"
#include "elastinv/intermediates.hpp"

#include <array>
#include <string>
#include <vector>

namespace elastinv {

/// Intermediate-tensor ids, in IntermediateSet::ordered() order.
enum class Tens : int { D1 = 0, D2, B, C, D, F, G, H, K, M, N };

/// Scalar invariant ids.
enum class Scal : int { Lambda = 0, Mu, J2, J3, J4, J5, J6, J7, J8, J9, J10 };

struct WordFactor {
  Tens t;
  int pow;  // 1..3
};

/// One catalog entry: either a scalar (lambda, mu, J_d) or a trace word over
/// the intermediate tensors. `degree` is the polynomial degree of the value
/// in the components of E (the sum of factor degrees); `table_degree` is the
/// catalog section the entry is listed under. They differ only for the
/// duplicate-suspect entry "tr B H K" in the degree-10 section, whose factor
/// degrees sum to 8 and which repeats a degree-8 entry verbatim; it is kept,
/// flagged, to preserve the catalog count.
struct InvariantDescriptor {
  std::string name;
  bool is_scalar = false;
  Scal scalar = Scal::Lambda;
  std::vector<WordFactor> word;
  int degree = 0;
  int table_degree = 0;
  bool duplicate_suspect = false;
};

/// The full catalog, table order (degree-major). Size 251, per-degree
/// section sizes (2,4,10,16,29,46,54,49,29,10,2).
const std::vector<InvariantDescriptor>& catalog251();

/// Per-table-degree section sizes, index 0 = degree 1.
std::array<int, 11> catalog_counts();

double evaluate_descriptor(const InvariantDescriptor& d, const IntermediateSet& t,
                           double lambda, double mu, const JInvariants& j);

struct ZhengClosure {
  std::vector<std::pair<InvariantDescriptor, double>> items;
  int trace_count = 0;       // instances of the 8 trace types
  int scalar_count = 0;
  int cyclic_distinct = 0;   // trace words distinct up to cyclic equivalence
  int total() const { return trace_count + scalar_count; }
};

/// Every instance of the 8 isotropic trace types over exactly 11 tensors
///   tr Ti, tr Ti^2, tr Ti^3, tr Ti Tj (i<j), tr Ti^2 Tj (i != j),
///   tr Ti Tj^2 (i != j), tr Ti^2 Tj^2 (i<j), tr Ti Tj Tk (i<j<k)
/// plus the 11 scalars passed through. For N = 11 this emits
/// 33 + 55 + 110 + 110 + 55 + 165 = 528 trace instances; the two ordered-pair
/// families coincide under cyclic equivalence, so 429 of the 539 candidates
/// are distinct. Throws std::invalid_argument unless exactly 11 + 11 inputs.
ZhengClosure zheng_closure(const std::vector<Sym2>& tensors, const std::vector<double>& scalars);

}  // namespace elastinv
