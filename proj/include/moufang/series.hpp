#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moufang/subloops.hpp"

namespace moufang {

// Bruck-Slaby scans are exhaustive while C(order, n) stays below this.
inline constexpr std::uint64_t kExhaustiveTupleLimit = 3'000'000;

enum class SeriesKind { lower_central, derived, upper_central };

struct SeriesReport {
  SeriesKind kind = SeriesKind::lower_central;
  std::vector<SubloopMask> chain;
  // Empty when the chain stabilizes away from the expected endpoint.
  std::optional<int> class_value;
};

enum class PredicateStatus { holds, fails, skipped };

struct PredicateWitness {
  std::vector<int> elements;
  std::optional<SubloopMask> subloop;
  std::string detail;
};

struct ClassPredicateResult {
  PredicateStatus status = PredicateStatus::holds;
  std::optional<PredicateWitness> witness;
  std::string note;
  std::uint64_t checked = 0;
  std::uint64_t total = 0;
  bool exhaustive = true;

  bool holds() const { return status == PredicateStatus::holds; }
};

enum class ClassKind { nilpotent, solvable };

// Gamma_1 = Q, Gamma_{i+1} = <(g,x,y) : g in Gamma_i, x,y in Q>.
SeriesReport lower_central_series(const LoopTable& L);

// D_0 = Q, D_{i+1} = <(a,b,c) : a,b,c in D_i>.
SeriesReport derived_series(const LoopTable& L);

// Z_0 = {0}, Z_{i+1} = preimage of centre(Q / Z_i).
SeriesReport upper_central_series(const LoopTable& L);

int nilpotency_class(const LoopTable& L);
int solvability_class(const LoopTable& L);

// Every n-subset generates a subloop of nilpotency class <= n-1; exhaustive
// while C(order, n) is small, stride-sampled otherwise.
ClassPredicateResult bruck_slaby_check(const LoopTable& L, int n);

// x^3 central for every x, and the central quotient has exponent dividing 3.
ClassPredicateResult lemma_1_7_check(const LoopTable& L);

// Every subloop normal; witness is the first non-normal subloop.
ClassPredicateResult is_hamiltonian(const LoopTable& L,
                                    int bound = kDefaultEnumerationBound);

// Every proper subloop has class < n; requires class(L) == n.
ClassPredicateResult is_minimal_of_class(const LoopTable& L, ClassKind kind,
                                         int n,
                                         int bound = kDefaultEnumerationBound);

// Order-3 elements generating normal subloops are central.
ClassPredicateResult lemma_3_1_check(const LoopTable& L);

ClassPredicateResult all_nonassoc_subloops_normal(
    const LoopTable& L, int bound = kDefaultEnumerationBound);

// Under the all-nonassociative-subloops-normal hypothesis: the associator
// subloop is nilpotent and the loop is solvable of class <= 3. Skipped when
// the hypothesis fails or the enumeration bound is exceeded.
ClassPredicateResult corollary_4_5_check(const LoopTable& L,
                                         int bound = kDefaultEnumerationBound);

// Depth-i nested associator value set: V_1 = associator values over Q^3,
// V_{i+1} = associator values over V_i^3. The closure of V_i equals the i-th
// derived term; asserted in tests.
std::vector<int> nested_associator_values(const LoopTable& L, int depth);

const char* to_string(SeriesKind kind);
const char* to_string(PredicateStatus status);

}  // namespace moufang
