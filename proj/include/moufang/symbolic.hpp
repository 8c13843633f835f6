#pragma once

#include <string>

#include "moufang/loop_table.hpp"
#include "moufang/subloops.hpp"

namespace moufang {

// D x K with D a direct product of d quasicyclic 3-groups in the centre and
// K a finite CML: the minimum-condition normal form. The quasicyclic part is
// counted, never materialized.
struct SymbolicCML {
  int d = 0;
  LoopTable K;

  SymbolicCML(int d_count, LoopTable k);
};

struct ReasonedVerdict {
  bool holds = false;
  std::string reason;
};

// Verdicts that need subloop enumeration of K become unavailable when K
// exceeds the bound.
struct BoundedVerdict {
  bool available = false;
  bool holds = false;
  std::string reason;
};

struct ClassificationReport {
  bool min_condition = true;  // the representation is the normal form
  bool infinite = false;      // d >= 1
  BoundedVerdict prop_2_17;
  BoundedVerdict cor_2_7;
  int cor_2_7_class = 0;  // solvability class of K, the instantiated n
  ReasonedVerdict cor_2_11_steady;
  int nilpotency_class_value = 0;
  int solvability_class_value = 0;
};

ClassificationReport classify(const SymbolicCML& S,
                              int bound = kDefaultEnumerationBound);

// Size d of the maximal divisible subloop's quasicyclic decomposition.
int divisible_part(const SymbolicCML& S);

}  // namespace moufang
