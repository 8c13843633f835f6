#include "moufang/symbolic.hpp"

#include "moufang/errors.hpp"
#include "moufang/series.hpp"

namespace moufang {
namespace {

SubloopMask full_mask(const LoopTable& L) {
  SubloopMask m(L.order());
  for (int i = 0; i < L.order(); ++i) {
    m.set(i);
  }
  return m;
}

}  // namespace

SymbolicCML::SymbolicCML(int d_count, LoopTable k) : d(d_count), K(std::move(k)) {
  if (d < 0) {
    throw InputError("quasicyclic factor count must be nonnegative");
  }
  if (!K.verification()) {
    K.attach_verification(verify_cml(K));
  }
  if (!K.verified_cml()) {
    throw PreconditionError("finite part is not a commutative Moufang loop");
  }
}

ClassificationReport classify(const SymbolicCML& S, int bound) {
  ClassificationReport r;
  r.min_condition = true;
  r.infinite = S.d >= 1;

  // Central direct factors contribute no associators, so both classes of the
  // whole loop equal the classes of the finite part.
  r.nilpotency_class_value = nilpotency_class(S.K);
  r.solvability_class_value = solvability_class(S.K);
  r.cor_2_7_class = r.solvability_class_value;

  const std::string over_bound =
      "finite part order " + std::to_string(S.K.order()) +
      " exceeds enumeration bound " + std::to_string(bound);

  // One quasicyclic factor, non-associative finite part, and every proper
  // subloop of the finite part associative. The factor-count and
  // associativity legs need no enumeration, so they stay decidable past the
  // bound.
  if (S.d == 0) {
    r.prop_2_17 = {true, false, "no quasicyclic factor"};
  } else if (S.d > 1) {
    r.prop_2_17 = {true, false, "more than one quasicyclic factor"};
  } else if (is_associative_subloop(S.K, full_mask(S.K))) {
    r.prop_2_17 = {true, false, "finite part is associative"};
  } else {
    try {
      bool all_proper_assoc = true;
      for (const SubloopMask& H : all_subloops(S.K, bound)) {
        if (H.count() == S.K.order()) {
          continue;
        }
        if (!is_associative_subloop(S.K, H)) {
          all_proper_assoc = false;
          break;
        }
      }
      if (all_proper_assoc) {
        r.prop_2_17 = {true, true,
                       "one quasicyclic factor; finite part non-associative "
                       "with every proper subloop associative"};
      } else {
        r.prop_2_17 = {true, false,
                       "finite part has a non-associative proper subloop"};
      }
    } catch (const BoundExceededError&) {
      r.prop_2_17 = {false, false, over_bound};
    }
  }

  // Quasicyclic factors present and the finite part minimal among loops of
  // its solvability class.
  if (S.d == 0) {
    r.cor_2_7 = {true, false, "no quasicyclic factor"};
  } else {
    try {
      const ClassPredicateResult minimal = is_minimal_of_class(
          S.K, ClassKind::solvable, r.cor_2_7_class, bound);
      if (minimal.holds()) {
        r.cor_2_7 = {true, true,
                     "quasicyclic factors present; finite part is minimal of "
                     "solvability class " + std::to_string(r.cor_2_7_class)};
      } else {
        r.cor_2_7 = {true, false,
                     "finite part is not minimal of solvability class " +
                         std::to_string(r.cor_2_7_class)};
      }
    } catch (const BoundExceededError&) {
      r.cor_2_7 = {false, false, over_bound};
    }
  }

  if (S.d == 0) {
    r.cor_2_11_steady = {true, "no divisible subloop beyond the identity"};
  } else {
    r.cor_2_11_steady = {false, "contains a quasicyclic subgroup"};
  }

  return r;
}

int divisible_part(const SymbolicCML& S) { return S.d; }

}  // namespace moufang
