#include "moufang/series.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "moufang/associator.hpp"
#include "moufang/errors.hpp"

namespace moufang {
namespace {

SubloopMask full_mask(const LoopTable& L) {
  SubloopMask m(L.order());
  for (int i = 0; i < L.order(); ++i) {
    m.set(i);
  }
  return m;
}

SubloopMask trivial_mask(const LoopTable& L) {
  SubloopMask m(L.order());
  m.set(0);
  return m;
}

// <(g,x,y) : g in gens_from, x,y in over>
SubloopMask assoc_span(const LoopTable& L, const AssocCache& A,
                       const std::vector<int>& gens_from,
                       const std::vector<int>& over) {
  std::set<int> values;
  values.insert(0);
  for (int g : gens_from) {
    for (int x : over) {
      for (int y : over) {
        values.insert(A(g, x, y));
      }
    }
  }
  return generated_subloop(L, {values.begin(), values.end()});
}

void assert_chain_normal(const AssocCache& A, const SubloopMask& m) {
  if (!is_normal(A, m)) {
    throw InternalError("series term is not normal in the parent loop");
  }
}

SeriesReport descending_series(const LoopTable& L, SeriesKind kind) {
  require_cml(L);
  const AssocCache A(L);
  SeriesReport r;
  r.kind = kind;
  SubloopMask cur = full_mask(L);
  r.chain.push_back(cur);
  if (cur.count() == 1) {
    r.class_value = 0;
    return r;
  }
  const std::vector<int> everyone = cur.indices();
  for (int step = 0; step <= L.order(); ++step) {
    const std::vector<int> cur_elems = r.chain.back().indices();
    const SubloopMask next =
        kind == SeriesKind::lower_central
            ? assoc_span(L, A, cur_elems, everyone)
            : assoc_span(L, A, cur_elems, cur_elems);
    assert_chain_normal(A, next);
    if (next == r.chain.back()) {
      r.class_value = std::nullopt;  // stabilized above the identity
      return r;
    }
    r.chain.push_back(next);
    if (next.count() == 1) {
      r.class_value = static_cast<int>(r.chain.size()) - 1;
      return r;
    }
  }
  throw InternalError("series did not stabilize");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::uint64_t sample_stride(std::uint64_t space) {
  auto stride =
      static_cast<std::uint64_t>(0.6180339887498949 * static_cast<double>(space));
  if (stride < 2) {
    stride = 1;
  }
  while (std::gcd(stride, space) != 1) {
    --stride;
  }
  return stride;
}

// Nilpotency classes of subloops, memoized by mask.
class SubloopClassCache {
 public:
  explicit SubloopClassCache(const LoopTable& L) : L_(L) {}

  int nilpotency(const SubloopMask& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) {
      return it->second;
    }
    LoopTable sub = subtable(L_, m);
    sub.attach_verification(verify_cml(sub));
    const int value = nilpotency_class(sub);
    memo_.emplace(m, value);
    return value;
  }

 private:
  const LoopTable& L_;
  std::unordered_map<SubloopMask, int, SubloopMaskHash> memo_;
};

}  // namespace

const char* to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::lower_central:
      return "lower_central";
    case SeriesKind::derived:
      return "derived";
    case SeriesKind::upper_central:
      return "upper_central";
  }
  return "unknown";
}

const char* to_string(PredicateStatus status) {
  switch (status) {
    case PredicateStatus::holds:
      return "holds";
    case PredicateStatus::fails:
      return "fails";
    case PredicateStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

SeriesReport lower_central_series(const LoopTable& L) {
  return descending_series(L, SeriesKind::lower_central);
}

SeriesReport derived_series(const LoopTable& L) {
  return descending_series(L, SeriesKind::derived);
}

SeriesReport upper_central_series(const LoopTable& L) {
  require_cml(L);
  const AssocCache A(L);
  SeriesReport r;
  r.kind = SeriesKind::upper_central;
  SubloopMask cur = trivial_mask(L);
  r.chain.push_back(cur);
  const int n = L.order();
  if (n == 1) {
    r.class_value = 0;
    return r;
  }
  for (int step = 0; step <= n; ++step) {
    const QuotientResult q = quotient(L, cur);
    const SubloopMask zq = centre(q.table);
    SubloopMask next(n);
    for (int x = 0; x < n; ++x) {
      if (zq.test(q.projection[x])) {
        next.set(x);
      }
    }
    assert_chain_normal(A, next);
    if (next == cur) {
      r.class_value = std::nullopt;  // stabilized below the whole loop
      return r;
    }
    r.chain.push_back(next);
    if (next.count() == n) {
      r.class_value = static_cast<int>(r.chain.size()) - 1;
      return r;
    }
    cur = next;
  }
  throw InternalError("series did not stabilize");
}

int nilpotency_class(const LoopTable& L) {
  const SeriesReport r = lower_central_series(L);
  if (!r.class_value) {
    throw TheoremViolationError(
        "lower central series did not reach the identity on a CML");
  }
  return *r.class_value;
}

int solvability_class(const LoopTable& L) {
  const SeriesReport r = derived_series(L);
  if (!r.class_value) {
    throw TheoremViolationError(
        "derived series did not reach the identity on a CML");
  }
  return *r.class_value;
}

ClassPredicateResult bruck_slaby_check(const LoopTable& L, int n) {
  require_cml(L);
  if (n < 3) {
    throw InputError("bruck_slaby_check requires n >= 3");
  }
  const int N = L.order();
  ClassPredicateResult out;
  out.total = binomial(N, n);
  if (out.total == 0) {
    out.note = "fewer than n elements; nothing to check";
    out.checked = 0;
    return out;
  }
  SubloopClassCache classes(L);

  auto check_tuple = [&](const std::vector<int>& tuple) -> bool {
    const SubloopMask m = generated_subloop(L, tuple);
    ++out.checked;
    if (classes.nilpotency(m) > n - 1) {
      out.status = PredicateStatus::fails;
      out.witness = PredicateWitness{tuple, m, "generated subloop has class > n-1"};
      return false;
    }
    return true;
  };

  if (out.total <= kExhaustiveTupleLimit) {
    out.exhaustive = true;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) {
      idx[i] = i;
    }
    while (true) {
      if (!check_tuple(idx)) {
        return out;
      }
      int i = n - 1;
      while (i >= 0 && idx[i] == N - n + i) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++idx[i];
      for (int j = i + 1; j < n; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  } else {
    out.exhaustive = false;
    std::uint64_t space = 1;
    for (int i = 0; i < n; ++i) {
      space *= static_cast<std::uint64_t>(N);
    }
    const std::uint64_t stride = sample_stride(space);
    std::uint64_t cursor = 0;
    std::vector<int> tuple(n);
    std::uint64_t drawn = 0;
    const std::uint64_t max_draws = kSampledTuples * 64;
    while (out.checked < kSampledTuples && drawn < max_draws) {
      cursor = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(cursor) + stride) % space);
      ++drawn;
      std::uint64_t v = cursor;
      bool increasing = true;
      for (int i = n - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(v % N);
        v /= N;
      }
      for (int i = 1; i < n; ++i) {
        if (tuple[i] <= tuple[i - 1]) {
          increasing = false;
          break;
        }
      }
      if (!increasing) {
        continue;
      }
      if (!check_tuple(tuple)) {
        return out;
      }
    }
  }
  return out;
}

ClassPredicateResult lemma_1_7_check(const LoopTable& L) {
  require_cml(L);
  ClassPredicateResult out;
  const SubloopMask Z = centre(L);
  out.total = static_cast<std::uint64_t>(L.order()) + 1;
  for (int x = 0; x < L.order(); ++x) {
    ++out.checked;
    if (!Z.test(pow(L, x, 3))) {
      out.status = PredicateStatus::fails;
      out.witness = PredicateWitness{{x}, std::nullopt, "x^3 is not central"};
      return out;
    }
  }
  const QuotientResult q = quotient(L, Z);
  ++out.checked;
  const int e = exponent(q.table);
  if (e != 1 && e != 3) {
    out.status = PredicateStatus::fails;
    out.witness = PredicateWitness{
        {}, std::nullopt,
        "central quotient has exponent " + std::to_string(e)};
    return out;
  }
  out.note = "central quotient has exponent " + std::to_string(e);
  return out;
}

ClassPredicateResult is_hamiltonian(const LoopTable& L, int bound) {
  const std::vector<SubloopMask> subs = all_subloops(L, bound);
  const AssocCache A(L);
  ClassPredicateResult out;
  out.total = subs.size();
  for (const SubloopMask& H : subs) {
    ++out.checked;
    if (!is_normal(A, H)) {
      out.status = PredicateStatus::fails;
      out.witness =
          PredicateWitness{{}, H, "first non-normal subloop in lattice order"};
      return out;
    }
  }
  return out;
}

ClassPredicateResult is_minimal_of_class(const LoopTable& L, ClassKind kind,
                                         int n, int bound) {
  require_cml(L);
  const int own =
      kind == ClassKind::nilpotent ? nilpotency_class(L) : solvability_class(L);
  if (own != n) {
    throw PreconditionError("loop has class " + std::to_string(own) +
                            ", not " + std::to_string(n));
  }
  const std::vector<SubloopMask> subs = all_subloops(L, bound);
  ClassPredicateResult out;
  out.total = subs.size();
  std::unordered_map<SubloopMask, int, SubloopMaskHash> memo;
  for (const SubloopMask& H : subs) {
    if (H.count() == L.order()) {
      continue;
    }
    ++out.checked;
    auto it = memo.find(H);
    int cls;
    if (it != memo.end()) {
      cls = it->second;
    } else {
      LoopTable sub = subtable(L, H);
      sub.attach_verification(verify_cml(sub));
      cls = kind == ClassKind::nilpotent ? nilpotency_class(sub)
                                         : solvability_class(sub);
      memo.emplace(H, cls);
    }
    if (cls >= n) {
      out.status = PredicateStatus::fails;
      out.witness = PredicateWitness{
          {}, H, "proper subloop of class " + std::to_string(cls)};
      return out;
    }
  }
  return out;
}

ClassPredicateResult lemma_3_1_check(const LoopTable& L) {
  require_cml(L);
  const SubloopMask Z = centre(L);
  const AssocCache A(L);
  ClassPredicateResult out;
  for (int a = 0; a < L.order(); ++a) {
    if (element_order(L, a) != 3 || Z.test(a)) {
      continue;
    }
    ++out.checked;
    ++out.total;
    const SubloopMask H = generated_subloop(L, {a});
    if (is_normal(A, H)) {
      out.status = PredicateStatus::fails;
      out.witness = PredicateWitness{
          {a}, H, "non-central order-3 element generating a normal subloop"};
      return out;
    }
  }
  return out;
}

ClassPredicateResult all_nonassoc_subloops_normal(const LoopTable& L,
                                                  int bound) {
  const std::vector<SubloopMask> subs = all_subloops(L, bound);
  const AssocCache A(L);
  ClassPredicateResult out;
  std::uint64_t nonassoc = 0;
  for (const SubloopMask& H : subs) {
    if (is_associative_subloop(L, H)) {
      continue;
    }
    ++nonassoc;
    ++out.checked;
    if (!is_normal(A, H)) {
      out.status = PredicateStatus::fails;
      out.witness = PredicateWitness{{}, H, "non-associative non-normal subloop"};
      return out;
    }
  }
  out.total = nonassoc;
  out.note = std::to_string(nonassoc) + " non-associative subloops of " +
             std::to_string(subs.size());
  return out;
}

ClassPredicateResult corollary_4_5_check(const LoopTable& L, int bound) {
  require_cml(L);
  ClassPredicateResult out;
  ClassPredicateResult hypothesis;
  try {
    hypothesis = all_nonassoc_subloops_normal(L, bound);
  } catch (const BoundExceededError& e) {
    out.status = PredicateStatus::skipped;
    out.note = e.what();
    return out;
  }
  if (!hypothesis.holds()) {
    out.status = PredicateStatus::skipped;
    out.note = "hypothesis fails: not every non-associative subloop is normal";
    out.witness = hypothesis.witness;
    return out;
  }
  const SeriesReport derived = derived_series(L);
  const SubloopMask& associator_subloop =
      derived.chain.size() > 1 ? derived.chain[1] : derived.chain[0];
  LoopTable sub = subtable(L, associator_subloop, "associator-subloop");
  sub.attach_verification(verify_cml(sub));
  const int qprime_class = nilpotency_class(sub);
  const int s = solvability_class(L);
  out.checked = 2;
  out.total = 2;
  out.note = "associator subloop nilpotency class " +
             std::to_string(qprime_class) + "; solvability class " +
             std::to_string(s);
  if (s > 3) {
    out.status = PredicateStatus::fails;
    out.witness = PredicateWitness{
        {}, std::nullopt, "solvability class " + std::to_string(s) + " > 3"};
  }
  return out;
}

std::vector<int> nested_associator_values(const LoopTable& L, int depth) {
  require_cml(L);
  if (depth < 1) {
    throw InputError("depth must be >= 1");
  }
  const AssocCache A(L);
  std::set<int> vals;
  const int n = L.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        vals.insert(A(a, b, c));
      }
    }
  }
  for (int level = 1; level < depth; ++level) {
    std::set<int> next;
    for (int a : vals) {
      for (int b : vals) {
        for (int c : vals) {
          next.insert(A(a, b, c));
        }
      }
    }
    vals = std::move(next);
  }
  return {vals.begin(), vals.end()};
}

}  // namespace moufang
