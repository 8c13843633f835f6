#include "moufang/subloops.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "moufang/associator.hpp"
#include "moufang/errors.hpp"

namespace moufang {
namespace {

void check_index(const LoopTable& L, int a) {
  if (a < 0 || a >= L.order()) {
    throw InputError("element index out of range");
  }
}

void check_mask(const LoopTable& L, const SubloopMask& m) {
  if (m.parent_order() != L.order()) {
    throw InputError("mask parent order does not match the table");
  }
}

// Worklist closure with the processed-prefix invariant: once position p is
// processed, all products among elems[0..p] are present. Valid for
// commutative tables.
struct Closure {
  explicit Closure(const LoopTable& L)
      : L_(L), in(L.order(), 0) {
    elems.reserve(L.order());
  }

  void add(int v) {
    if (!in[v]) {
      in[v] = 1;
      elems.push_back(v);
    }
  }

  void run_from(std::size_t start) {
    for (std::size_t p = start; p < elems.size(); ++p) {
      const int x = elems[p];
      add(L_.inverse_of(x));
      const std::uint16_t* row = L_.row(x);
      for (std::size_t q = 0; q <= p; ++q) {
        add(row[elems[q]]);
      }
    }
  }

  const LoopTable& L_;
  std::vector<std::uint8_t> in;
  std::vector<int> elems;  // insertion order; closed once run_from returns
};

std::vector<int> closed_elements(const LoopTable& L,
                                 const std::vector<int>& gens) {
  Closure c(L);
  c.add(0);
  for (int g : gens) {
    c.add(g);
  }
  c.run_from(0);
  return std::move(c.elems);
}

// Closure of an already-closed element list extended by one element.
std::vector<int> extend_closed(const LoopTable& L, const std::vector<int>& base,
                               int x) {
  Closure c(L);
  for (int v : base) {
    c.add(v);
  }
  const std::size_t start = c.elems.size();
  c.add(x);
  c.run_from(start);
  return std::move(c.elems);
}

SubloopMask mask_of(int order, const std::vector<int>& elems) {
  SubloopMask m(order);
  for (int v : elems) {
    m.set(v);
  }
  return m;
}

}  // namespace

SubloopMask::SubloopMask(int parent_order)
    : parent_order_(parent_order), bits_((parent_order + 63) / 64, 0) {}

SubloopMask SubloopMask::from_indices(int parent_order,
                                      const std::vector<int>& indices) {
  SubloopMask m(parent_order);
  for (int i : indices) {
    if (i < 0 || i >= parent_order) {
      throw InputError("mask index out of range");
    }
    m.set(i);
  }
  return m;
}

int SubloopMask::count() const {
  int total = 0;
  for (std::uint64_t w : bits_) {
    total += __builtin_popcountll(w);
  }
  return total;
}

std::vector<int> SubloopMask::indices() const {
  std::vector<int> out;
  out.reserve(count());
  for (int i = 0; i < parent_order_; ++i) {
    if (test(i)) {
      out.push_back(i);
    }
  }
  return out;
}

bool SubloopMask::is_subset_of(const SubloopMask& other) const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) {
      return false;
    }
  }
  return true;
}

bool SubloopMask::lattice_less(const SubloopMask& other) const {
  const int ca = count();
  const int cb = other.count();
  if (ca != cb) {
    return ca < cb;
  }
  for (std::size_t w = bits_.size(); w-- > 0;) {
    if (bits_[w] != other.bits_[w]) {
      return bits_[w] < other.bits_[w];
    }
  }
  return false;
}

std::size_t SubloopMaskHash::operator()(const SubloopMask& m) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t w : m.words()) {
    h = (h ^ w) * 1099511628211ull;
  }
  return h;
}

SubloopMask generated_subloop(const LoopTable& L, const std::vector<int>& gens) {
  require_cml(L);
  for (int g : gens) {
    check_index(L, g);
  }
  return mask_of(L.order(), closed_elements(L, gens));
}

std::vector<SubloopMask> all_subloops(const LoopTable& L, int bound) {
  require_cml(L);
  if (L.order() > bound) {
    throw BoundExceededError("subloop enumeration refused: order " +
                             std::to_string(L.order()) + " exceeds bound " +
                             std::to_string(bound));
  }
  const int n = L.order();
  std::vector<std::vector<int>> members;  // closed element lists
  std::unordered_set<SubloopMask, SubloopMaskHash> seen;
  std::queue<std::size_t> frontier;

  members.push_back(closed_elements(L, {}));
  seen.insert(mask_of(n, members[0]));
  frontier.push(0);

  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop();
    // members may reallocate while extending, so copy the base list.
    const std::vector<int> base = members[idx];
    std::vector<std::uint8_t> in(n, 0);
    for (int v : base) {
      in[v] = 1;
    }
    for (int x = 0; x < n; ++x) {
      if (in[x]) {
        continue;
      }
      std::vector<int> ext = extend_closed(L, base, x);
      SubloopMask m = mask_of(n, ext);
      if (seen.insert(m).second) {
        members.push_back(std::move(ext));
        frontier.push(members.size() - 1);
      }
    }
  }

  std::vector<SubloopMask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const SubloopMask& a, const SubloopMask& b) {
              return a.lattice_less(b);
            });
  return out;
}

bool is_valid_subloop(const LoopTable& L, const SubloopMask& H) {
  check_mask(L, H);
  if (!H.test(0)) {
    return false;
  }
  const std::vector<int> el = H.indices();
  for (int a : el) {
    if (!H.test(L.inverse_of(a))) {
      return false;
    }
    for (int b : el) {
      if (!H.test(L.at(a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_associative_subloop(const LoopTable& L, const SubloopMask& H) {
  check_mask(L, H);
  const std::vector<int> el = H.indices();
  for (int a : el) {
    for (int b : el) {
      const int ab = L.at(a, b);
      const std::uint16_t* row_ab = L.row(ab);
      const std::uint16_t* row_b = L.row(b);
      for (int c : el) {
        if (row_ab[c] != L.at(a, row_b[c])) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_normal(const AssocCache& A, const SubloopMask& H) {
  const LoopTable& L = A.table();
  check_mask(L, H);
  const int n = L.order();
  for (int h : H.indices()) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        if (!H.test(L.at(h, A(h, y, x)))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_normal(const LoopTable& L, const SubloopMask& H) {
  return is_normal(AssocCache(L), H);
}

SubloopMask centre(const LoopTable& L) {
  require_cml(L);
  const int n = L.order();
  SubloopMask m(n);
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y) {
      const int xy = L.at(x, y);
      const std::uint16_t* row_xy = L.row(xy);
      const std::uint16_t* row_y = L.row(y);
      for (int z = 0; z < n; ++z) {
        // (x,y,z) = 0 iff (xy)z = x(yz)
        if (row_xy[z] != L.at(x, row_y[z])) {
          central = false;
          break;
        }
      }
    }
    if (central) {
      m.set(x);
    }
  }
  return m;
}

SubloopMask centralizer(const LoopTable& L, const SubloopMask& H,
                        const SubloopMask& M) {
  check_mask(L, H);
  check_mask(L, M);
  require_divisible(L);
  const std::vector<int> mm = M.indices();
  SubloopMask out(L.order());
  const AssocCache A(L);
  for (int x : H.indices()) {
    bool ok = true;
    for (std::size_t i = 0; i < mm.size() && ok; ++i) {
      for (std::size_t j = 0; j < mm.size(); ++j) {
        if (A(x, mm[i], mm[j]) != 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      out.set(x);
    }
  }
  if (!is_valid_subloop(L, out)) {
    throw InternalError("centralizer is not closed; upstream bug");
  }
  return out;
}

CosetPartition cosets(const LoopTable& L, const SubloopMask& H) {
  check_mask(L, H);
  require_divisible(L);
  const int n = L.order();
  const std::vector<int> hs = H.indices();
  CosetPartition out;
  out.subloop = H;
  out.representative_of.resize(n);

  for (int a = 0; a < n; ++a) {
    int rep = n;
    for (int h : hs) {
      rep = std::min(rep, L.at(a, h));
    }
    out.representative_of[a] = rep;
  }
  out.is_partition = true;
  for (int a = 0; a < n && out.is_partition; ++a) {
    for (int h : hs) {
      const int b = L.at(a, h);
      if (out.representative_of[b] != out.representative_of[a]) {
        out.is_partition = false;
        out.failure = {{a, b}};
        break;
      }
    }
  }
  if (out.is_partition) {
    std::vector<std::uint8_t> seen(n, 0);
    int count = 0;
    for (int a = 0; a < n; ++a) {
      if (!seen[out.representative_of[a]]) {
        seen[out.representative_of[a]] = 1;
        ++count;
      }
    }
    out.coset_count = count;
  }
  return out;
}

QuotientResult quotient(const LoopTable& L, const SubloopMask& N) {
  require_cml(L);
  if (!is_normal(L, N)) {
    throw PreconditionError("quotient by a non-normal subloop");
  }
  CosetPartition part = cosets(L, N);
  if (!part.is_partition) {
    throw InternalError("cosets of a normal subloop failed to partition");
  }
  const int n = L.order();
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (part.representative_of[a] == a) {
      reps.push_back(a);
    }
  }
  std::vector<int> index_of(n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    index_of[reps[i]] = static_cast<int>(i);
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      rows[i][j] = index_of[part.representative_of[L.at(reps[i], reps[j])]];
    }
  }
  std::string qname = L.name().empty() ? "quotient" : L.name() + "/N";
  LoopTable Q(std::move(rows), qname);
  VerificationReport rep = verify_cml(Q);
  if (!rep.all_ok()) {
    throw InternalError("quotient by a normal subloop is not a CML");
  }
  Q.attach_verification(std::move(rep));

  QuotientResult result{std::move(Q), std::vector<int>(n)};
  for (int a = 0; a < n; ++a) {
    result.projection[a] = index_of[part.representative_of[a]];
  }
  return result;
}

LoopTable direct_product(const LoopTable& A, const LoopTable& B) {
  const long long n = static_cast<long long>(A.order()) * B.order();
  if (n > kMaxOrder) {
    throw BoundExceededError("product order " + std::to_string(n) +
                             " exceeds the maximum " +
                             std::to_string(kMaxOrder));
  }
  const int nb = B.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a1 = 0; a1 < A.order(); ++a1) {
    for (int b1 = 0; b1 < nb; ++b1) {
      const int i = a1 * nb + b1;
      for (int a2 = 0; a2 < A.order(); ++a2) {
        for (int b2 = 0; b2 < nb; ++b2) {
          rows[i][a2 * nb + b2] = A.at(a1, a2) * nb + B.at(b1, b2);
        }
      }
    }
  }
  std::string name = "product(" + (A.name().empty() ? "?" : A.name()) + "," +
                     (B.name().empty() ? "?" : B.name()) + ")";
  LoopTable P(std::move(rows), std::move(name));
  if (A.verified_cml() && B.verified_cml()) {
    VerificationReport rep = verify_cml(P);
    P.attach_verification(std::move(rep));
  }
  return P;
}

std::map<int, SubloopMask> p_components(const LoopTable& L) {
  require_cml(L);
  const int n = L.order();
  const int e = exponent(L);
  std::vector<int> primes;
  int rest = e;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) {
        rest /= p;
      }
    }
  }
  if (rest > 1) {
    primes.push_back(rest);
  }

  std::vector<int> orders(n);
  for (int a = 0; a < n; ++a) {
    orders[a] = element_order(L, a);
  }

  std::map<int, SubloopMask> out;
  for (int p : primes) {
    SubloopMask m(n);
    for (int a = 0; a < n; ++a) {
      int o = orders[a];
      while (o % p == 0) {
        o /= p;
      }
      if (o == 1) {
        m.set(a);
      }
    }
    if (!is_valid_subloop(L, m)) {
      throw TheoremViolationError("p-component for p=" + std::to_string(p) +
                                  " is not a subloop");
    }
    if (!is_normal(L, m)) {
      throw TheoremViolationError("p-component for p=" + std::to_string(p) +
                                  " is not normal");
    }
    out.emplace(p, std::move(m));
  }

  long long size_product = 1;
  std::vector<int> union_elems;
  SubloopMask zero_mask(n);
  zero_mask.set(0);
  const SubloopMask centre_mask = centre(L);
  for (const auto& [p, m] : out) {
    size_product *= m.count();
    const auto idx = m.indices();
    union_elems.insert(union_elems.end(), idx.begin(), idx.end());
    if (p != 3 && !m.is_subset_of(centre_mask)) {
      throw TheoremViolationError("p-component for p=" + std::to_string(p) +
                                  " is not central");
    }
  }
  for (const auto& [p, m] : out) {
    for (const auto& [q, mq] : out) {
      if (p >= q) {
        continue;
      }
      for (int a : m.indices()) {
        if (a != 0 && mq.test(a)) {
          throw TheoremViolationError(
              "p-components intersect beyond the identity");
        }
      }
    }
  }
  if (!out.empty()) {
    if (size_product != n ||
        static_cast<int>(closed_elements(L, union_elems).size()) != n) {
      throw TheoremViolationError(
          "p-components do not decompose the loop");
    }
  }
  return out;
}

std::vector<Lemma16Witness> lemma_1_6_check(const LoopTable& L,
                                            const SubloopMask& H,
                                            const SubloopMask& M) {
  check_mask(L, H);
  check_mask(L, M);
  require_cml(L);
  if (!M.is_subset_of(H)) {
    throw PreconditionError("M is not contained in H");
  }
  const std::vector<int> hs = H.indices();
  const std::vector<int> ms = M.indices();
  const AssocCache A(L);
  for (int m : ms) {
    for (int y : hs) {
      for (int x : hs) {
        if (!M.test(L.at(m, A(m, y, x)))) {
          throw PreconditionError("M is not normal in H");
        }
      }
    }
  }

  const SubloopMask Z = centralizer(L, H, M);
  const std::vector<int> zs = Z.indices();

  // Canonical id per coset aZ (set equality, no partition assumption).
  std::unordered_map<SubloopMask, int, SubloopMaskHash> coset_ids;
  std::vector<int> coset_of(L.order(), -1);
  for (int a : hs) {
    SubloopMask cm(L.order());
    for (int z : zs) {
      cm.set(L.at(a, z));
    }
    auto [it, inserted] =
        coset_ids.emplace(std::move(cm), static_cast<int>(coset_ids.size()));
    coset_of[a] = it->second;
  }

  std::vector<Lemma16Witness> out;
  for (int a : hs) {
    for (int b : hs) {
      const bool coset_equal = coset_of[a] == coset_of[b];
      bool mapping_equal = true;
      std::optional<std::array<int, 2>> pair;
      for (std::size_t i = 0; i < ms.size() && mapping_equal; ++i) {
        const int u = ms[i];
        for (std::size_t j = 0; j < ms.size(); ++j) {
          const int v = ms[j];
          const int t = A(a, u, v);
          // L(a,b)t = t(t,b,a)
          if (L.at(t, A(t, b, a)) != A(b, u, v)) {
            mapping_equal = false;
            pair = {{u, v}};
            break;
          }
        }
      }
      if (coset_equal != mapping_equal) {
        Lemma16Witness w;
        w.a = a;
        w.b = b;
        w.coset_equal = coset_equal;
        w.mapping_equal = mapping_equal;
        w.pair = pair;
        out.push_back(w);
      }
    }
  }
  return out;
}

LoopTable subtable(const LoopTable& L, const SubloopMask& H,
                   const std::string& name) {
  check_mask(L, H);
  if (!H.test(0)) {
    throw PreconditionError("subloop mask does not contain the identity");
  }
  const std::vector<int> el = H.indices();
  std::vector<int> index_of(L.order(), -1);
  for (std::size_t i = 0; i < el.size(); ++i) {
    index_of[el[i]] = static_cast<int>(i);
  }
  const int m = static_cast<int>(el.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int v = index_of[L.at(el[i], el[j])];
      if (v < 0) {
        throw PreconditionError("mask is not closed under the product");
      }
      rows[i][j] = v;
    }
  }
  return LoopTable(std::move(rows),
                   name.empty() ? L.name() + "-subloop" : name);
}

}  // namespace moufang
