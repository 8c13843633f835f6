#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moufang/associator.hpp"
#include "moufang/loop_table.hpp"

namespace moufang {

// Default cap for full subloop-lattice enumeration.
inline constexpr int kDefaultEnumerationBound = 243;

// Subset of a parent table's element indices, as a bitset.
class SubloopMask {
 public:
  SubloopMask() = default;
  explicit SubloopMask(int parent_order);
  static SubloopMask from_indices(int parent_order,
                                  const std::vector<int>& indices);

  int parent_order() const { return parent_order_; }
  bool test(int i) const {
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int count() const;
  std::vector<int> indices() const;
  bool is_subset_of(const SubloopMask& other) const;

  const std::vector<std::uint64_t>& words() const { return bits_; }

  bool operator==(const SubloopMask& other) const {
    return parent_order_ == other.parent_order_ && bits_ == other.bits_;
  }
  // Orders masks by (popcount, bitset-as-integer); the enumeration output
  // order.
  bool lattice_less(const SubloopMask& other) const;

 private:
  int parent_order_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SubloopMaskHash {
  std::size_t operator()(const SubloopMask& m) const;
};

struct CosetPartition {
  SubloopMask subloop;
  std::vector<int> representative_of;  // element -> minimal coset element
  bool is_partition = false;
  // Two elements of a common coset family whose representatives disagree.
  std::optional<std::array<int, 2>> failure;
  int coset_count = 0;
};

struct QuotientResult {
  LoopTable table;
  std::vector<int> projection;  // element -> coset index in the quotient
};

struct Lemma16Witness {
  int a = 0;
  int b = 0;
  bool coset_equal = false;
  bool mapping_equal = false;
  // Pair from M breaking the mapping side, when mapping_equal is false.
  std::optional<std::array<int, 2>> pair;
};

// Least subloop containing gens, by worklist closure under product and
// inverse.
SubloopMask generated_subloop(const LoopTable& L, const std::vector<int>& gens);

// Complete subloop list, by extend-by-one BFS with dedup; sorted by
// (size, bits). Refuses orders above the bound.
std::vector<SubloopMask> all_subloops(const LoopTable& L,
                                      int bound = kDefaultEnumerationBound);

bool is_valid_subloop(const LoopTable& L, const SubloopMask& H);
bool is_associative_subloop(const LoopTable& L, const SubloopMask& H);

// H is stable under every inner mapping L(x,y) of the parent. The AssocCache
// overload lets callers amortize the associator table across many checks.
bool is_normal(const LoopTable& L, const SubloopMask& H);
bool is_normal(const AssocCache& A, const SubloopMask& H);

SubloopMask centre(const LoopTable& L);

// {x in H : (x,u,v) = 0 for all u,v in M}; validated to be a subloop.
SubloopMask centralizer(const LoopTable& L, const SubloopMask& H,
                        const SubloopMask& M);

// xH family with minimal-index representatives. For non-normal H the family
// may fail to partition; that outcome is recorded, not asserted away.
CosetPartition cosets(const LoopTable& L, const SubloopMask& H);

// Requires is_normal(L, N).
QuotientResult quotient(const LoopTable& L, const SubloopMask& N);

// Componentwise product on pairs (a,b) -> a*|B|+b.
LoopTable direct_product(const LoopTable& A, const LoopTable& B);

// Maximal p-subloops, keyed by prime; asserts the direct-decomposition
// properties and central placement for p != 3.
std::map<int, SubloopMask> p_components(const LoopTable& L);

// Coset criterion: aZ_H(M) = bZ_H(M) iff L(a,b)(a,u,v) = (b,u,v) for all
// u,v in M. Returns biconditional failures; requires M normal in H.
std::vector<Lemma16Witness> lemma_1_6_check(const LoopTable& L,
                                            const SubloopMask& H,
                                            const SubloopMask& M);

// Reindexed copy of the subloop as its own table (element 0 stays first).
LoopTable subtable(const LoopTable& L, const SubloopMask& H,
                   const std::string& name = "");

}  // namespace moufang
