#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moufang/loop_table.hpp"

namespace moufang {

// Orders up to this limit get a dense n^3 associator table and exhaustive
// quadruple scans; above it, quadruple scans switch to stride sampling.
inline constexpr int kExhaustiveQuadrupleLimit = 243;
inline constexpr std::uint64_t kSampledTuples = 1'000'000;

inline constexpr std::array<std::array<int, 3>, 4> kDefaultExponentTriples{
    {{2, 1, 1}, {-1, 1, 1}, {2, 2, 2}, {3, 1, 1}}};

// The unique t with (ab)c = (a(bc))t.
int associator(const LoopTable& L, int a, int b, int c);

// Action of the inner mapping L(x,y) on z, via z(z,y,x).
int inner_apply(const LoopTable& L, int x, int y, int z);

// Associator lookups backed by a dense table for small orders.
class AssocCache {
 public:
  explicit AssocCache(const LoopTable& L);

  int operator()(int a, int b, int c) const {
    if (!dense_.empty()) {
      return dense_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
    }
    return slow(a, b, c);
  }

  int inner(int x, int y, int z) const {
    return L_.at(z, (*this)(z, y, x));
  }

  const LoopTable& table() const { return L_; }

 private:
  int slow(int a, int b, int c) const;

  const LoopTable& L_;
  std::size_t n_;
  std::vector<std::uint16_t> dense_;
};

struct AssociatorWitness {
  std::string identity;  // "1.2", "1.3", "1.4", "1.5", "lemma1.1"
  std::vector<int> tuple;
  int lhs = 0;
  int rhs = 0;
  std::optional<std::array<int, 3>> exponents;  // set for "1.3"
};

struct ScanCoverage {
  std::string identity;
  std::uint64_t checked = 0;
  std::uint64_t total = 0;
  std::uint64_t failures = 0;
  bool exhaustive = true;
};

// Witness lists are capped per identity; ScanCoverage::failures always
// carries the full count.
inline constexpr std::size_t kMaxWitnessesPerIdentity = 100;

struct IdentityScanResult {
  std::vector<AssociatorWitness> witnesses;
  std::vector<ScanCoverage> coverage;

  bool passed() const;
  std::uint64_t failure_count(const std::string& identity) const;
};

// Exhaustive check of (1.2) and (1.4) over n^3 triples, (1.3) over n^3 per
// exponent triple, and (1.5) over n^4 quadruples (sampled above the limit).
IdentityScanResult check_identities(
    const LoopTable& L,
    const std::vector<std::array<int, 3>>& exponents = {
        kDefaultExponentTriples.begin(), kDefaultExponentTriples.end()});

// L(x,y)(uv) = (L(x,y)u)(L(x,y)v) over n^4 quadruples (sampled above the
// limit).
IdentityScanResult check_inner_automorphism(const LoopTable& L);

}  // namespace moufang
