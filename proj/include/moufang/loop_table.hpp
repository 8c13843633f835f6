#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace moufang {

// Largest supported loop order (3^7). Exhaustive n^3 scans stay desk-scale.
inline constexpr int kMaxOrder = 2187;

struct VerificationReport {
  bool latin_square = false;
  bool identity_ok = false;
  bool commutative = false;
  bool moufang = false;
  // Witness indices for the first failed flag, in the order the flags are
  // listed above. Latin failures record {row-or-col, i, j}, the others the
  // offending element tuple.
  std::optional<std::vector<int>> first_failure;

  bool all_ok() const {
    return latin_square && identity_ok && commutative && moufang;
  }
};

// A finite loop given by its Cayley table. Index 0 is the identity by
// convention; the table is immutable after construction.
class LoopTable {
 public:
  LoopTable(std::vector<std::vector<int>> rows, std::string name = "");

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Unchecked product lookup.
  int at(int a, int b) const { return table_[a * order_ + b]; }
  const std::uint16_t* row(int a) const { return table_.data() + a * order_; }

  // True when every row and every column is a permutation; left division and
  // inverses are only defined in that case.
  bool latin() const { return latin_; }
  bool has_identity_at_zero() const { return identity_; }

  // Unique c with at(a, c) == b.
  int left_div(int a, int b) const { return ldiv_[a * order_ + b]; }
  int inverse_of(int a) const { return inv_[a]; }

  const std::optional<VerificationReport>& verification() const {
    return verification_;
  }
  void attach_verification(VerificationReport report) {
    verification_ = std::move(report);
  }
  bool verified_cml() const {
    return verification_ && verification_->all_ok();
  }

  bool same_table(const LoopTable& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_;
  std::string name_;
  bool latin_ = false;
  bool identity_ = false;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> ldiv_;
  std::vector<std::uint16_t> inv_;
  std::optional<VerificationReport> verification_;
};

int mul(const LoopTable& L, int a, int b);
int inv(const LoopTable& L, int a);

// a^k by repeated multiplication; negative k uses the inverse. Well defined
// on verified CMLs by diassociativity.
int pow(const LoopTable& L, int a, long long k);

int element_order(const LoopTable& L, int a);
int exponent(const LoopTable& L);

// Computes all four axiom flags; the Moufang law x^2(yz) = (xy)(xz) is
// checked over all n^3 triples.
VerificationReport verify_cml(const LoopTable& L);

// Throws PreconditionError unless the table is usable as a CML: an attached
// verification report must be all-true; without a report, the structural
// Latin/identity/commutative checks must pass (the Moufang scan is then the
// caller's responsibility).
void require_cml(const LoopTable& L);

// Latin + identity only; enough for division-based diagnostics.
void require_divisible(const LoopTable& L);

}  // namespace moufang
