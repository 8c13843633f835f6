#pragma once

#include <string>
#include <vector>

#include "moufang/loop_table.hpp"

namespace moufang {

struct ConstructionSpec {
  enum class Kind { trivial, cyclic, elem_abelian_3, cml81, product, file };

  Kind kind = Kind::trivial;
  int m = 0;                              // cyclic order
  int k = 0;                              // elem_abelian_3 rank
  std::vector<ConstructionSpec> factors;  // product
  std::string path;                       // file

  std::string label() const;

  // Grammar: trivial | cml81 | cyclic:m | elem3:k | file:path |
  // product:spec,spec[,...] (factors must be non-product specs).
  static ConstructionSpec parse(const std::string& text);
};

// Builds and verifies the table; a built-in construction failing
// verification is an internal regression, not a user error.
LoopTable build(const ConstructionSpec& spec);

// JSON loop file {"name", "order", "table"}. load verifies the table,
// attaches the report, and rejects non-Latin tables and tables whose
// identity is not at index 0.
LoopTable load(const std::string& path);
void save(const LoopTable& L, const std::string& path);

// Smallest commutative unital Latin square failing the Moufang law, found by
// deterministic search starting at order 5 (first hit is at order 6); cached.
const LoopTable& fixture_non_moufang();

// The named regression catalog: every loop here is within the default
// enumeration bound.
std::vector<ConstructionSpec> catalog_specs();

}  // namespace moufang
