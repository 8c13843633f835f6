#include "moufang/catalog.hpp"

#include <fstream>

#include "moufang/associator.hpp"
#include "moufang/errors.hpp"
#include "moufang/json_io.hpp"
#include "moufang/subloops.hpp"

namespace moufang {
namespace {

LoopTable build_trivial() {
  return LoopTable({{0}}, "trivial");
}

LoopTable build_cyclic(int m) {
  if (m < 1 || m > kMaxOrder) {
    throw InputError("cyclic order out of range: " + std::to_string(m));
  }
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      rows[i][j] = (i + j) % m;
    }
  }
  return LoopTable(std::move(rows), "cyclic(" + std::to_string(m) + ")");
}

LoopTable build_elem3(int k) {
  if (k < 0 || k > 7) {
    throw InputError("elem3 rank out of range: " + std::to_string(k));
  }
  int n = 1;
  for (int i = 0; i < k; ++i) {
    n *= 3;
  }
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v = 0;
      int place = 1;
      int a = i;
      int b = j;
      for (int d = 0; d < k; ++d) {
        v += ((a + b) % 3) * place;
        a /= 3;
        b /= 3;
        place *= 3;
      }
      rows[i][j] = v;
    }
  }
  return LoopTable(std::move(rows), "elem3(" + std::to_string(k) + ")");
}

// Elements are 4-tuples over Z_3 encoded as 27*a1 + 9*a2 + 3*a3 + a4; the
// fourth coordinate picks up the twist (a3-b3)(a1*b2-a2*b1).
LoopTable build_cml81() {
  const int n = 81;
  auto digit = [](int v, int place) { return (v / place) % 3; };
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    const int a1 = digit(i, 27), a2 = digit(i, 9), a3 = digit(i, 3),
              a4 = digit(i, 1);
    for (int j = 0; j < n; ++j) {
      const int b1 = digit(j, 27), b2 = digit(j, 9), b3 = digit(j, 3),
                b4 = digit(j, 1);
      const int c1 = (a1 + b1) % 3;
      const int c2 = (a2 + b2) % 3;
      const int c3 = (a3 + b3) % 3;
      const int twist = (a3 - b3) * (a1 * b2 - a2 * b1);
      const int c4 = (((a4 + b4 + twist) % 3) + 3) % 3;
      rows[i][j] = 27 * c1 + 9 * c2 + 3 * c3 + c4;
    }
  }
  return LoopTable(std::move(rows), "cml81");
}

// Deterministic DFS over commutative unital Latin squares of the given
// order, in row-major upper-triangle cell order with ascending values;
// returns the first completed table that fails the Moufang law.
bool fixture_search(int n, std::vector<std::vector<int>>& grid) {
  grid.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    grid[0][i] = i;
    grid[i][0] = i;
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cells.emplace_back(i, j);
    }
  }

  auto feasible = [&](int i, int j, int v) {
    for (int c = 0; c < n; ++c) {
      if (grid[i][c] == v || grid[c][j] == v) {
        return false;
      }
    }
    if (i != j) {
      for (int c = 0; c < n; ++c) {
        if (grid[j][c] == v || grid[c][i] == v) {
          return false;
        }
      }
    }
    return true;
  };

  auto moufang_ok = [&]() {
    for (int x = 0; x < n; ++x) {
      const int xx = grid[x][x];
      for (int y = 0; y < n; ++y) {
        const int xy = grid[x][y];
        for (int z = 0; z < n; ++z) {
          if (grid[xx][grid[y][z]] != grid[xy][grid[x][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == cells.size()) {
      return !moufang_ok();
    }
    const auto [i, j] = cells[k];
    for (int v = 0; v < n; ++v) {
      if (!feasible(i, j, v)) {
        continue;
      }
      grid[i][j] = v;
      grid[j][i] = v;
      if (self(self, k + 1)) {
        return true;
      }
      grid[i][j] = -1;
      if (i != j) {
        grid[j][i] = -1;
      }
    }
    return false;
  };

  return dfs(dfs, 0);
}

}  // namespace

std::string ConstructionSpec::label() const {
  switch (kind) {
    case Kind::trivial:
      return "trivial";
    case Kind::cyclic:
      return "cyclic(" + std::to_string(m) + ")";
    case Kind::elem_abelian_3:
      return "elem3(" + std::to_string(k) + ")";
    case Kind::cml81:
      return "cml81";
    case Kind::product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) {
          s += ",";
        }
        s += factors[i].label();
      }
      return s + ")";
    }
    case Kind::file:
      return "file(" + path + ")";
  }
  return "?";
}

ConstructionSpec ConstructionSpec::parse(const std::string& text) {
  ConstructionSpec s;
  if (text == "trivial") {
    s.kind = Kind::trivial;
    return s;
  }
  if (text == "cml81") {
    s.kind = Kind::cml81;
    return s;
  }
  auto int_arg = [&](const std::string& prefix) {
    const std::string arg = text.substr(prefix.size());
    try {
      std::size_t used = 0;
      const int v = std::stoi(arg, &used);
      if (used != arg.size()) {
        throw InputError("");
      }
      return v;
    } catch (const std::exception&) {
      throw InputError("bad integer argument in construction: " + text);
    }
  };
  if (text.rfind("cyclic:", 0) == 0) {
    s.kind = Kind::cyclic;
    s.m = int_arg("cyclic:");
    return s;
  }
  if (text.rfind("elem3:", 0) == 0) {
    s.kind = Kind::elem_abelian_3;
    s.k = int_arg("elem3:");
    return s;
  }
  if (text.rfind("file:", 0) == 0) {
    s.kind = Kind::file;
    s.path = text.substr(5);
    if (s.path.empty()) {
      throw InputError("empty file path in construction");
    }
    return s;
  }
  if (text.rfind("product:", 0) == 0) {
    s.kind = Kind::product;
    const std::string args = text.substr(8);
    std::size_t start = 0;
    while (start <= args.size()) {
      const std::size_t comma = args.find(',', start);
      const std::string part = args.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (part.empty()) {
        throw InputError("empty factor in product construction");
      }
      if (part.rfind("product:", 0) == 0) {
        throw InputError(
            "nested product specs are not supported in the text grammar");
      }
      s.factors.push_back(parse(part));
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    if (s.factors.size() < 2) {
      throw InputError("product construction needs at least two factors");
    }
    return s;
  }
  throw InputError("unknown construction: " + text);
}

LoopTable build(const ConstructionSpec& spec) {
  LoopTable result = [&] {
    switch (spec.kind) {
      case ConstructionSpec::Kind::trivial:
        return build_trivial();
      case ConstructionSpec::Kind::cyclic:
        return build_cyclic(spec.m);
      case ConstructionSpec::Kind::elem_abelian_3:
        return build_elem3(spec.k);
      case ConstructionSpec::Kind::cml81:
        return build_cml81();
      case ConstructionSpec::Kind::product: {
        if (spec.factors.size() < 2) {
          throw InputError("product construction needs at least two factors");
        }
        LoopTable acc = build(spec.factors[0]);
        for (std::size_t i = 1; i < spec.factors.size(); ++i) {
          acc = direct_product(acc, build(spec.factors[i]));
        }
        return acc;
      }
      case ConstructionSpec::Kind::file:
        return load(spec.path);
    }
    throw InputError("unknown construction kind");
  }();

  if (spec.kind == ConstructionSpec::Kind::file) {
    return result;
  }
  result.set_name(spec.label());
  VerificationReport report = verify_cml(result);
  if (!report.all_ok()) {
    throw InternalError("built-in construction failed verification: " +
                        spec.label());
  }
  result.attach_verification(std::move(report));
  if (spec.kind == ConstructionSpec::Kind::cml81 &&
      associator(result, 27, 9, 3) == 0) {
    throw InternalError("cml81 construction is associative; formula regression");
  }
  return result;
}

LoopTable load(const std::string& path) {
  LoopTable L = loop_from_file_unchecked(path);
  VerificationReport report = verify_cml(L);
  if (!report.latin_square) {
    throw InputError("table in " + path + " is not a Latin square");
  }
  if (!report.identity_ok) {
    throw InputError("identity must be index 0 in " + path);
  }
  L.attach_verification(std::move(report));
  return L;
}

void save(const LoopTable& L, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot open " + path + " for writing");
  }
  out << loop_to_json(L).dump(2) << "\n";
  if (!out) {
    throw InputError("failed writing " + path);
  }
}

const LoopTable& fixture_non_moufang() {
  static const LoopTable fixture = [] {
    for (int n = 5; n <= 8; ++n) {
      std::vector<std::vector<int>> grid;
      if (fixture_search(n, grid)) {
        LoopTable L(std::move(grid), "fixture_non_moufang");
        VerificationReport report = verify_cml(L);
        if (!report.latin_square || !report.identity_ok ||
            !report.commutative || report.moufang) {
          throw InternalError("fixture search produced a wrong table");
        }
        L.attach_verification(std::move(report));
        return L;
      }
    }
    throw InternalError("fixture search exhausted orders 5..8");
  }();
  return fixture;
}

std::vector<ConstructionSpec> catalog_specs() {
  std::vector<ConstructionSpec> out;
  out.push_back(ConstructionSpec::parse("trivial"));
  out.push_back(ConstructionSpec::parse("cyclic:3"));
  out.push_back(ConstructionSpec::parse("cyclic:9"));
  out.push_back(ConstructionSpec::parse("elem3:2"));
  out.push_back(ConstructionSpec::parse("cml81"));
  out.push_back(ConstructionSpec::parse("product:cml81,cyclic:3"));
  return out;
}

}  // namespace moufang
