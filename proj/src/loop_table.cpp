#include "moufang/loop_table.hpp"

#include <numeric>

#include "moufang/errors.hpp"

namespace moufang {

LoopTable::LoopTable(std::vector<std::vector<int>> rows, std::string name)
    : name_(std::move(name)) {
  const std::size_t n = rows.size();
  if (n == 0) {
    throw InputError("empty table");
  }
  if (n > static_cast<std::size_t>(kMaxOrder)) {
    throw InputError("order " + std::to_string(n) + " exceeds the maximum " +
                     std::to_string(kMaxOrder));
  }
  order_ = static_cast<int>(n);
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError("table is not square: row " + std::to_string(i) +
                       " has " + std::to_string(rows[i].size()) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v < 0 || v >= order_) {
        throw InputError("entry out of range at (" + std::to_string(i) + "," +
                         std::to_string(j) + "): " + std::to_string(v));
      }
      table_[i * n + j] = static_cast<std::uint16_t>(v);
    }
  }

  latin_ = true;
  std::vector<std::uint8_t> seen(n);
  for (std::size_t i = 0; i < n && latin_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[i * n + j]]++) {
        latin_ = false;
        break;
      }
    }
  }
  for (std::size_t j = 0; j < n && latin_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table_[i * n + j]]++) {
        latin_ = false;
        break;
      }
    }
  }

  identity_ = true;
  for (int j = 0; j < order_; ++j) {
    if (at(0, j) != j || at(j, 0) != j) {
      identity_ = false;
      break;
    }
  }

  if (latin_) {
    ldiv_.resize(n * n);
    inv_.resize(n);
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        ldiv_[a * order_ + at(a, b)] = static_cast<std::uint16_t>(b);
      }
      inv_[a] = ldiv_[a * order_ + 0];
    }
  }
}

int mul(const LoopTable& L, int a, int b) {
  if (a < 0 || a >= L.order() || b < 0 || b >= L.order()) {
    throw InputError("element index out of range");
  }
  return L.at(a, b);
}

int inv(const LoopTable& L, int a) {
  if (a < 0 || a >= L.order()) {
    throw InputError("element index out of range");
  }
  require_divisible(L);
  return L.inverse_of(a);
}

int pow(const LoopTable& L, int a, long long k) {
  if (a < 0 || a >= L.order()) {
    throw InputError("element index out of range");
  }
  require_divisible(L);
#ifndef NDEBUG
  if (L.verification() && !L.verification()->moufang) {
    throw PreconditionError(
        "pow on a table that failed the Moufang check: bracketing undefined");
  }
#endif
  int base = a;
  if (k < 0) {
    base = L.inverse_of(a);
    k = -k;
  }
  if (k >= L.order()) {
    k %= element_order(L, base);
  }
  int r = 0;
  for (long long i = 0; i < k; ++i) {
    r = L.at(r, base);
  }
  return r;
}

int element_order(const LoopTable& L, int a) {
  if (a < 0 || a >= L.order()) {
    throw InputError("element index out of range");
  }
  int r = a;
  int k = 1;
  while (r != 0) {
    r = L.at(r, a);
    ++k;
    if (k > L.order() + 1) {
      throw PreconditionError("element has no finite power order; not a loop");
    }
  }
  return a == 0 ? 1 : k;
}

int exponent(const LoopTable& L) {
  long long e = 1;
  for (int a = 0; a < L.order(); ++a) {
    e = std::lcm(e, static_cast<long long>(element_order(L, a)));
  }
  return static_cast<int>(e);
}

VerificationReport verify_cml(const LoopTable& L) {
  const int n = L.order();
  VerificationReport r;
  std::optional<std::vector<int>> first;

  r.latin_square = true;
  std::vector<int> seen_at(n, -1);
  for (int i = 0; i < n && r.latin_square; ++i) {
    std::fill(seen_at.begin(), seen_at.end(), -1);
    for (int j = 0; j < n; ++j) {
      const int v = L.at(i, j);
      if (seen_at[v] >= 0) {
        r.latin_square = false;
        first = {0, i, seen_at[v], j};
        break;
      }
      seen_at[v] = j;
    }
  }
  for (int j = 0; j < n && r.latin_square; ++j) {
    std::fill(seen_at.begin(), seen_at.end(), -1);
    for (int i = 0; i < n; ++i) {
      const int v = L.at(i, j);
      if (seen_at[v] >= 0) {
        r.latin_square = false;
        first = {1, seen_at[v], i, j};
        break;
      }
      seen_at[v] = i;
    }
  }

  r.identity_ok = true;
  for (int j = 0; j < n; ++j) {
    if (L.at(0, j) != j || L.at(j, 0) != j) {
      r.identity_ok = false;
      if (!first) {
        first = {L.at(0, j) != j ? 0 : j, L.at(0, j) != j ? j : 0};
      }
      break;
    }
  }

  r.commutative = true;
  for (int i = 0; i < n && r.commutative; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (L.at(i, j) != L.at(j, i)) {
        r.commutative = false;
        if (!first) {
          first = {i, j};
        }
        break;
      }
    }
  }

  r.moufang = true;
  for (int x = 0; x < n && r.moufang; ++x) {
    const int xx = L.at(x, x);
    const std::uint16_t* row_xx = L.row(xx);
    const std::uint16_t* row_x = L.row(x);
    for (int y = 0; y < n && r.moufang; ++y) {
      const std::uint16_t* row_y = L.row(y);
      const std::uint16_t* row_xy = L.row(L.at(x, y));
      for (int z = 0; z < n; ++z) {
        if (row_xx[row_y[z]] != row_xy[row_x[z]]) {
          r.moufang = false;
          if (!first) {
            first = {x, y, z};
          }
          break;
        }
      }
    }
  }

  r.first_failure = std::move(first);
  return r;
}

void require_cml(const LoopTable& L) {
  if (L.verification()) {
    const auto& v = *L.verification();
    if (!v.all_ok()) {
      throw PreconditionError("table is not a verified CML");
    }
    return;
  }
  if (!L.latin() || !L.has_identity_at_zero()) {
    throw PreconditionError(
        "table is not a Latin square with identity at index 0");
  }
  for (int i = 0; i < L.order(); ++i) {
    for (int j = i + 1; j < L.order(); ++j) {
      if (L.at(i, j) != L.at(j, i)) {
        throw PreconditionError("table is not commutative");
      }
    }
  }
}

void require_divisible(const LoopTable& L) {
  if (!L.latin() || !L.has_identity_at_zero()) {
    throw PreconditionError(
        "table is not a Latin square with identity at index 0");
  }
}

}  // namespace moufang
