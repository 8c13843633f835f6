#include "moufang/associator.hpp"

#include <map>
#include <numeric>

#include "moufang/errors.hpp"

namespace moufang {
namespace {

// Deterministic seed-free stride through a tuple space of the given size:
// the golden-ratio point decremented until coprime with the size.
std::uint64_t sample_stride(std::uint64_t space) {
  auto stride = static_cast<std::uint64_t>(0.6180339887498949 *
                                           static_cast<double>(space));
  if (stride < 2) {
    stride = 1;
  }
  while (std::gcd(stride, space) != 1) {
    --stride;
  }
  return stride;
}

class WitnessSink {
 public:
  WitnessSink(std::string identity, std::uint64_t total, bool exhaustive,
              IdentityScanResult& out)
      : identity_(std::move(identity)), out_(out) {
    cov_.identity = identity_;
    cov_.total = total;
    cov_.exhaustive = exhaustive;
  }

  void checked() { ++cov_.checked; }

  void fail(std::vector<int> tuple, int lhs, int rhs,
            std::optional<std::array<int, 3>> exponents = std::nullopt) {
    ++cov_.failures;
    if (count_ < kMaxWitnessesPerIdentity) {
      ++count_;
      out_.witnesses.push_back(
          {identity_, std::move(tuple), lhs, rhs, exponents});
    }
  }

  void finish() { out_.coverage.push_back(cov_); }

 private:
  std::string identity_;
  IdentityScanResult& out_;
  ScanCoverage cov_;
  std::size_t count_ = 0;
};

}  // namespace

int associator(const LoopTable& L, int a, int b, int c) {
  if (a < 0 || a >= L.order() || b < 0 || b >= L.order() || c < 0 ||
      c >= L.order()) {
    throw InputError("element index out of range");
  }
  require_divisible(L);
  const int a_bc = L.at(a, L.at(b, c));
  const int ab_c = L.at(L.at(a, b), c);
  return L.left_div(a_bc, ab_c);
}

int inner_apply(const LoopTable& L, int x, int y, int z) {
  return L.at(z, associator(L, z, y, x));
}

AssocCache::AssocCache(const LoopTable& L) : L_(L), n_(L.order()) {
  require_divisible(L);
  if (L.order() <= kExhaustiveQuadrupleLimit) {
    dense_.resize(n_ * n_ * n_);
    std::size_t idx = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        const std::uint16_t* row_ab = L.row(L.at(a, b));
        const std::uint16_t* row_b = L.row(b);
        for (std::size_t c = 0; c < n_; ++c) {
          const int a_bc = L.at(a, row_b[c]);
          dense_[idx++] =
              static_cast<std::uint16_t>(L.left_div(a_bc, row_ab[c]));
        }
      }
    }
  }
}

int AssocCache::slow(int a, int b, int c) const {
  const int a_bc = L_.at(a, L_.at(b, c));
  const int ab_c = L_.at(L_.at(a, b), c);
  return L_.left_div(a_bc, ab_c);
}

bool IdentityScanResult::passed() const {
  for (const auto& c : coverage) {
    if (c.failures != 0) {
      return false;
    }
  }
  return true;
}

std::uint64_t IdentityScanResult::failure_count(
    const std::string& identity) const {
  std::uint64_t total = 0;
  for (const auto& c : coverage) {
    if (c.identity == identity) {
      total += c.failures;
    }
  }
  return total;
}

IdentityScanResult check_identities(
    const LoopTable& L, const std::vector<std::array<int, 3>>& exponents) {
  require_divisible(L);
  const int n = L.order();
  const AssocCache A(L);
  IdentityScanResult out;

  // Power maps for the exponents in play, plus cubes for (1.4).
  std::vector<int> wanted;
  for (const auto& e : exponents) {
    wanted.insert(wanted.end(), {e[0], e[1], e[2], e[0] * e[1] * e[2]});
  }
  wanted.push_back(3);
  std::map<int, std::vector<std::uint16_t>> powmap;
  for (int k : wanted) {
    if (powmap.count(k)) {
      continue;
    }
    auto& m = powmap[k];
    m.resize(n);
    for (int a = 0; a < n; ++a) {
      m[a] = static_cast<std::uint16_t>(pow(L, a, k));
    }
  }
  const std::vector<std::uint16_t>& cube = powmap.at(3);

  const std::uint64_t n3 = static_cast<std::uint64_t>(n) * n * n;
  WitnessSink s12("1.2", n3, true, out);
  WitnessSink s14("1.4", n3, true, out);
  std::vector<WitnessSink> s13;
  s13.reserve(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    s13.emplace_back("1.3", n3, true, out);
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int ynv = L.inverse_of(y);
      for (int z = 0; z < n; ++z) {
        const int a0 = A(x, y, z);
        s12.checked();
        // Each of the three equalities is counted on its own.
        const int lhs = a0;
        int rhs = A(ynv, x, z);
        if (lhs != rhs) {
          s12.fail({x, y, z}, lhs, rhs);
        }
        rhs = L.inverse_of(A(y, x, z));
        if (lhs != rhs) {
          s12.fail({x, y, z}, lhs, rhs);
        }
        rhs = A(y, z, x);
        if (lhs != rhs) {
          s12.fail({x, y, z}, lhs, rhs);
        }

        s14.checked();
        if (cube[a0] != 0) {
          s14.fail({x, y, z}, cube[a0], 0);
        }

        for (std::size_t i = 0; i < exponents.size(); ++i) {
          const auto& e = exponents[i];
          s13[i].checked();
          const int l =
              A(powmap.at(e[0])[x], powmap.at(e[1])[y], powmap.at(e[2])[z]);
          const int r = powmap.at(e[0] * e[1] * e[2])[a0];
          if (l != r) {
            s13[i].fail({x, y, z}, l, r, e);
          }
        }
      }
    }
  }
  s12.finish();
  for (auto& s : s13) {
    s.finish();
  }
  s14.finish();

  // (1.5): (xy,u,v) = (x,u,v)((x,u,v),x,y)(y,u,v)((y,u,v),y,x), bracketed
  // left to right.
  const std::uint64_t n4 = n3 * n;
  const bool exhaustive = n <= kExhaustiveQuadrupleLimit;
  WitnessSink s15("1.5", n4, exhaustive, out);
  auto eval_15 = [&](int x, int y, int u, int v) {
    const int lhs = A(L.at(x, y), u, v);
    const int t1 = A(x, u, v);
    const int t2 = A(t1, x, y);
    const int t3 = A(y, u, v);
    const int t4 = A(t3, y, x);
    const int rhs = L.at(L.at(L.at(t1, t2), t3), t4);
    s15.checked();
    if (lhs != rhs) {
      s15.fail({x, y, u, v}, lhs, rhs);
    }
  };
  if (exhaustive) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            eval_15(x, y, u, v);
          }
        }
      }
    }
  } else {
    const std::uint64_t stride = sample_stride(n4);
    std::uint64_t idx = 0;
    for (std::uint64_t t = 0; t < kSampledTuples; ++t) {
      idx = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(idx) + stride) % n4);
      const int v = static_cast<int>(idx % n);
      const int u = static_cast<int>((idx / n) % n);
      const int y = static_cast<int>((idx / (static_cast<std::uint64_t>(n) * n)) % n);
      const int x = static_cast<int>(idx / n3);
      eval_15(x, y, u, v);
    }
  }
  s15.finish();
  return out;
}

IdentityScanResult check_inner_automorphism(const LoopTable& L) {
  require_divisible(L);
  const int n = L.order();
  const AssocCache A(L);
  IdentityScanResult out;
  const std::uint64_t n2 = static_cast<std::uint64_t>(n) * n;
  const std::uint64_t n4 = n2 * n2;
  const bool exhaustive = n <= kExhaustiveQuadrupleLimit;
  WitnessSink sink("lemma1.1", n4, exhaustive, out);

  std::vector<std::uint16_t> lmap(n);
  if (exhaustive) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          lmap[z] = static_cast<std::uint16_t>(L.at(z, A(z, y, x)));
        }
        for (int u = 0; u < n; ++u) {
          const std::uint16_t* row_u = L.row(u);
          const std::uint16_t* row_lu = L.row(lmap[u]);
          for (int v = 0; v < n; ++v) {
            sink.checked();
            const int lhs = lmap[row_u[v]];
            const int rhs = row_lu[lmap[v]];
            if (lhs != rhs) {
              sink.fail({x, y, u, v}, lhs, rhs);
            }
          }
        }
      }
    }
  } else {
    const std::uint64_t stride = sample_stride(n4);
    std::uint64_t idx = 0;
    for (std::uint64_t t = 0; t < kSampledTuples; ++t) {
      idx = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(idx) + stride) % n4);
      const int v = static_cast<int>(idx % n);
      const int u = static_cast<int>((idx / n) % n);
      const int y = static_cast<int>((idx / n2) % n);
      const int x = static_cast<int>(idx / (n2 * n));
      const int lu = L.at(u, A(u, y, x));
      const int lv = L.at(v, A(v, y, x));
      const int uv = L.at(u, v);
      const int luv = L.at(uv, A(uv, y, x));
      sink.checked();
      if (luv != L.at(lu, lv)) {
        sink.fail({x, y, u, v}, luv, L.at(lu, lv));
      }
    }
  }
  sink.finish();
  return out;
}

}  // namespace moufang
