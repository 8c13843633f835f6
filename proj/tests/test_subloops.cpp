#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "moufang/catalog.hpp"
#include "moufang/errors.hpp"
#include "moufang/subloops.hpp"

using namespace moufang;

namespace {

std::set<int> naive_closure(const LoopTable& L, std::vector<int> gens) {
  std::set<int> S{0};
  S.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = S;
    for (int a : S) {
      next.insert(L.inverse_of(a));
      for (int b : S) {
        next.insert(L.at(a, b));
      }
    }
    if (next.size() != S.size()) {
      S = std::move(next);
      grew = true;
    }
  }
  return S;
}

// Subgroups of an associative commutative table: all cyclic subgroups, then
// saturation under pairwise joins. Deliberately different from the
// extend-by-one lattice walk it cross-checks.
std::set<std::set<int>> naive_subgroups(const LoopTable& L) {
  std::set<std::set<int>> subs;
  subs.insert({0});
  for (int a = 0; a < L.order(); ++a) {
    subs.insert(naive_closure(L, {a}));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::set<int>> snapshot(subs.begin(), subs.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> both(snapshot[i].begin(), snapshot[i].end());
        both.insert(both.end(), snapshot[j].begin(), snapshot[j].end());
        if (subs.insert(naive_closure(L, both)).second) {
          grew = true;
        }
      }
    }
  }
  return subs;
}

std::map<int, int> size_histogram(const std::vector<SubloopMask>& subs) {
  std::map<int, int> h;
  for (const auto& m : subs) {
    ++h[m.count()];
  }
  return h;
}

}  // namespace

TEST_CASE("generated subloop agrees with the naive fixed-point closure") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 80);
  std::uniform_int_distribution<int> count(1, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> gens;
    for (int i = count(rng); i > 0; --i) {
      gens.push_back(pick(rng));
    }
    const SubloopMask got = generated_subloop(L, gens);
    const std::set<int> want = naive_closure(L, gens);
    const std::vector<int> got_idx = got.indices();
    CHECK(std::set<int>(got_idx.begin(), got_idx.end()) == want);
  }
}

TEST_CASE("subgroup enumeration matches the naive join-saturation oracle") {
  for (const char* spec :
       {"cyclic:9", "elem3:2", "product:cyclic:3,cyclic:9"}) {
    CAPTURE(spec);
    const LoopTable L = build(ConstructionSpec::parse(spec));
    const auto subs = all_subloops(L);
    const auto naive = naive_subgroups(L);
    REQUIRE(subs.size() == naive.size());
    for (const auto& m : subs) {
      const std::vector<int> idx = m.indices();
      CHECK(naive.count(std::set<int>(idx.begin(), idx.end())) == 1);
    }
  }
  CHECK(all_subloops(build(ConstructionSpec::parse("cyclic:9"))).size() == 3);
  CHECK(all_subloops(build(ConstructionSpec::parse("elem3:2"))).size() == 6);
}

TEST_CASE("the order-81 loop has 185 subloops with a pinned size profile") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));
  const auto subs = all_subloops(L);
  CHECK(subs.size() == 185);
  CHECK(size_histogram(subs) ==
        std::map<int, int>{{1, 1}, {3, 40}, {9, 130}, {27, 13}, {81, 1}});
  for (const auto& m : subs) {
    CHECK(is_valid_subloop(L, m));
  }
  // Lattice order: by size, then by bitset value.
  for (std::size_t i = 1; i < subs.size(); ++i) {
    CHECK(subs[i - 1].lattice_less(subs[i]));
  }
}

TEST_CASE("every proper subloop of the order-81 loop is associative") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));
  for (const auto& m : all_subloops(L)) {
    if (m.count() < 81) {
      CHECK(is_associative_subloop(L, m));
    }
  }
  SubloopMask whole(81);
  for (int i = 0; i < 81; ++i) {
    whole.set(i);
  }
  CHECK(!is_associative_subloop(L, whole));
}

TEST_CASE("normality census of the order-81 loop") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));
  const AssocCache cache(L);
  const auto subs = all_subloops(L);
  std::vector<SubloopMask> normal, abnormal;
  for (const auto& m : subs) {
    (is_normal(cache, m) ? normal : abnormal).push_back(m);
  }
  CHECK(normal.size() == 29);
  CHECK(size_histogram(normal) ==
        std::map<int, int>{{1, 1}, {3, 1}, {9, 13}, {27, 13}, {81, 1}});
  CHECK(size_histogram(abnormal) == std::map<int, int>{{3, 39}, {9, 117}});

  // First non-normal subloop in lattice order.
  CHECK(abnormal.front().indices() == std::vector<int>{0, 3, 6});

  // The single-call overload agrees with the cached one.
  CHECK(is_normal(L, normal.front()) == true);
  CHECK(is_normal(L, abnormal.front()) == false);
  CHECK(!is_normal(L, SubloopMask::from_indices(81, {0, 27, 54})));
}

TEST_CASE("centre and centralizers") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));
  CHECK(centre(L).indices() == std::vector<int>{0, 1, 2});

  SubloopMask whole(81);
  for (int i = 0; i < 81; ++i) {
    whole.set(i);
  }
  // Against the whole loop the centralizer is the centre; against a central
  // pair source it is everything.
  CHECK(centralizer(L, whole, whole).indices() == std::vector<int>{0, 1, 2});
  const SubloopMask m27 = SubloopMask::from_indices(81, {0, 27, 54});
  CHECK(centralizer(L, whole, m27).count() == 81);

  const LoopTable z9 = build(ConstructionSpec::parse("cyclic:9"));
  CHECK(centre(z9).count() == 9);
}

TEST_CASE("cosets partition for normal subloops and break for {0,3,6}-style ones") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));

  const CosetPartition good = cosets(L, centre(L));
  CHECK(good.is_partition);
  CHECK(good.coset_count == 27);
  CHECK(!good.failure.has_value());
  for (int a = 0; a < 81; ++a) {
    CHECK(good.representative_of[a] <= a);
  }

  const SubloopMask h = generated_subloop(L, {3, 9});
  CHECK(h.indices() ==
        std::vector<int>{0, 3, 6, 9, 12, 15, 18, 21, 24});
  const CosetPartition bad = cosets(L, h);
  CHECK(!bad.is_partition);
  REQUIRE(bad.failure.has_value());
  const auto [a, b] = *bad.failure;
  // The recorded pair shares a coset family yet lands on different
  // representatives.
  CHECK(bad.representative_of[a] != bad.representative_of[b]);

  // {0,3,6} is not normal, but its coset family still happens to partition.
  const CosetPartition odd = cosets(L, SubloopMask::from_indices(81, {0, 3, 6}));
  CHECK(odd.is_partition);
  CHECK(odd.coset_count == 27);
}

TEST_CASE("quotient by the centre is the 27-element exponent-3 group") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));
  const QuotientResult q = quotient(L, centre(L));
  CHECK(q.table.order() == 27);
  CHECK(q.table.verified_cml());
  CHECK(exponent(q.table) == 3);
  SubloopMask whole(27);
  for (int i = 0; i < 27; ++i) {
    whole.set(i);
  }
  CHECK(is_associative_subloop(q.table, whole));

  CHECK(q.projection[0] == 0);
  std::map<int, int> fibers;
  for (int a = 0; a < 81; ++a) {
    ++fibers[q.projection[a]];
  }
  CHECK(fibers.size() == 27);
  for (const auto& [_, size] : fibers) {
    CHECK(size == 3);
  }
  // Projection is a homomorphism.
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int a = rng() % 81, b = rng() % 81;
    CHECK(q.projection[L.at(a, b)] ==
          q.table.at(q.projection[a], q.projection[b]));
  }

  CHECK_THROWS_AS(quotient(L, SubloopMask::from_indices(81, {0, 3, 6})),
                  PreconditionError);
}

TEST_CASE("direct products") {
  const LoopTable a = build(ConstructionSpec::parse("cyclic:3"));
  const LoopTable b = build(ConstructionSpec::parse("cyclic:9"));
  const LoopTable p = direct_product(a, b);
  CHECK(p.order() == 27);
  CHECK(p.verified_cml());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 9; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 9; ++l) {
          CHECK(p.at(i * 9 + j, k * 9 + l) ==
                a.at(i, k) * 9 + b.at(j, l));
        }
      }
    }
  }
  const LoopTable& c81 = build(ConstructionSpec::parse("cml81"));
  CHECK_THROWS_AS(direct_product(direct_product(c81, c81), c81),
                  BoundExceededError);
}

TEST_CASE("primary components of the order-405 product") {
  const LoopTable L = build(ConstructionSpec::parse("product:cyclic:5,cml81"));
  const auto comps = p_components(L);
  REQUIRE(comps.size() == 2);
  REQUIRE(comps.count(3) == 1);
  REQUIRE(comps.count(5) == 1);
  CHECK(comps.at(3).count() == 81);
  std::vector<int> first3 = comps.at(3).indices();
  CHECK(first3.front() == 0);
  CHECK(first3.back() == 80);
  CHECK(comps.at(5).indices() == std::vector<int>{0, 81, 162, 243, 324});

  // The 5-part lies inside the centre.
  const SubloopMask z = centre(L);
  CHECK(z.count() == 15);
  for (int e : comps.at(5).indices()) {
    CHECK(z.test(e));
  }

  const auto only3 = p_components(build(ConstructionSpec::parse("cml81")));
  REQUIRE(only3.size() == 1);
  CHECK(only3.at(3).count() == 81);

  CHECK(p_components(build(ConstructionSpec::parse("trivial"))).empty());
}

TEST_CASE("coset criterion for the centralizer holds on the order-81 loop") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));
  SubloopMask whole(81);
  for (int i = 0; i < 81; ++i) {
    whole.set(i);
  }
  const SubloopMask derived = SubloopMask::from_indices(81, {0, 1, 2});
  CHECK(lemma_1_6_check(L, whole, derived).empty());

  CHECK_THROWS_AS(
      lemma_1_6_check(L, whole, SubloopMask::from_indices(81, {0, 3, 6})),
      PreconditionError);
}

TEST_CASE("subtables reindex subloops as standalone loops") {
  const LoopTable& L = build(ConstructionSpec::parse("cml81"));
  const LoopTable t = subtable(L, SubloopMask::from_indices(81, {0, 27, 54}),
                               "three");
  CHECK(t.order() == 3);
  CHECK(t.name() == "three");
  const LoopTable z3 = build(ConstructionSpec::parse("cyclic:3"));
  CHECK(t.same_table(z3));
}

TEST_CASE("enumeration refuses loops above the bound") {
  const LoopTable big = build(ConstructionSpec::parse("product:cyclic:5,cml81"));
  CHECK_THROWS_AS(all_subloops(big), BoundExceededError);
  CHECK_THROWS_AS(all_subloops(big, 404), BoundExceededError);
  CHECK(all_subloops(big, 405).size() > 0);
}
