// Acceptance gate: thirteen checks, one line each, timed against the budgets
// pinned below. Exit code is the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>
#include <unistd.h>

#include "moufang/catalog.hpp"
#include "moufang/errors.hpp"
#include "moufang/json_io.hpp"
#include "moufang/series.hpp"
#include "moufang/symbolic.hpp"

using namespace moufang;

namespace {

int g_failures = 0;

template <typename Fn>
void criterion(int n, const char* what, double limit_s, Fn body) {
  std::ostringstream detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool in_time = limit_s <= 0.0 || secs <= limit_s;
  if (!in_time) {
    detail << (detail.str().empty() ? "" : "; ") << "over the " << limit_s
           << "s budget";
  }
  const bool pass = ok && in_time;
  if (!pass) {
    ++g_failures;
  }
  std::printf("criterion %2d: %s  %6.2fs  %s%s%s\n", n, pass ? "PASS" : "FAIL",
              secs, what, detail.str().empty() ? "" : " — ",
              detail.str().c_str());
  std::fflush(stdout);
}

std::set<int> naive_closure(const LoopTable& L, const std::vector<int>& gens) {
  std::set<int> S{0};
  S.insert(gens.begin(), gens.end());
  for (;;) {
    std::set<int> next = S;
    for (int a : S) {
      next.insert(L.inverse_of(a));
      for (int b : S) {
        next.insert(L.at(a, b));
      }
    }
    if (next.size() == S.size()) {
      return S;
    }
    S = std::move(next);
  }
}

std::set<std::set<int>> naive_subgroups(const LoopTable& L) {
  std::set<std::set<int>> subs;
  subs.insert({0});
  for (int a = 0; a < L.order(); ++a) {
    subs.insert(naive_closure(L, {a}));
  }
  for (;;) {
    bool grew = false;
    const std::vector<std::set<int>> snapshot(subs.begin(), subs.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> both(snapshot[i].begin(), snapshot[i].end());
        both.insert(both.end(), snapshot[j].begin(), snapshot[j].end());
        grew |= subs.insert(naive_closure(L, both)).second;
      }
    }
    if (!grew) {
      return subs;
    }
  }
}

std::string run_capture(const std::string& args, int* exit_code) {
  const std::string cmd =
      std::string(MOUFANG_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int status = ::pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

int main() {
  const LoopTable& c81 = build(ConstructionSpec::parse("cml81"));

  criterion(1, "order-81 axioms exhaustive; associator(27,9,3) nonzero", 1.0,
            [&](std::ostringstream& d) {
              const VerificationReport r = verify_cml(c81);
              const int a = associator(c81, 27, 9, 3);
              d << "531441 triples, associator " << a;
              return r.all_ok() && a == 1;
            });

  criterion(2, "identity suite on four tables; fixture caught", 30.0,
            [&](std::ostringstream& d) {
              bool ok = true;
              for (const char* spec :
                   {"cml81", "cyclic:9", "product:cyclic:3,cyclic:3",
                    "product:cyclic:5,cml81"}) {
                const LoopTable L = build(ConstructionSpec::parse(spec));
                const IdentityScanResult r = check_identities(L);
                ok &= r.passed();
                if (L.order() == 405) {
                  for (const auto& c : r.coverage) {
                    if (c.identity == "1.5") {
                      ok &= c.checked >= 1000000ULL;
                      d << "order-405 (1.5) coverage " << c.checked << "; ";
                    }
                  }
                }
              }
              const IdentityScanResult f =
                  check_identities(fixture_non_moufang());
              ok &= !f.passed() && !f.witnesses.empty();
              d << "fixture witnesses " << f.witnesses.size();
              return ok;
            });

  criterion(3, "inner mappings are automorphisms over all 81^4 quadruples",
            60.0, [&](std::ostringstream& d) {
              const IdentityScanResult r = check_inner_automorphism(c81);
              bool cover = false;
              for (const auto& c : r.coverage) {
                cover = c.exhaustive && c.checked == 43046721ULL;
                d << "checked " << c.checked;
              }
              return r.passed() && cover;
            });

  criterion(4, "every 3-element triple generates class <= 2", 300.0,
            [&](std::ostringstream& d) {
              const ClassPredicateResult r = bruck_slaby_check(c81, 3);
              d << r.checked << " of " << r.total << " triples";
              return r.holds() && r.exhaustive && r.total == 85320 &&
                     r.checked == 85320;
            });

  criterion(5, "lower/derived/upper series agree at class 2", 0.0,
            [&](std::ostringstream& d) {
              const SeriesReport lo = lower_central_series(c81);
              const SeriesReport de = derived_series(c81);
              const SeriesReport up = upper_central_series(c81);
              auto sizes = [](const SeriesReport& r) {
                std::vector<int> s;
                for (const auto& m : r.chain) {
                  s.push_back(m.count());
                }
                return s;
              };
              d << "classes " << lo.class_value.value_or(-1) << "/"
                << de.class_value.value_or(-1) << "/"
                << up.class_value.value_or(-1);
              return sizes(lo) == std::vector<int>{81, 3, 1} &&
                     sizes(de) == std::vector<int>{81, 3, 1} &&
                     sizes(up) == std::vector<int>{1, 3, 81} &&
                     lo.class_value == 2 && de.class_value == 2 &&
                     up.class_value == 2;
            });

  criterion(6, "central quotient is the exponent-3 group of order 27; cubes central",
            0.0, [&](std::ostringstream& d) {
              const QuotientResult q = quotient(c81, centre(c81));
              SubloopMask whole(q.table.order());
              for (int i = 0; i < q.table.order(); ++i) {
                whole.set(i);
              }
              bool ok = q.table.order() == 27 && exponent(q.table) == 3 &&
                        is_associative_subloop(q.table, whole);
              d << "quotient order " << q.table.order() << ", exponent "
                << exponent(q.table);
              const SubloopMask z81 = centre(c81);
              for (int x = 0; x < 81; ++x) {
                ok &= z81.test(pow(c81, x, 3));
              }
              const LoopTable p729 =
                  build(ConstructionSpec::parse("product:cyclic:9,cml81"));
              const SubloopMask z729 = centre(p729);
              for (int x = 0; x < p729.order(); ++x) {
                ok &= z729.test(pow(p729, x, 3));
              }
              return ok;
            });

  criterion(7, "order-405 product splits into central 5-part and 3-part", 0.0,
            [&](std::ostringstream& d) {
              const LoopTable L =
                  build(ConstructionSpec::parse("product:cyclic:5,cml81"));
              const auto comps = p_components(L);
              if (comps.size() != 2 || !comps.count(3) || !comps.count(5)) {
                d << "unexpected component keys";
                return false;
              }
              const SubloopMask z = centre(L);
              bool central5 = true;
              for (int e : comps.at(5).indices()) {
                central5 &= z.test(e);
              }
              d << "|3-part| " << comps.at(3).count() << ", |5-part| "
                << comps.at(5).count();
              return comps.at(3).count() == 81 && comps.at(5).count() == 5 &&
                     central5 &&
                     comps.at(3).count() * comps.at(5).count() == 405;
            });

  criterion(8, "order-3 generators of normal subloops are central", 0.0,
            [&](std::ostringstream& d) {
              const ClassPredicateResult r = lemma_3_1_check(c81);
              const bool e1 =
                  !is_normal(c81, SubloopMask::from_indices(81, {0, 27, 54}));
              d << "checked " << r.checked << " elements; <e1> non-normal "
                << (e1 ? "yes" : "no");
              return r.holds() && e1;
            });

  criterion(9, "185 subloops, all proper ones associative", 0.0,
            [&](std::ostringstream& d) {
              const auto subs = all_subloops(c81);
              bool proper_assoc = true;
              for (const auto& m : subs) {
                if (m.count() < 81) {
                  proper_assoc &= is_associative_subloop(c81, m);
                }
              }
              const bool minimal =
                  is_minimal_of_class(c81, ClassKind::nilpotent, 2).holds();
              d << subs.size() << " subloops";
              return subs.size() == 185 && proper_assoc && minimal;
            });

  criterion(10, "three-element symbolic classification matrix", 0.0,
            [&](std::ostringstream& d) {
              const ClassificationReport a = classify(SymbolicCML(1, c81));
              const ClassificationReport b = classify(SymbolicCML(2, c81));
              const ClassificationReport c = classify(
                  SymbolicCML(1, build(ConstructionSpec::parse("cyclic:3"))));
              d << a.prop_2_17.holds << "/" << b.prop_2_17.holds << "/"
                << c.prop_2_17.holds;
              return a.prop_2_17.available && a.prop_2_17.holds &&
                     b.prop_2_17.available && !b.prop_2_17.holds &&
                     c.prop_2_17.available && !c.prop_2_17.holds;
            });

  criterion(11, "normal non-associative subloops bound solvability by 3", 0.0,
            [&](std::ostringstream& d) {
              bool ok = true;
              int applied = 0;
              for (const auto& spec : catalog_specs()) {
                const LoopTable L = build(spec);
                const ClassPredicateResult hyp =
                    all_nonassoc_subloops_normal(L);
                if (!hyp.holds()) {
                  continue;
                }
                ++applied;
                const int s = solvability_class(L);
                ok &= s <= 3;
                if (spec.label() == "cml81") {
                  ok &= s == 2;
                }
              }
              d << applied << " catalog loops satisfy the hypothesis";
              return ok && applied > 0;
            });

  criterion(12, "lattice and closure agree with naive oracles", 0.0,
            [&](std::ostringstream& d) {
              bool ok = true;
              int tables = 0;
              for (const auto& spec : catalog_specs()) {
                const LoopTable L = build(spec);
                SubloopMask whole(L.order());
                for (int i = 0; i < L.order(); ++i) {
                  whole.set(i);
                }
                if (!is_associative_subloop(L, whole)) {
                  continue;
                }
                ++tables;
                const auto subs = all_subloops(L);
                const auto naive = naive_subgroups(L);
                ok &= subs.size() == naive.size();
                for (const auto& m : subs) {
                  const auto idx = m.indices();
                  ok &= naive.count(std::set<int>(idx.begin(), idx.end())) == 1;
                }
              }
              std::mt19937 rng(20240817);
              std::uniform_int_distribution<int> pick(0, 80);
              std::uniform_int_distribution<int> count(1, 3);
              for (int t = 0; t < 100; ++t) {
                std::vector<int> gens;
                for (int i = count(rng); i > 0; --i) {
                  gens.push_back(pick(rng));
                }
                const auto idx = generated_subloop(c81, gens).indices();
                ok &= std::set<int>(idx.begin(), idx.end()) ==
                      naive_closure(c81, gens);
              }
              d << tables << " associative tables, 100 generator sets";
              return ok && tables == 4;
            });

  criterion(13, "CLI output is byte-identical across repeated runs", 0.0,
            [&](std::ostringstream& d) {
              namespace fs = std::filesystem;
              const fs::path dir =
                  fs::temp_directory_path() /
                  ("moufang_acceptance_" + std::to_string(::getpid()));
              fs::create_directories(dir);
              const std::string c81_path = (dir / "cml81.json").string();
              const std::string z9_path = (dir / "z9.json").string();
              const std::string fix_path = (dir / "fixture.json").string();
              const std::string p405_path = (dir / "p405.json").string();
              save(c81, c81_path);
              save(build(ConstructionSpec::parse("cyclic:9")), z9_path);
              save(fixture_non_moufang(), fix_path);
              save(build(ConstructionSpec::parse("product:cyclic:5,cml81")),
                   p405_path);
              const std::vector<std::string> commands = {
                  "verify " + c81_path,
                  "verify " + fix_path,
                  "identities " + fix_path,
                  "series " + c81_path + " --kind derived",
                  "series " + c81_path + " --kind upper",
                  "subloops " + c81_path,
                  "subloops " + z9_path + " --normal-only",
                  "decompose " + p405_path,
                  "theorems " + c81_path,
                  "classify-symbolic --d 1 --k " + c81_path,
                  "make --construction cml81 -o " + (dir / "out.json").string(),
              };
              bool ok = true;
              for (const auto& cmd : commands) {
                int code1 = 0, code2 = 0;
                const std::string out1 = run_capture(cmd, &code1);
                const std::string out2 = run_capture(cmd, &code2);
                const bool same =
                    !out1.empty() && out1 == out2 && code1 == code2;
                if (!same) {
                  d << "mismatch on: " << cmd << "; ";
                }
                ok &= same;
              }
              fs::remove_all(dir);
              d << commands.size() << " commands, two runs each";
              return ok;
            });

  std::printf("%d of 13 criteria passed\n", 13 - g_failures);
  return g_failures;
}
