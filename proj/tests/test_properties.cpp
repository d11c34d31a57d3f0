#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gen.hpp"
#include "naive.hpp"
#include "permutiple/enumeration.hpp"
#include "permutiple/io.hpp"
#include "properties.hpp"

using namespace permutiple;

namespace {

const props::Pool& pool() {
  static const props::Pool p = [] {
    gen::Source src(20240611);
    return props::make_pool(src, 12, 40);
  }();
  return p;
}

void expect_ok(const props::Outcome& o) {
  EXPECT_GT(o.cases, 0) << o.name;
  EXPECT_EQ(o.failed, 0) << o.name << ": " << o.failed << "/" << o.cases
                         << " failed, first: " << o.example;
}

std::set<std::string> digit_set(const std::vector<SearchResult>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(to_compact_string(r.permutiple.digits()));
  return out;
}

std::set<std::string> digit_set(const std::vector<PermutipleRecord>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(to_compact_string(r.digits()));
  return out;
}

}  // namespace

TEST(DigitProperties, LambdaResidue) {
  for (int b : {2, 3, 7, 10, 16}) {
    for (long long x = -1'000'000; x <= 1'000'000; x += (b == 10 ? 1 : 997)) {
      const int r = lambda_residue(x, b);
      ASSERT_GE(r, 0);
      ASSERT_LT(r, b);
      ASSERT_EQ((x - r) % b, 0);
    }
  }
}

TEST(DigitProperties, VerifyMatchesIntegerArithmetic) {
  gen::Source src(11);
  for (int i = 0; i < 3000; ++i) {
    const auto [n, b] = src.params(12);
    const auto d = src.digits(b, 7);
    const auto sigma = src.permutation(d.size());
    std::vector<int> pre(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) pre[j] = d[static_cast<std::size_t>(sigma(j))];
    const auto pd = DigitString(b, pre).msf();
    const bool want = naive::value(d.msf(), b) == n * naive::value(pd, b);
    const auto r = verify_permutiple(d, sigma, n);
    ASSERT_EQ(r.has_value(), want) << to_compact_string(d) << " " << to_string(sigma);
  }
}

TEST(DigitProperties, RecordsSatisfyDefinitionAndCarryBound) {
  for (const auto& r : pool().records) {
    EXPECT_EQ(value(r.digits()), r.multiplier() * value(r.preimage()));
    EXPECT_EQ(r.carries().front(), 0);
    EXPECT_EQ(r.carries().back(), 0);
    for (std::size_t j = 0; j < r.length(); ++j) {
      EXPECT_LE(r.carries()[j], r.multiplier() - 1);
      EXPECT_EQ(r.base() * r.carries()[j + 1] - r.carries()[j],
                r.multiplier() * r.preimage()[j] - r.digits()[j]);
    }
  }
}

TEST(GraphProperties, MotherGraphSymmetricForAllSmallBases) {
  for (int b = 3; b <= 16; ++b) {
    for (int n = 2; n < b; ++n) {
      const auto m = build_mother_graph(n, b);
      EXPECT_EQ(reflect_digit_graph(m), m);
    }
  }
}

TEST(GraphProperties, PermutipleGraphsLieInTheMotherGraph) {
  for (const auto& r : pool().records) {
    EXPECT_TRUE(graph_of_permutiple(r).is_subgraph_of(build_mother_graph(r.multiplier(), r.base())));
    EXPECT_TRUE(is_cycle_union(graph_of_permutiple(r)));
  }
}

TEST(GraphProperties, CyclesMatchBruteForceOnRandomGraphs) {
  gen::Source src(5);
  for (int i = 0; i < 200; ++i) {
    const int b = src.uniform(2, 6);
    const auto g = src.graph(b, src.uniform(10, 60));
    std::set<naive::Pair> es;
    for (auto e : g.edges()) es.insert({e.from, e.to});
    const auto cs = enumerate_cycles(g);
    std::set<std::vector<int>> got;
    for (const auto& c : cs) got.insert(c.vertices());
    ASSERT_EQ(got.size(), cs.size());
    ASSERT_EQ(got, naive::cycles(es, b));
    std::set<DigitEdge> on_cycle;
    for (const auto& c : cs) {
      for (auto e : c.edges()) on_cycle.insert(e);
    }
    EXPECT_EQ(is_cycle_union(g), on_cycle == g.edges());
  }
}

TEST(GraphProperties, ReflectionPermutesMotherCycles) {
  for (auto [n, b] : {std::pair{2, 5}, {3, 7}, {4, 10}, {5, 8}}) {
    const auto cs = enumerate_cycles(build_mother_graph(n, b), 4);
    std::set<DigitCycle> all(cs.begin(), cs.end()), image;
    for (const auto& c : cs) image.insert(reflect_cycle(c, b));
    EXPECT_EQ(image, all);
  }
}

TEST(StateProperties, LabelsPartitionTheMotherGraph) {
  for (int b = 3; b <= 16; ++b) {
    for (int n = 2; n < b; ++n) {
      const auto g = build_state_graph(n, b);
      std::set<DigitEdge> seen;
      std::size_t total = 0;
      for (const auto& [k, labels] : g.edges()) {
        total += labels.size();
        seen.insert(labels.begin(), labels.end());
        for (auto l : labels) {
          EXPECT_EQ(naive::transition(l.from, l.to, n, b), k);
        }
      }
      EXPECT_EQ(total, seen.size());
      EXPECT_EQ(seen, build_mother_graph(n, b).edges());
      EXPECT_EQ(reflect_state_graph(g), g);
    }
  }
}

TEST(StateProperties, WalkOfEveryRecordIsItsCarrySequence) {
  for (const auto& r : pool().records) {
    const auto w = walk_states(string_of(r), r.multiplier(), r.base());
    ASSERT_TRUE(w.ok());
    EXPECT_EQ(w.states, r.carries());
  }
}

TEST(ReflectionProperties, Involutions) {
  gen::Source src(1);
  expect_ok(props::reflection_involutions(src, 150, 12));
}

TEST(ReflectionProperties, UnionDistribution) {
  gen::Source src(2);
  expect_ok(props::union_distribution(src, 150, 12));
}

TEST(ReflectionProperties, CycleImagesCommute) {
  gen::Source src(3);
  expect_ok(props::cycle_image_commutes(src, 200, 12));
}

TEST(ReflectionProperties, StrongConnectivity) {
  gen::Source src(4);
  expect_ok(props::strong_connectivity(src, 100, 12));
}

TEST(ReflectionProperties, ThreeWayEquivalence) {
  gen::Source src(6);
  expect_ok(props::three_way_reflection(src, pool(), 300));
}

TEST(ReflectionProperties, SymmetricClosure) {
  gen::Source src(7);
  expect_ok(props::closure_properties(src, pool(), 200));
}

TEST(SearchProperties, FindMatchesOracleOnSmallParameters) {
  for (auto [n, b] : {std::pair{2, 4}, {3, 4}, {2, 5}, {3, 5}, {4, 5}, {2, 6}, {4, 10}}) {
    const std::size_t top = b <= 6 ? 6 : 5;
    for (std::size_t len = 1; len <= top; ++len) {
      for (bool lz : {true, false}) {
        EXPECT_EQ(digit_set(find_permutiples(n, b, len, lz)),
                  digit_set(brute_force_oracle(n, b, len, lz)))
            << n << "," << b << "," << len << "," << lz;
      }
    }
  }
}

TEST(SearchProperties, InputsDecomposeIntoMotherCycles) {
  for (const auto& r : find_permutiples(3, 7, 5, true)) {
    const auto cm = decompose_into_cycles(r.string);
    const auto m = build_mother_graph(3, 7);
    for (const auto& [c, k] : cm.parts) {
      for (auto e : c.edges()) EXPECT_TRUE(m.contains(e));
    }
    EXPECT_EQ(cm.edges(), r.cycle_multiset.edges());
  }
}

TEST(SearchProperties, FeasibilityIsExactOnSmallUnions) {
  gen::Source src(9);
  int feasible = 0, infeasible = 0;
  for (int i = 0; i < 300; ++i) {
    const auto [n, b] = src.params(7);
    const auto inv = enumerate_cycles(build_mother_graph(n, b), 3);
    std::vector<DigitCycle> cs;
    std::size_t edges = 0;
    for (int k = src.uniform(1, 4); k > 0; --k) {
      const auto& c = inv[static_cast<std::size_t>(src.uniform(0, static_cast<int>(inv.size()) - 1))];
      if (edges + c.size() > 8) break;
      cs.push_back(c);
      edges += c.size();
    }
    if (cs.empty()) continue;
    const auto d = multi_image(cs, n, b);
    std::vector<naive::Pair> labels;
    for (const auto& t : d.transitions()) labels.push_back({t.label.from, t.label.to});
    const auto ref = naive::orderings(labels, n, b);
    if (check_feasible(d)) {
      ++feasible;
      const auto got = eulerian_strings(d);
      std::vector<std::vector<naive::Pair>> as_pairs;
      for (const auto& s : got) {
        std::vector<naive::Pair> p;
        for (auto e : s) p.push_back({e.from, e.to});
        as_pairs.push_back(p);
      }
      EXPECT_FALSE(got.empty());
      std::sort(as_pairs.begin(), as_pairs.end());
      auto want = ref;
      std::sort(want.begin(), want.end());
      EXPECT_EQ(as_pairs, want);
      EXPECT_EQ(expected_string_count(d), got.size());
    } else {
      ++infeasible;
      EXPECT_TRUE(ref.empty()) << n << "," << b;
    }
  }
  EXPECT_GT(feasible, 10);
  EXPECT_GT(infeasible, 10);
}

TEST(SearchProperties, DeterministicAcrossModes) {
  for (auto [n, b, len] : {std::tuple{4, 10, 5}, {3, 4, 6}, {2, 7, 5}}) {
    const auto a = find_permutiples(n, b, len, true);
    const auto s = find_permutiples_serial(n, b, len, true);
    ASSERT_EQ(a.size(), s.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(io::record_line(a[i].permutiple), io::record_line(s[i].permutiple));
    }
  }
}

TEST(SymmetryProperties, SiblingsVerifyWithReflectedCarries) {
  for (const auto& r : pool().records) {
    const auto len = r.length();
    for (const auto& s : reflective_siblings(r)) {
      for (auto j : s.indices) {
        const auto sib = reflective_sibling(r, j);
        EXPECT_EQ(value(sib.digits()), r.multiplier() * value(sib.preimage()));
        for (std::size_t i = 0; i < len; ++i) {
          EXPECT_EQ(sib.carries()[i], r.multiplier() - 1 - r.carries()[(i + j) % len]);
        }
      }
    }
    for (const auto& s : rotational_siblings(r)) {
      EXPECT_EQ(value(s.record.digits()), r.multiplier() * value(s.record.preimage()));
    }
  }
}

TEST(SymmetryProperties, CoarseConjugacyIsAnEquivalence) {
  const auto seed = io::verify_seed(io::parse_seed("4x10:727119288=4*181779822"));
  const auto members = enumerate_class_members(seed);
  for (const auto& a : members) {
    EXPECT_TRUE(coarse_conjugate(a, a));
    for (const auto& b : members) {
      EXPECT_EQ(coarse_conjugate(a, b), coarse_conjugate(b, a));
      if (!coarse_conjugate(a, b)) continue;
      for (const auto& c : members) {
        if (coarse_conjugate(b, c)) EXPECT_TRUE(coarse_conjugate(a, c));
      }
    }
  }
}

TEST(SymmetryProperties, FourWayAgreement) {
  expect_ok(props::four_way_agreement(pool(), 20000));
}

TEST(SymmetryProperties, SequenceSymmetriesProduceNewStrings) {
  for (const auto& r : pool().records) {
    std::set<InputString> seen{string_of(r)};
    for (const auto& phi : symmetries_fixing_sequence(r)) {
      const auto out = apply_symmetry(r, phi);
      ASSERT_TRUE(out);
      EXPECT_EQ(state_sequence(*out), state_sequence(r));
      EXPECT_TRUE(seen.insert(string_of(*out)).second);
    }
  }
}

TEST(WalkProperties, ReflectionAndRotation) {
  gen::Source src(8);
  for (int i = 0; i < 300; ++i) {
    const auto& r = props::pick(src, pool());
    const auto w = walk_of(r);
    const auto l = static_cast<long long>(w.states.size());
    EXPECT_EQ(reflect_walk(reflect_walk(w)), w);
    EXPECT_EQ(rotate_walk(w, l), w);
    EXPECT_TRUE(is_closed_walk(reflect_walk(w)));
    // Value reflection commutes with rotation.
    EXPECT_EQ(reflect_walk(rotate_walk(reflect_walk(w), 1)), rotate_walk(w, 1));
  }
}

TEST(WalkProperties, ConjugatedRotationIsNotTheInverse) {
  // The base-4 walk 0,1,2,2,1,0 is not invariant under a two-step shift, so
  // beta alpha beta and alpha^-1 disagree on it.
  const auto w = walk_of(*verify_equation(DigitString::from_msf(4, std::vector<int>{3, 1, 1, 0, 2, 2}),
                                          DigitString::from_msf(4, std::vector<int>{1, 0, 1, 2, 3, 2}),
                                          3));
  EXPECT_NE(reflect_walk(rotate_walk(reflect_walk(w), 1)), rotate_walk(w, -1));
}
