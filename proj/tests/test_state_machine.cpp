#include <gtest/gtest.h>

#include <random>

#include "known.hpp"
#include "naive.hpp"
#include "permutiple/state_machine.hpp"
#include "permutiple/symmetry.hpp"

using namespace permutiple;

namespace {

StateMultigraph triples(int n, int b, std::vector<LabeledTransition> ts) {
  StateMultigraph g(n, b);
  for (auto t : ts) g.add(t);
  return g;
}

}  // namespace

TEST(Mu, FourTen) {
  EXPECT_EQ(mu({2, 8}, 4, 10), std::make_pair(0, 3));
  EXPECT_EQ(mu({0, 0}, 4, 10), std::make_pair(0, 0));
  EXPECT_EQ(mu({9, 9}, 4, 10), std::make_pair(3, 3));
  EXPECT_THROW(mu({9, 1}, 4, 10), std::invalid_argument);
}

TEST(Mu, AgreesWithCarryEquation) {
  for (int b = 3; b <= 16; ++b) {
    for (int n = 2; n < b; ++n) {
      for (int x = 0; x < b; ++x) {
        for (int y = 0; y < b; ++y) {
          const auto want = naive::transition(x, y, n, b);
          if (want) {
            EXPECT_EQ(mu({x, y}, n, b), *want);
          } else {
            EXPECT_THROW(mu({x, y}, n, b), std::invalid_argument);
          }
        }
      }
    }
  }
}

TEST(StateGraph, FourTenMatchesDiagram) {
  const auto g = build_state_graph(4, 10);
  EXPECT_EQ(g, known::state_graph(4, 10, known::hs_4_10));
  EXPECT_EQ(g.edges().size(), 16u);
  EXPECT_EQ(g.label_count(), 40u);
}

TEST(StateGraph, ThreeFourMatchesDiagram) {
  EXPECT_EQ(build_state_graph(3, 4), known::state_graph(3, 4, known::hs_3_4));
}

TEST(StateGraph, TwoThreePartitionsLabels) {
  const auto g = build_state_graph(2, 3);
  EXPECT_EQ(g.states(), (std::set<int>{0, 1}));
  std::set<DigitEdge> seen;
  for (const auto& [k, labels] : g.edges()) {
    for (auto l : labels) EXPECT_TRUE(seen.insert(l).second) << to_string(l);
  }
  EXPECT_EQ(seen, build_mother_graph(2, 3).edges());
}

TEST(Multigraph, OneTriplePerMotherEdge) {
  EXPECT_EQ(build_state_multigraph(4, 10).size(), 40u);
  EXPECT_EQ(build_state_multigraph(3, 4).size(), 12u);
  std::set<DigitEdge> labels;
  const auto d = build_state_multigraph(5, 9);
  for (const auto& t : d.transitions()) labels.insert(t.label);
  EXPECT_EQ(labels, build_mother_graph(5, 9).edges());
}

TEST(Multigraph, RejectsInconsistentTriple) {
  StateMultigraph g(4, 10);
  EXPECT_THROW(g.add({0, 0, {2, 8}}), std::invalid_argument);
  EXPECT_NO_THROW(g.add({0, 3, {2, 8}}));
}

TEST(CycleImage, KnownCycles) {
  const auto g1 = cycle_image(DigitCycle({2, 8}), 4, 10);
  EXPECT_EQ(g1.states(), (std::set<int>{0, 3}));
  EXPECT_EQ(g1.edges().at({0, 0}), (std::set<DigitEdge>{{8, 2}}));
  EXPECT_EQ(g1.edges().at({0, 3}), (std::set<DigitEdge>{{2, 8}}));
  EXPECT_EQ(g1.edges().size(), 2u);

  const auto g2 = cycle_image(DigitCycle({1, 7}), 4, 10);
  EXPECT_EQ(g2.states(), (std::set<int>{0, 3}));
  EXPECT_EQ(g2.edges().at({3, 3}), (std::set<DigitEdge>{{1, 7}}));
  EXPECT_EQ(g2.edges().at({3, 0}), (std::set<DigitEdge>{{7, 1}}));
}

TEST(CycleImage, ThreeCycle) {
  const auto g = cycle_image(DigitCycle({1, 7, 6}), 4, 10);
  EXPECT_EQ(g.states(), (std::set<int>{0, 2, 3}));
  EXPECT_EQ(g.edges().at({3, 3}), (std::set<DigitEdge>{{1, 7}}));
  EXPECT_EQ(g.edges().at({3, 2}), (std::set<DigitEdge>{{7, 6}}));
  EXPECT_EQ(g.edges().at({2, 0}), (std::set<DigitEdge>{{6, 1}}));
}

TEST(CycleImage, DropsUntouchedStates) {
  const auto g = cycle_image(DigitCycle({9}), 4, 10);
  EXPECT_EQ(g.states(), (std::set<int>{3}));
  EXPECT_THROW(cycle_image(DigitCycle({1, 9}), 4, 10), std::invalid_argument);
}

TEST(MultiImage, LoopAndThreeCycleUnion) {
  EXPECT_EQ(multi_image(DigitCycle({9}), 4, 10), triples(4, 10, {{3, 3, {9, 9}}}));
  const std::vector<DigitCycle> cs{DigitCycle({9}), DigitCycle({2, 8}), DigitCycle({2, 8}),
                                   DigitCycle({1, 7}), DigitCycle({1, 7})};
  const auto d = multi_image(cs, 4, 10);
  EXPECT_EQ(d, triples(4, 10,
                       {{3, 3, {9, 9}}, {0, 0, {8, 2}}, {0, 0, {8, 2}}, {0, 3, {2, 8}},
                        {0, 3, {2, 8}}, {3, 3, {1, 7}}, {3, 3, {1, 7}}, {3, 0, {7, 1}},
                        {3, 0, {7, 1}}}));
  EXPECT_TRUE(multi_image(std::vector<DigitCycle>{}, 4, 10).empty());
}

TEST(Unions, GraphsAndMultigraphs) {
  const std::vector<StateGraph> parts{cycle_image(DigitCycle({9}), 4, 10),
                                      cycle_image(DigitCycle({2, 8}), 4, 10),
                                      cycle_image(DigitCycle({1, 7}), 4, 10)};
  const auto u = union_images(parts);
  EXPECT_EQ(u.label_count(), 5u);
  EXPECT_EQ(u.states(), (std::set<int>{0, 3}));
  EXPECT_EQ(u.edges().at({3, 3}), (std::set<DigitEdge>{{1, 7}, {9, 9}}));

  const auto d1 = multi_image(DigitCycle({2, 8}), 4, 10);
  const auto d2 = multi_image(DigitCycle({1, 7}), 4, 10);
  const std::vector<StateMultigraph> ms{d1, d1, d2};
  EXPECT_EQ(multiset_union(ms).size(), 6u);

  const std::vector<StateMultigraph> with_empty{d1, StateMultigraph(4, 10)};
  EXPECT_EQ(multiset_union(with_empty), d1);
  EXPECT_THROW(union_images(std::vector<StateGraph>{}), std::invalid_argument);
  const std::vector<StateMultigraph> mixed{d1, StateMultigraph(3, 10)};
  EXPECT_THROW(multiset_union(mixed), std::invalid_argument);
}

TEST(Reflect, WholeGraphIsSymmetric) {
  const auto g = build_state_graph(4, 10);
  EXPECT_EQ(reflect_state_graph(g), g);
}

TEST(Reflect, ThreeCycleImage) {
  const auto r = reflect_state_graph(cycle_image(DigitCycle({1, 7, 6}), 4, 10));
  EXPECT_EQ(r.states(), (std::set<int>{0, 1, 3}));
  EXPECT_EQ(r.edges().at({0, 0}), (std::set<DigitEdge>{{8, 2}}));
  EXPECT_EQ(r.edges().at({0, 1}), (std::set<DigitEdge>{{2, 3}}));
  EXPECT_EQ(r.edges().at({1, 3}), (std::set<DigitEdge>{{3, 8}}));
  EXPECT_EQ(r.edges().size(), 3u);
}

TEST(Reflect, MultigraphInvolution) {
  const auto d = build_state_multigraph(3, 7);
  EXPECT_EQ(reflect_multigraph(reflect_multigraph(d)), d);
  EXPECT_EQ(reflect_multigraph(d), d);
}

TEST(Walk, BaseFourExample) {
  const InputString s{{2, 2}, {2, 3}, {0, 2}, {1, 1}, {1, 0}, {3, 1}};
  const auto w = walk_states(s, 3, 4);
  EXPECT_TRUE(w.ok());
  EXPECT_EQ(w.states, (std::vector<int>{0, 1, 2, 2, 1, 0, 0}));
}

TEST(Walk, ReflectedStringStartsAtTheWrongState) {
  auto s = string_of(known::record(4, "86712", "21678"));
  for (auto& e : s) e = {9 - e.from, 9 - e.to};
  const auto w = walk_states(s, 4, 10);
  ASSERT_FALSE(w.ok());
  EXPECT_EQ(*w.failure, 0u);
}

TEST(Walk, EmptyAndFailures) {
  const auto w = walk_states({}, 4, 10);
  EXPECT_TRUE(w.ok());
  EXPECT_EQ(w.states, (std::vector<int>{0}));

  const auto bad = walk_states({{0, 0}, {9, 1}}, 4, 10);
  EXPECT_EQ(bad.failure, std::optional<std::size_t>(1));

  const auto open = walk_states({{2, 8}}, 4, 10);
  EXPECT_EQ(open.failure, std::optional<std::size_t>(1));
  EXPECT_EQ(open.states, (std::vector<int>{0, 3}));
}

TEST(Walk, AgreesWithSchoolbookOnRandomStrings) {
  std::mt19937 rng(7);
  const auto mother = build_mother_graph(4, 10);
  const std::vector<DigitEdge> es(mother.edges().begin(), mother.edges().end());
  for (int trial = 0; trial < 2000; ++trial) {
    InputString s(static_cast<std::size_t>(rng() % 6));
    std::vector<naive::Pair> ps;
    for (auto& e : s) {
      e = es[rng() % es.size()];
      ps.push_back({e.from, e.to});
    }
    const auto w = walk_states(s, 4, 10);
    const auto ref = naive::run_string(ps, 4, 10);
    EXPECT_EQ(w.ok(), ref.has_value()) << to_string(s);
    if (ref) EXPECT_EQ(w.states, *ref);
  }
}

TEST(StrongConnectivity, Cases) {
  EXPECT_TRUE(is_strongly_connected(build_state_graph(4, 10)));
  EXPECT_FALSE(is_strongly_connected(cycle_image(DigitCycle({1, 7, 6}), 4, 10)));
  const std::vector<StateGraph> parts{cycle_image(DigitCycle({1, 7, 6}), 4, 10),
                                      cycle_image(DigitCycle({2, 8}), 4, 10)};
  EXPECT_TRUE(is_strongly_connected(union_images(parts)));
}
