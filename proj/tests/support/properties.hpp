#pragma once

// Randomized property checks shared by the property tests and the acceptance
// runner. Each returns how many cases ran and the first counterexample.

#include <algorithm>
#include <optional>
#include <tuple>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "permutiple/enumeration.hpp"
#include "permutiple/mother_graph.hpp"
#include "permutiple/state_machine.hpp"
#include "permutiple/symmetry.hpp"

namespace props {

struct Outcome {
  std::string name;
  int cases = 0;
  int failed = 0;
  std::string example;
  std::string detail;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failed++ == 0) example = what;
  }
  bool ok() const { return failed == 0 && cases > 0; }
};

using namespace permutiple;

inline std::string show(const PermutipleRecord& r) { return to_equation_string(r); }

inline std::string show(const ClosedWalk& w) {
  std::ostringstream os;
  os << "states";
  for (int c : w.states) os << ' ' << c;
  os << " labels " << to_string(w.labels);
  return os.str();
}

// Permutiples for a spread of small (n, b, length), b <= max_base.
struct Pool {
  std::vector<PermutipleRecord> records;
};

inline Pool make_pool(gen::Source& src, int max_base, int draws) {
  Pool pool;
  for (int i = 0; i < draws; ++i) {
    const auto [n, b] = src.params(max_base);
    const auto len = static_cast<std::size_t>(src.uniform(2, b <= 6 ? 6 : 4));
    for (auto& r : gen::population(n, b, len)) pool.records.push_back(r);
  }
  return pool;
}

inline const PermutipleRecord& pick(gen::Source& src, const Pool& pool) {
  return pool.records[static_cast<std::size_t>(
      src.uniform(0, static_cast<int>(pool.records.size()) - 1))];
}

inline Outcome reflection_involutions(gen::Source& src, int cases, int max_base) {
  Outcome o{"reflection involutions"};
  for (int i = 0; i < cases; ++i) {
    const auto [n, b] = src.params(max_base);
    const auto d = src.digits(b, 12);
    o.check(reflect_digits(reflect_digits(d)) == d, "digits " + to_compact_string(d));
    const auto g = src.graph(b, 20);
    o.check(reflect_digit_graph(reflect_digit_graph(g)) == g, "digit graph");
    const auto inv = enumerate_cycles(build_mother_graph(n, b), 3);
    const auto cs = src.mother_cycles(inv, 3);
    const auto m = multi_image(cs, n, b);
    o.check(reflect_multigraph(reflect_multigraph(m)) == m, "multigraph");
    const auto s = to_state_graph(m);
    o.check(reflect_state_graph(reflect_state_graph(s)) == s, "state graph");
  }
  return o;
}

inline Outcome union_distribution(gen::Source& src, int cases, int max_base) {
  Outcome o{"reflection distributes over unions"};
  for (int i = 0; i < cases; ++i) {
    const auto [n, b] = src.params(max_base);
    const auto g1 = src.graph(b, 15), g2 = src.graph(b, 15);
    o.check(reflect_digit_graph(g1.unite(g2)) ==
                reflect_digit_graph(g1).unite(reflect_digit_graph(g2)),
            "digit graphs in base " + std::to_string(b));

    const auto inv = enumerate_cycles(build_mother_graph(n, b), 4);
    std::vector<StateGraph> parts, reflected;
    for (const auto& c : src.mother_cycles(inv, 4)) {
      parts.push_back(cycle_image(c, n, b));
      reflected.push_back(reflect_state_graph(parts.back()));
    }
    o.check(reflect_state_graph(union_images(parts)) == union_images(reflected),
            "state subgraphs for (" + std::to_string(n) + "," + std::to_string(b) + ")");
  }
  return o;
}

inline Outcome cycle_image_commutes(gen::Source& src, int cases, int max_base) {
  Outcome o{"cycle images commute with reflection"};
  for (int i = 0; i < cases; ++i) {
    const auto [n, b] = src.params(max_base);
    const auto inv = enumerate_cycles(build_mother_graph(n, b), 5);
    const auto& c = inv[static_cast<std::size_t>(src.uniform(0, static_cast<int>(inv.size()) - 1))];
    const auto rc = reflect_cycle(c, b);
    o.check(std::find(inv.begin(), inv.end(), rc) != inv.end(),
            "reflected cycle leaves the mother graph: " + to_string(c));
    o.check(reflect_state_graph(cycle_image(c, n, b)) == cycle_image(rc, n, b),
            "cycle " + to_string(c) + " in (" + std::to_string(n) + "," + std::to_string(b) + ")");
  }
  return o;
}

inline Outcome strong_connectivity(gen::Source& src, int cases, int max_base) {
  Outcome o{"strong connectivity survives reflection"};
  int tries = 0;
  while (o.cases < cases && tries++ < 50 * cases) {
    const auto [n, b] = src.params(max_base);
    const auto inv = enumerate_cycles(build_mother_graph(n, b), 4);
    std::vector<StateGraph> parts;
    for (const auto& c : src.mother_cycles(inv, 5)) parts.push_back(cycle_image(c, n, b));
    const auto u = union_images(parts);
    if (!is_strongly_connected(u)) continue;
    o.check(is_strongly_connected(reflect_state_graph(u)), "union in base " + std::to_string(b));
  }
  return o;
}

// Item 3 (state n-1 in the image union), item 2 (state 0 in the reflected
// union) and item 1 (a permutiple with the reflected graph, built by the
// reflect-then-rotate construction) agree.
inline Outcome three_way_reflection(gen::Source& src, const Pool& pool, int cases) {
  Outcome o{"three-way reflection equivalence"};
  for (int i = 0; i < cases; ++i) {
    const auto& p = pick(src, pool);
    const auto spec = ClassSpec::of(p);
    const bool item3 = class_reflection_exists(spec);
    const bool item2 = reflect_state_graph(spec.images()).has_state(0);
    const auto w = reflection_witness(p);
    const bool item1 = w && graph_of_permutiple(*w) == reflect_digit_graph(spec.graph());
    o.check(item1 == item2 && item2 == item3, show(p));
  }
  return o;
}

inline Outcome closure_properties(gen::Source& src, const Pool& pool, int cases) {
  Outcome o{"symmetric closure"};
  for (int i = 0; i < cases; ++i) {
    const auto& p = pick(src, pool);
    const auto spec = ClassSpec::of(p);
    if (!class_reflection_exists(spec)) {
      bool threw = false;
      try {
        symmetric_closure(spec);
      } catch (const NoReflectionError&) {
        threw = true;
      }
      o.check(threw, "closure without reflection " + show(p));
      continue;
    }
    const auto c = symmetric_closure(spec);
    const bool ok = is_symmetric_class(c) && images_symmetric(c) &&
                    symmetric_closure(c) == c &&
                    spec.graph().is_subgraph_of(c.graph()) &&
                    reflect_digit_graph(spec.graph()).is_subgraph_of(c.graph()) &&
                    is_symmetric_class(spec) == images_symmetric(spec) &&
                    is_symmetric_class(spec) == (spec == c);
    o.check(ok, show(p));
  }
  return o;
}

// A permutation phi of rec's inputs producing other's string, if any.
inline std::optional<Permutation> symmetry_between(const PermutipleRecord& a,
                                                   const PermutipleRecord& b) {
  const auto sa = string_of(a), sb = string_of(b);
  std::map<DigitEdge, std::vector<int>> where;
  for (std::size_t i = sa.size(); i-- > 0;) where[sa[i]].push_back(static_cast<int>(i));
  std::vector<int> phi(sb.size());
  for (std::size_t i = 0; i < sb.size(); ++i) {
    auto& pool = where[sb[i]];
    if (pool.empty()) return std::nullopt;
    phi[i] = pool.back();
    pool.pop_back();
  }
  return Permutation(phi);
}

// For every pair of records sharing a digit multiset: a symmetry maps one
// string onto the other, the graphs are equal, they are coarsely conjugate,
// and each lies in the other's class.
inline Outcome four_way_agreement(const Pool& pool, int max_cases) {
  Outcome o{"four-way class equivalence"};
  int same = 0, differ = 0;
  std::map<std::tuple<int, int, std::vector<int>>, std::vector<const PermutipleRecord*>> groups;
  for (const auto& r : pool.records) {
    groups[{r.multiplier(), r.base(), r.digits().counts()}].push_back(&r);
  }
  for (const auto& [key, rs] : groups) {
    for (std::size_t i = 0; i < rs.size() && o.cases < max_cases; ++i) {
      for (std::size_t j = i; j < rs.size() && o.cases < max_cases; ++j) {
        const auto& a = *rs[i];
        const auto& b = *rs[j];
        const auto phi = symmetry_between(a, b);
        const bool sym = phi && apply_symmetry(a, *phi) &&
                         same_product(*apply_symmetry(a, *phi), b);
        const auto ga = graph_of_permutiple(a), gb = graph_of_permutiple(b);
        const bool graphs = ga == gb;
        ++(graphs ? same : differ);
        const bool coarse = coarse_conjugate(a, b);
        const bool members = gb.is_subgraph_of(ga) && ga.is_subgraph_of(gb);
        o.check(sym == graphs && graphs == coarse && coarse == members,
                show(a) + " vs " + show(b) + " (symmetry " + (sym ? "yes" : "no") +
                    ", graphs " + (graphs ? "equal" : "differ") + ")");
      }
    }
  }
  o.detail = std::to_string(same) + " same-graph pairs, " + std::to_string(differ) + " different";
  return o;
}

// beta^2 = 1, alpha^l = 1 and beta alpha beta = alpha^-1, taken literally.
inline Outcome dihedral_identities(gen::Source& src, const Pool& pool, int cases) {
  Outcome o{"dihedral identities"};
  for (int i = 0; i < cases; ++i) {
    const auto w = walk_of(pick(src, pool));
    const auto l = static_cast<long long>(w.states.size());
    o.check(reflect_walk(reflect_walk(w)) == w, "beta^2 on " + show(w));
    o.check(rotate_walk(w, l) == w, "alpha^l on " + show(w));
    o.check(reflect_walk(rotate_walk(reflect_walk(w), 1)) == rotate_walk(w, -1),
            "beta alpha beta = alpha^-1 on " + show(w));
  }
  return o;
}

}  // namespace props
