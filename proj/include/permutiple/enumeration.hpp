#pragma once

// Permutiple search: multiset unions of mother-graph cycles, the Eulerian
// feasibility test, circuit enumeration, and an exhaustive brute-force scan
// kept as an independent check.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permutiple/digits.hpp"
#include "permutiple/mother_graph.hpp"
#include "permutiple/state_machine.hpp"

namespace permutiple {

class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class WalkError : public std::invalid_argument {
 public:
  WalkError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class MultisetMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ScanLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cycles with positive multiplicities, sorted by cycle.
struct CycleMultiset {
  std::vector<std::pair<DigitCycle, int>> parts;

  std::size_t total_edges() const;
  // Sorted edge multiset.
  std::vector<DigitEdge> edges() const;

  bool operator==(const CycleMultiset&) const = default;
};

std::string to_string(const CycleMultiset& cm);

struct SearchResult {
  PermutipleRecord permutiple;
  InputString string;
  CycleMultiset cycle_multiset;
};

// Zero state present, in-degree equals out-degree everywhere, and strongly
// connected on the states that carry edges.
bool check_feasible(const StateMultigraph& delta);

// Every distinct label sequence of an Eulerian circuit from state 0, in
// lexicographic order. Throws InfeasibleError when check_feasible fails.
std::vector<InputString> eulerian_strings(const StateMultigraph& delta);

// Splits a balanced edge multiset into simple cycles, greedily following the
// smallest unused edge. Throws std::invalid_argument when some vertex has
// unequal in- and out-degree.
CycleMultiset decompose_into_cycles(std::vector<DigitEdge> edges);

// Reads d_j and d^_j off the left and right components. Throws WalkError when
// the string is not accepted and MultisetMismatchError when the two digit
// multisets differ.
SearchResult string_to_permutiple(const InputString& s, int multiplier,
                                  int base);

// A union as (cycle index, multiplicity) pairs with increasing indices.
using SparseUnion = std::vector<std::pair<std::size_t, int>>;

// All unions with exactly `length` edges, lexicographic in the multiplicity
// vector.
std::vector<SparseUnion> cycle_unions_of_length(
    const std::vector<DigitCycle>& cycles, std::size_t length);

// All unions whose left components have exactly the digit histogram `counts`.
std::vector<SparseUnion> cycle_unions_matching_digits(
    const std::vector<DigitCycle>& cycles, const std::vector<int>& counts);

StateMultigraph union_multigraph(const std::vector<DigitCycle>& cycles,
                                 const SparseUnion& u, int multiplier,
                                 int base);
CycleMultiset to_cycle_multiset(const std::vector<DigitCycle>& cycles,
                                const SparseUnion& u);

enum class Execution { serial, parallel };

// Feasibility filter, Eulerian expansion and conversion for every union.
// Unions with the same edge multiset are expanded once. Output is sorted by
// digits, then preimage, with duplicates removed.
std::vector<SearchResult> realize_unions(const std::vector<DigitCycle>& cycles,
                                         const std::vector<SparseUnion>& unions,
                                         int multiplier, int base,
                                         bool allow_leading_zero,
                                         Execution mode = Execution::parallel);

std::vector<SearchResult> find_permutiples(int multiplier, int base,
                                           std::size_t length,
                                           bool allow_leading_zero);
std::vector<SearchResult> find_permutiples_serial(int multiplier, int base,
                                                  std::size_t length,
                                                  bool allow_leading_zero);

inline constexpr std::uint64_t default_scan_limit = 100'000'000;

// Scans every string of the given length. Throws ScanLimitError when b^length
// exceeds scan_limit.
std::vector<PermutipleRecord> brute_force_oracle(
    int multiplier, int base, std::size_t length, bool allow_leading_zero,
    std::uint64_t scan_limit = default_scan_limit);
std::vector<PermutipleRecord> brute_force_oracle_serial(
    int multiplier, int base, std::size_t length, bool allow_leading_zero,
    std::uint64_t scan_limit = default_scan_limit);

// Eulerian circuits with distinguishable edges, anchored at one fixed edge
// leaving state 0 (BEST theorem). Throws InfeasibleError.
BigInt count_eulerian_circuits(const StateMultigraph& delta);

// Distinct label sequences predicted from the circuit count: every circuit
// can start at any of the outdeg(0) edges leaving state 0, and identical
// parallel edges are indistinguishable.
BigInt expected_string_count(const StateMultigraph& delta);

}  // namespace permutiple
