#pragma once

// Reflections of classes, symmetric closures, dihedral siblings, symmetries
// that fix a state-transition sequence, and coarse conjugacy.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permutiple/digits.hpp"
#include "permutiple/enumeration.hpp"
#include "permutiple/mother_graph.hpp"
#include "permutiple/state_machine.hpp"

namespace permutiple {

class NoReflectionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A sibling together with every index j that produces it.
struct Sibling {
  std::vector<std::size_t> indices;
  PermutipleRecord record;
};

// Sibling at one index. Throw PreconditionError unless c_j = n-1 (resp. 0).
PermutipleRecord reflective_sibling(const PermutipleRecord& rec, std::size_t j);
PermutipleRecord rotational_sibling(const PermutipleRecord& rec, std::size_t j);

// One entry per distinct sibling, ordered by first witnessing index.
std::vector<Sibling> reflective_siblings(const PermutipleRecord& rec);
// Includes j = 0, which returns rec itself.
std::vector<Sibling> rotational_siblings(const PermutipleRecord& rec);
// Both kinds, deduplicated and sorted by digits then preimage.
std::vector<PermutipleRecord> dihedral_siblings(const PermutipleRecord& rec);

// A class, identified by its graph G_C, with the union of cycle images of the
// cycles of G_C cached.
class ClassSpec {
 public:
  // Throws std::invalid_argument unless g is a union of mother-graph cycles.
  static ClassSpec from_graph(int multiplier, DigitGraph g);
  static ClassSpec of(const PermutipleRecord& rec);

  int multiplier() const { return multiplier_; }
  int base() const { return graph_.base(); }
  const DigitGraph& graph() const { return graph_; }
  const std::vector<DigitCycle>& cycles() const { return cycles_; }
  const StateGraph& images() const { return images_; }

  bool operator==(const ClassSpec& other) const {
    return multiplier_ == other.multiplier_ && graph_ == other.graph_;
  }

 private:
  ClassSpec(int multiplier, DigitGraph graph, std::vector<DigitCycle> cycles,
            StateGraph images);

  int multiplier_;
  DigitGraph graph_;
  std::vector<DigitCycle> cycles_;
  StateGraph images_;
};

// State n-1 is a vertex of the image union.
bool class_reflection_exists(const ClassSpec& spec);
// Throws NoReflectionError when class_reflection_exists is false.
ClassSpec reflect_class(const ClassSpec& spec);
ClassSpec symmetric_closure(const ClassSpec& spec);
bool is_symmetric_class(const ClassSpec& spec);
// The image union equals its own reflection.
bool images_symmetric(const ClassSpec& spec);

// A permutiple in the reflected class: the first reflective sibling, if any.
std::optional<PermutipleRecord> reflection_witness(const PermutipleRecord& rec);

struct StateSequence {
  // (c_0,c_1), (c_1,c_2), ..., (c_k,c_0)
  std::vector<std::pair<int, int>> transitions;
  bool operator==(const StateSequence&) const = default;
};

StateSequence state_sequence(const PermutipleRecord& rec);

// The permutiple string (d_0, d_sigma(0)) ... (d_k, d_sigma(k)).
InputString string_of(const PermutipleRecord& rec);

// Input i of the new string is input phi(i) of rec's string, reflected first
// if requested. Returns nullopt when the result is not a permutiple string.
std::optional<PermutipleRecord> apply_symmetry(const PermutipleRecord& rec,
                                               const Permutation& phi,
                                               bool reflect = false);

// One representative for each distinct rearrangement of labels among
// positions sharing a transition, excluding rec's own string. Sorted.
std::vector<Permutation> symmetries_fixing_sequence(const PermutipleRecord& rec);

// Equal permutiple graphs. Throws std::invalid_argument for different
// parameters or digit multisets.
bool coarse_conjugate(const PermutipleRecord& a, const PermutipleRecord& b);
// pi_a tau_a pi_a^-1 == pi_b tau_b pi_b^-1 relative to a's digits. Only for
// strings without repeated digits; throws PreconditionError otherwise.
bool fine_conjugate(const PermutipleRecord& a, const PermutipleRecord& b);

// Every permutiple with rec's digit multiset whose graph lies inside G_rec.
std::vector<PermutipleRecord> enumerate_class_members(
    const PermutipleRecord& rec, bool allow_leading_zero = true,
    Execution mode = Execution::parallel);

// Checks the reflective sibling at j against its re-indexing through the
// sorted digit list. Throws PreconditionError unless c_j = n-1 and the digit
// multiset is closed under reflection.
bool check_sym_rev(const PermutipleRecord& rec, std::size_t j);

// A closed walk of length l: states c_0..c_{l-1} and the label driving
// c_i -> c_{i+1 mod l}.
struct ClosedWalk {
  int multiplier;
  int base;
  std::vector<int> states;
  InputString labels;
  bool operator==(const ClosedWalk&) const = default;
};

ClosedWalk walk_of(const PermutipleRecord& rec);
// alpha: i -> i+1.
ClosedWalk rotate_walk(const ClosedWalk& w, long long steps = 1);
// beta: states and labels reflected in place.
ClosedWalk reflect_walk(const ClosedWalk& w);
// Every label enables its transition, wrapping around.
bool is_closed_walk(const ClosedWalk& w);
bool is_l_walk(const ClosedWalk& w);

}  // namespace permutiple
