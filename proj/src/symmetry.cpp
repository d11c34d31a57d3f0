#include "permutiple/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace permutiple {

namespace {

std::size_t wrap(std::size_t i, std::size_t len) { return i % len; }

// psi^-j sigma psi^j
Permutation conjugate_by_rotation(const Permutation& sigma, std::size_t j) {
  const std::size_t len = sigma.size();
  std::vector<int> map(len);
  for (std::size_t i = 0; i < len; ++i) {
    const auto s = static_cast<std::size_t>(sigma(wrap(i + j, len)));
    map[i] = static_cast<int>(wrap(s + len - j % len, len));
  }
  return Permutation(std::move(map));
}

PermutipleRecord must_verify(const DigitString& digits, const Permutation& sigma,
                             int multiplier, const char* what) {
  auto rec = verify_permutiple(digits, sigma, multiplier);
  if (!rec) throw std::logic_error(std::string(what) + " failed to verify");
  return *rec;
}

void merge_sibling(std::vector<Sibling>& out, std::size_t j,
                   PermutipleRecord rec) {
  for (auto& s : out) {
    if (same_product(s.record, rec)) {
      s.indices.push_back(j);
      return;
    }
  }
  out.push_back(Sibling{{j}, std::move(rec)});
}

}  // namespace

PermutipleRecord reflective_sibling(const PermutipleRecord& rec, std::size_t j) {
  const std::size_t len = rec.length();
  if (j >= len || rec.carries()[j] != rec.multiplier() - 1) {
    throw PreconditionError("no reflective sibling at index " + std::to_string(j));
  }
  std::vector<int> d(len);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = rec.base() - 1 - rec.digits()[wrap(i + j, len)];
  }
  return must_verify(DigitString(rec.base(), std::move(d)),
                     conjugate_by_rotation(rec.sigma(), j), rec.multiplier(),
                     "reflective sibling");
}

PermutipleRecord rotational_sibling(const PermutipleRecord& rec, std::size_t j) {
  const std::size_t len = rec.length();
  if (j >= len || rec.carries()[j] != 0) {
    throw PreconditionError("no rotational sibling at index " + std::to_string(j));
  }
  std::vector<int> d(len);
  for (std::size_t i = 0; i < len; ++i) d[i] = rec.digits()[wrap(i + j, len)];
  return must_verify(DigitString(rec.base(), std::move(d)),
                     conjugate_by_rotation(rec.sigma(), j), rec.multiplier(),
                     "rotational sibling");
}

std::vector<Sibling> reflective_siblings(const PermutipleRecord& rec) {
  std::vector<Sibling> out;
  for (std::size_t j = 1; j < rec.length(); ++j) {
    if (rec.carries()[j] == rec.multiplier() - 1) {
      merge_sibling(out, j, reflective_sibling(rec, j));
    }
  }
  return out;
}

std::vector<Sibling> rotational_siblings(const PermutipleRecord& rec) {
  std::vector<Sibling> out;
  for (std::size_t j = 0; j < rec.length(); ++j) {
    if (rec.carries()[j] == 0) merge_sibling(out, j, rotational_sibling(rec, j));
  }
  return out;
}

std::vector<PermutipleRecord> dihedral_siblings(const PermutipleRecord& rec) {
  std::vector<PermutipleRecord> out;
  for (auto& s : rotational_siblings(rec)) out.push_back(std::move(s.record));
  for (auto& s : reflective_siblings(rec)) out.push_back(std::move(s.record));
  std::sort(out.begin(), out.end(), record_less);
  out.erase(std::unique(out.begin(), out.end(), same_product), out.end());
  return out;
}

ClassSpec::ClassSpec(int multiplier, DigitGraph graph,
                     std::vector<DigitCycle> cycles, StateGraph images)
    : multiplier_(multiplier),
      graph_(std::move(graph)),
      cycles_(std::move(cycles)),
      images_(std::move(images)) {}

ClassSpec ClassSpec::from_graph(int multiplier, DigitGraph g) {
  check_parameters(multiplier, g.base());
  if (!g.is_subgraph_of(build_mother_graph(multiplier, g.base()))) {
    throw std::invalid_argument("class graph is not a subgraph of the mother graph");
  }
  if (!is_cycle_union(g)) {
    throw std::invalid_argument("class graph is not a union of cycles");
  }
  auto cycles = enumerate_cycles(g);
  StateGraph images(multiplier, g.base());
  for (const auto& c : cycles) {
    const auto img = cycle_image(c, multiplier, g.base());
    for (const auto& [key, labels] : img.edges()) {
      for (const auto& l : labels) images.add_label(key.first, key.second, l);
    }
  }
  return ClassSpec(multiplier, std::move(g), std::move(cycles), std::move(images));
}

ClassSpec ClassSpec::of(const PermutipleRecord& rec) {
  return from_graph(rec.multiplier(), graph_of_permutiple(rec));
}

bool class_reflection_exists(const ClassSpec& spec) {
  return spec.images().has_state(spec.multiplier() - 1);
}

ClassSpec reflect_class(const ClassSpec& spec) {
  if (!class_reflection_exists(spec)) {
    throw NoReflectionError("state " + std::to_string(spec.multiplier() - 1) +
                            " is not a vertex of the class image union");
  }
  return ClassSpec::from_graph(spec.multiplier(), reflect_digit_graph(spec.graph()));
}

ClassSpec symmetric_closure(const ClassSpec& spec) {
  const auto reflected = reflect_class(spec);
  return ClassSpec::from_graph(spec.multiplier(),
                               spec.graph().unite(reflected.graph()));
}

bool is_symmetric_class(const ClassSpec& spec) {
  return reflect_digit_graph(spec.graph()) == spec.graph();
}

bool images_symmetric(const ClassSpec& spec) {
  return reflect_state_graph(spec.images()) == spec.images();
}

std::optional<PermutipleRecord> reflection_witness(const PermutipleRecord& rec) {
  for (std::size_t j = 1; j < rec.length(); ++j) {
    if (rec.carries()[j] == rec.multiplier() - 1) {
      return reflective_sibling(rec, j);
    }
  }
  return std::nullopt;
}

StateSequence state_sequence(const PermutipleRecord& rec) {
  StateSequence s;
  const auto& c = rec.carries();
  for (std::size_t j = 0; j < rec.length(); ++j) s.transitions.emplace_back(c[j], c[j + 1]);
  return s;
}

InputString string_of(const PermutipleRecord& rec) {
  InputString s;
  const auto pre = rec.preimage();
  for (std::size_t j = 0; j < rec.length(); ++j) {
    s.push_back({rec.digits()[j], pre[j]});
  }
  return s;
}

std::optional<PermutipleRecord> apply_symmetry(const PermutipleRecord& rec,
                                               const Permutation& phi,
                                               bool reflect) {
  if (phi.size() != rec.length()) {
    throw std::invalid_argument("symmetry size does not match the string length");
  }
  const auto s = string_of(rec);
  const int top = rec.base() - 1;
  InputString t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    DigitEdge e = s[static_cast<std::size_t>(phi(i))];
    if (reflect) e = {top - e.from, top - e.to};
    t[i] = e;
  }
  if (!walk_states(t, rec.multiplier(), rec.base()).ok()) return std::nullopt;
  return string_to_permutiple(t, rec.multiplier(), rec.base()).permutiple;
}

std::vector<Permutation> symmetries_fixing_sequence(const PermutipleRecord& rec) {
  const auto seq = state_sequence(rec).transitions;
  const auto s = string_of(rec);
  const std::size_t len = s.size();

  std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < len; ++i) groups[seq[i]].push_back(i);

  // Distinct label arrangements per group.
  struct Group {
    std::vector<std::size_t> positions;
    std::vector<InputString> arrangements;
  };
  std::vector<Group> gs;
  for (const auto& [key, pos] : groups) {
    Group g{pos, {}};
    InputString labels;
    for (auto p : pos) labels.push_back(s[p]);
    std::sort(labels.begin(), labels.end());
    do {
      g.arrangements.push_back(labels);
    } while (std::next_permutation(labels.begin(), labels.end()));
    gs.push_back(std::move(g));
  }

  std::vector<Permutation> out;
  std::vector<std::size_t> choice(gs.size(), 0);
  while (true) {
    std::vector<int> phi(len, -1);
    bool identity = true;
    for (std::size_t g = 0; g < gs.size(); ++g) {
      const auto& grp = gs[g];
      const auto& want = grp.arrangements[choice[g]];
      std::vector<bool> used(grp.positions.size(), false);
      // Keep positions whose label already fits, then fill the rest with the
      // smallest unused source carrying the wanted label.
      for (std::size_t a = 0; a < grp.positions.size(); ++a) {
        if (s[grp.positions[a]] == want[a]) {
          phi[grp.positions[a]] = static_cast<int>(grp.positions[a]);
          used[a] = true;
        } else {
          identity = false;
        }
      }
      for (std::size_t a = 0; a < grp.positions.size(); ++a) {
        if (phi[grp.positions[a]] != -1) continue;
        for (std::size_t src = 0; src < grp.positions.size(); ++src) {
          if (!used[src] && s[grp.positions[src]] == want[a]) {
            used[src] = true;
            phi[grp.positions[a]] = static_cast<int>(grp.positions[src]);
            break;
          }
        }
      }
    }
    if (!identity) {
      Permutation p(phi);
      if (!apply_symmetry(rec, p)) {
        throw std::logic_error("sequence-fixing symmetry left the language");
      }
      out.push_back(std::move(p));
    }

    std::size_t g = 0;
    while (g < gs.size() && ++choice[g] == gs[g].arrangements.size()) {
      choice[g] = 0;
      ++g;
    }
    if (g == gs.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_comparable(const PermutipleRecord& a, const PermutipleRecord& b) {
  if (a.multiplier() != b.multiplier() || a.base() != b.base()) {
    throw std::invalid_argument("records have different (n,b)");
  }
  if (a.length() != b.length() || a.digits().counts() != b.digits().counts()) {
    throw std::invalid_argument("records have different digit multisets");
  }
}

}  // namespace

bool coarse_conjugate(const PermutipleRecord& a, const PermutipleRecord& b) {
  require_comparable(a, b);
  return graph_of_permutiple(a) == graph_of_permutiple(b);
}

bool fine_conjugate(const PermutipleRecord& a, const PermutipleRecord& b) {
  require_comparable(a, b);
  for (int c : a.digits().counts()) {
    if (c > 1) throw PreconditionError("fine conjugacy needs distinct digits");
  }
  // With a's digits as the reference string, pi_a is the identity and
  // pi_b(i) is the position in a of b's i-th digit.
  std::vector<int> where(static_cast<std::size_t>(a.base()), -1);
  for (std::size_t i = 0; i < a.length(); ++i) {
    where[static_cast<std::size_t>(a.digits()[i])] = static_cast<int>(i);
  }
  std::vector<int> pi(b.length());
  for (std::size_t i = 0; i < b.length(); ++i) {
    pi[i] = where[static_cast<std::size_t>(b.digits()[i])];
  }
  const Permutation pi_b(std::move(pi));
  return a.sigma() == pi_b * b.sigma() * pi_b.inverse();
}

std::vector<PermutipleRecord> enumerate_class_members(
    const PermutipleRecord& rec, bool allow_leading_zero, Execution mode) {
  const auto g = graph_of_permutiple(rec);
  const auto cycles = enumerate_cycles(g, rec.length());
  const auto unions = cycle_unions_matching_digits(cycles, rec.digits().counts());
  auto results = realize_unions(cycles, unions, rec.multiplier(), rec.base(),
                                allow_leading_zero, mode);
  std::vector<PermutipleRecord> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(r.permutiple));
  return out;
}

bool check_sym_rev(const PermutipleRecord& rec, std::size_t j) {
  const std::size_t len = rec.length();
  if (j >= len || rec.carries()[j] != rec.multiplier() - 1) {
    throw PreconditionError("carry " + std::to_string(j) + " is not n-1");
  }
  const auto counts = rec.digits().counts();
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] != counts[counts.size() - 1 - d]) {
      throw PreconditionError("digit multiset is not closed under reflection");
    }
  }
  auto sorted = rec.digits().digits();
  std::sort(sorted.begin(), sorted.end());

  // pi: rec's digit i is sorted[pi(i)], matching equal digits left to right.
  std::vector<int> pi(len);
  {
    std::vector<std::size_t> next(counts.size(), 0);
    std::vector<std::size_t> first(counts.size(), 0);
    for (std::size_t d = 1; d < counts.size(); ++d) {
      first[d] = first[d - 1] + static_cast<std::size_t>(counts[d - 1]);
    }
    for (std::size_t i = 0; i < len; ++i) {
      const auto d = static_cast<std::size_t>(rec.digits()[i]);
      pi[i] = static_cast<int>(first[d] + next[d]++);
    }
  }

  const auto sibling = reflective_sibling(rec, j);
  const auto pre = sibling.preimage();
  const std::size_t k = len - 1;
  for (std::size_t i = 0; i < len; ++i) {
    const auto shifted = wrap(i + j, len);
    const auto top = k - static_cast<std::size_t>(pi[shifted]);
    const auto top_pre =
        k - static_cast<std::size_t>(pi[static_cast<std::size_t>(rec.sigma()(shifted))]);
    if (sibling.digits()[i] != sorted[top] || pre[i] != sorted[top_pre]) return false;
  }
  return true;
}

ClosedWalk walk_of(const PermutipleRecord& rec) {
  const auto& c = rec.carries();
  return ClosedWalk{rec.multiplier(), rec.base(),
                    std::vector<int>(c.begin(), c.end() - 1), string_of(rec)};
}

ClosedWalk rotate_walk(const ClosedWalk& w, long long steps) {
  const auto len = static_cast<long long>(w.states.size());
  if (len == 0) return w;
  const auto shift = static_cast<std::size_t>(((steps % len) + len) % len);
  ClosedWalk out = w;
  for (std::size_t i = 0; i < w.states.size(); ++i) {
    out.states[i] = w.states[wrap(i + shift, w.states.size())];
    out.labels[i] = w.labels[wrap(i + shift, w.states.size())];
  }
  return out;
}

ClosedWalk reflect_walk(const ClosedWalk& w) {
  ClosedWalk out = w;
  for (int& c : out.states) c = w.multiplier - 1 - c;
  for (auto& e : out.labels) e = {w.base - 1 - e.from, w.base - 1 - e.to};
  return out;
}

bool is_closed_walk(const ClosedWalk& w) {
  if (w.states.size() != w.labels.size()) return false;
  for (std::size_t i = 0; i < w.states.size(); ++i) {
    const auto& e = w.labels[i];
    if (!is_mother_edge(e, w.multiplier, w.base)) return false;
    const auto [c1, c2] = mu(e, w.multiplier, w.base);
    if (c1 != w.states[i] || c2 != w.states[wrap(i + 1, w.states.size())]) {
      return false;
    }
  }
  return true;
}

bool is_l_walk(const ClosedWalk& w) {
  return !w.states.empty() && w.states.front() == 0 && is_closed_walk(w);
}

}  // namespace permutiple
