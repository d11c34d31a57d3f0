#include "permutiple/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <omp.h>

#include "graph_util.hpp"

namespace permutiple {

std::size_t CycleMultiset::total_edges() const {
  std::size_t total = 0;
  for (const auto& [c, m] : parts) total += c.size() * static_cast<std::size_t>(m);
  return total;
}

std::vector<DigitEdge> CycleMultiset::edges() const {
  std::vector<DigitEdge> out;
  for (const auto& [c, m] : parts) {
    const auto ce = c.edges();
    for (int i = 0; i < m; ++i) out.insert(out.end(), ce.begin(), ce.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const CycleMultiset& cm) {
  std::string out;
  for (const auto& [c, m] : cm.parts) {
    if (!out.empty()) out += " + ";
    if (m > 1) out += std::to_string(m) + "*";
    out += to_string(c);
  }
  return out.empty() ? "{}" : out;
}

bool check_feasible(const StateMultigraph& delta) {
  if (delta.empty()) return false;
  const auto out = delta.outdegrees();
  const auto in = delta.indegrees();
  if (out[0] == 0) return false;
  if (out != in) return false;

  const auto n = static_cast<std::size_t>(delta.multiplier());
  std::vector<std::vector<int>> adj(n);
  std::vector<bool> active(n, false);
  for (const auto& t : delta.transitions()) {
    adj[static_cast<std::size_t>(t.from)].push_back(t.to);
    active[static_cast<std::size_t>(t.from)] = true;
    active[static_cast<std::size_t>(t.to)] = true;
  }
  return detail::strongly_connected_on(adj, active);
}

namespace {

struct OutEdge {
  DigitEdge label;
  int to;
  int count;
};

struct CircuitSearch {
  std::vector<std::vector<OutEdge>> out;  // per state, sorted by label
  std::size_t total = 0;
  InputString current;
  std::vector<InputString> found;

  void extend(int state) {
    if (current.size() == total) {
      if (state == 0) found.push_back(current);
      return;
    }
    for (auto& e : out[static_cast<std::size_t>(state)]) {
      if (e.count == 0) continue;
      --e.count;
      current.push_back(e.label);
      extend(e.to);
      current.pop_back();
      ++e.count;
    }
  }
};

}  // namespace

std::vector<InputString> eulerian_strings(const StateMultigraph& delta) {
  if (!check_feasible(delta)) {
    throw InfeasibleError("multigraph admits no Eulerian circuit from state 0");
  }
  CircuitSearch search;
  search.out.resize(static_cast<std::size_t>(delta.multiplier()));
  search.total = delta.size();
  // The multiset is ordered by (from, to, label); regroup by label per state.
  std::map<std::pair<int, DigitEdge>, OutEdge> grouped;
  for (const auto& t : delta.transitions()) {
    auto [it, inserted] = grouped.try_emplace({t.from, t.label},
                                              OutEdge{t.label, t.to, 0});
    ++it->second.count;
  }
  for (const auto& [key, e] : grouped) {
    search.out[static_cast<std::size_t>(key.first)].push_back(e);
  }
  search.extend(0);
  return std::move(search.found);
}

CycleMultiset decompose_into_cycles(std::vector<DigitEdge> edges) {
  std::map<int, int> balance;
  for (const auto& e : edges) {
    ++balance[e.from];
    --balance[e.to];
  }
  for (const auto& [v, diff] : balance) {
    if (diff != 0) {
      throw std::invalid_argument("edge multiset is unbalanced at vertex " +
                                  std::to_string(v));
    }
  }

  // Remaining edges per source, as a multiset of targets.
  std::map<int, std::multiset<int>> remaining;
  for (const auto& e : edges) remaining[e.from].insert(e.to);

  std::map<DigitCycle, int> found;
  while (!remaining.empty()) {
    std::vector<int> path{remaining.begin()->first};
    std::map<int, std::size_t> position{{path.front(), 0}};
    while (!path.empty()) {
      const int v = path.back();
      auto it = remaining.find(v);
      if (it == remaining.end()) {
        if (path.size() == 1) break;
        throw std::logic_error("cycle decomposition stalled");
      }
      const int w = *it->second.begin();
      it->second.erase(it->second.begin());
      if (it->second.empty()) remaining.erase(it);

      auto pos = position.find(w);
      if (pos == position.end()) {
        position[w] = path.size();
        path.push_back(w);
        continue;
      }
      const std::size_t start = pos->second;
      ++found[DigitCycle(std::vector<int>(path.begin() + static_cast<long>(start),
                                          path.end()))];
      for (std::size_t i = start + 1; i < path.size(); ++i) position.erase(path[i]);
      path.resize(start + 1);
    }
  }
  CycleMultiset cm;
  for (auto& [c, m] : found) cm.parts.emplace_back(c, m);
  return cm;
}

namespace {

PermutipleRecord record_of_string(const InputString& s, int multiplier,
                                  int base) {
  const auto walk = walk_states(s, multiplier, base);
  if (!walk.ok()) {
    throw WalkError("input string leaves the accepted language at position " +
                        std::to_string(*walk.failure),
                    *walk.failure);
  }
  std::vector<int> left, right;
  for (const auto& e : s) {
    left.push_back(e.from);
    right.push_back(e.to);
  }
  DigitString digits(base, left);
  DigitString preimage(base, right);
  if (digits.counts() != preimage.counts()) {
    throw MultisetMismatchError(
        "left and right components are different digit multisets");
  }
  auto rec = verify_equation(digits, preimage, multiplier);
  if (!rec) {
    throw std::logic_error("accepted string failed digit verification");
  }
  return *rec;
}

}  // namespace

SearchResult string_to_permutiple(const InputString& s, int multiplier,
                                  int base) {
  check_parameters(multiplier, base);
  if (s.empty()) throw std::invalid_argument("empty input string");
  auto rec = record_of_string(s, multiplier, base);
  return SearchResult{std::move(rec), s, decompose_into_cycles(s)};
}

namespace {

// Budget tracks what is left to cover; see LengthBudget and DigitBudget.
template <typename Budget>
void generate_unions(const std::vector<DigitCycle>& cycles, std::size_t index,
                     SparseUnion& current, std::vector<SparseUnion>& out,
                     Budget& step) {
  if (step.done()) {
    out.push_back(current);
    return;
  }
  if (index == cycles.size() || !step.reachable(index)) return;
  // Multiplicity zero first keeps the order lexicographic in the vector.
  generate_unions(cycles, index + 1, current, out, step);
  int m = 0;
  while (step.can_add(index)) {
    step.add(index, +1);
    ++m;
    current.emplace_back(index, m);
    generate_unions(cycles, index + 1, current, out, step);
    current.pop_back();
  }
  step.add(index, -m);
}

struct LengthBudget {
  const std::vector<DigitCycle>& cycles;
  std::size_t remaining;
  std::vector<std::size_t> min_suffix;  // shortest cycle from index on

  bool done() const { return remaining == 0; }
  bool reachable(std::size_t i) const { return min_suffix[i] <= remaining; }
  bool can_add(std::size_t i) const { return cycles[i].size() <= remaining; }
  void add(std::size_t i, int m) {
    remaining = static_cast<std::size_t>(static_cast<long long>(remaining) -
                                         m * static_cast<long long>(cycles[i].size()));
  }
};

struct DigitBudget {
  const std::vector<DigitCycle>& cycles;
  std::vector<int> remaining;
  int total;
  // covered[i][d]: some cycle at index >= i visits digit d.
  std::vector<std::vector<bool>> covered;

  bool done() const { return total == 0; }
  bool reachable(std::size_t i) const {
    for (std::size_t d = 0; d < remaining.size(); ++d) {
      if (remaining[d] > 0 && !covered[i][d]) return false;
    }
    return true;
  }
  bool can_add(std::size_t i) const {
    for (int v : cycles[i].vertices()) {
      if (remaining[static_cast<std::size_t>(v)] == 0) return false;
    }
    return true;
  }
  void add(std::size_t i, int m) {
    for (int v : cycles[i].vertices()) remaining[static_cast<std::size_t>(v)] -= m;
    total -= m * static_cast<int>(cycles[i].size());
  }
};

}  // namespace

std::vector<SparseUnion> cycle_unions_of_length(
    const std::vector<DigitCycle>& cycles, std::size_t length) {
  std::vector<SparseUnion> out;
  if (length == 0) return out;
  LengthBudget budget{cycles, length, std::vector<std::size_t>(cycles.size() + 1)};
  budget.min_suffix.back() = length + 1;
  for (std::size_t i = cycles.size(); i-- > 0;) {
    budget.min_suffix[i] = std::min(budget.min_suffix[i + 1], cycles[i].size());
  }
  SparseUnion current;
  generate_unions(cycles, 0, current, out, budget);
  return out;
}

std::vector<SparseUnion> cycle_unions_matching_digits(
    const std::vector<DigitCycle>& cycles, const std::vector<int>& counts) {
  std::vector<SparseUnion> out;
  int total = 0;
  for (int c : counts) total += c;
  if (total == 0) return out;
  DigitBudget budget{cycles, counts, total,
                     std::vector<std::vector<bool>>(
                         cycles.size() + 1, std::vector<bool>(counts.size(), false))};
  for (std::size_t i = cycles.size(); i-- > 0;) {
    budget.covered[i] = budget.covered[i + 1];
    for (int v : cycles[i].vertices()) {
      if (static_cast<std::size_t>(v) < counts.size()) {
        budget.covered[i][static_cast<std::size_t>(v)] = true;
      }
    }
  }
  for (const auto& c : cycles) {
    for (int v : c.vertices()) {
      if (static_cast<std::size_t>(v) >= counts.size()) {
        throw std::invalid_argument("cycle vertex outside the digit histogram");
      }
    }
  }
  SparseUnion current;
  generate_unions(cycles, 0, current, out, budget);
  return out;
}

StateMultigraph union_multigraph(const std::vector<DigitCycle>& cycles,
                                 const SparseUnion& u, int multiplier,
                                 int base) {
  StateMultigraph g(multiplier, base);
  for (const auto& [i, m] : u) {
    const auto image = multi_image(cycles.at(i), multiplier, base);
    for (int r = 0; r < m; ++r) {
      for (const auto& t : image.transitions()) g.add(t);
    }
  }
  return g;
}

CycleMultiset to_cycle_multiset(const std::vector<DigitCycle>& cycles,
                                const SparseUnion& u) {
  CycleMultiset cm;
  for (const auto& [i, m] : u) cm.parts.emplace_back(cycles.at(i), m);
  std::sort(cm.parts.begin(), cm.parts.end());
  return cm;
}

namespace {

std::vector<DigitEdge> union_edges(const std::vector<DigitCycle>& cycles,
                                   const SparseUnion& u) {
  std::vector<DigitEdge> out;
  for (const auto& [i, m] : u) {
    const auto ce = cycles[i].edges();
    for (int r = 0; r < m; ++r) out.insert(out.end(), ce.begin(), ce.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void expand_union(const std::vector<DigitCycle>& cycles, const SparseUnion& u,
                  int multiplier, int base, bool allow_leading_zero,
                  std::vector<SearchResult>& sink) {
  const auto delta = union_multigraph(cycles, u, multiplier, base);
  if (!check_feasible(delta)) return;
  for (auto& s : eulerian_strings(delta)) {
    if (!allow_leading_zero && s.back().from == 0) continue;
    auto rec = record_of_string(s, multiplier, base);
    sink.push_back(SearchResult{std::move(rec), std::move(s),
                                to_cycle_multiset(cycles, u)});
  }
}

bool result_less(const SearchResult& a, const SearchResult& b) {
  return record_less(a.permutiple, b.permutiple);
}

bool result_same(const SearchResult& a, const SearchResult& b) {
  return same_product(a.permutiple, b.permutiple);
}

}  // namespace

std::vector<SearchResult> realize_unions(const std::vector<DigitCycle>& cycles,
                                         const std::vector<SparseUnion>& unions,
                                         int multiplier, int base,
                                         bool allow_leading_zero,
                                         Execution mode) {
  check_parameters(multiplier, base);

  // Distinct cycle unions can share an edge multiset (two 2-cycles against
  // one 4-cycle over the same arcs); keep the first in generation order.
  std::vector<const SparseUnion*> work;
  {
    std::set<std::vector<DigitEdge>> seen;
    for (const auto& u : unions) {
      if (seen.insert(union_edges(cycles, u)).second) work.push_back(&u);
    }
  }

  std::vector<SearchResult> results;
  const auto count = static_cast<long long>(work.size());
  if (mode == Execution::serial) {
    for (long long i = 0; i < count; ++i) {
      expand_union(cycles, *work[static_cast<std::size_t>(i)], multiplier, base,
                   allow_leading_zero, results);
    }
  } else {
    std::vector<std::vector<SearchResult>> partial(
        static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
      auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
      for (long long i = 0; i < count; ++i) {
        expand_union(cycles, *work[static_cast<std::size_t>(i)], multiplier,
                     base, allow_leading_zero, mine);
      }
    }
    for (auto& p : partial) {
      std::move(p.begin(), p.end(), std::back_inserter(results));
    }
  }
  std::sort(results.begin(), results.end(), result_less);
  results.erase(std::unique(results.begin(), results.end(), result_same),
                results.end());
  return results;
}

namespace {

std::vector<SearchResult> find_impl(int multiplier, int base,
                                    std::size_t length, bool allow_leading_zero,
                                    Execution mode) {
  check_parameters(multiplier, base);
  if (length == 0) throw std::invalid_argument("length must be at least 1");
  const auto cycles =
      enumerate_cycles(build_mother_graph(multiplier, base), length);
  return realize_unions(cycles, cycle_unions_of_length(cycles, length),
                        multiplier, base, allow_leading_zero, mode);
}

}  // namespace

std::vector<SearchResult> find_permutiples(int multiplier, int base,
                                           std::size_t length,
                                           bool allow_leading_zero) {
  return find_impl(multiplier, base, length, allow_leading_zero,
                   Execution::parallel);
}

std::vector<SearchResult> find_permutiples_serial(int multiplier, int base,
                                                  std::size_t length,
                                                  bool allow_leading_zero) {
  return find_impl(multiplier, base, length, allow_leading_zero,
                   Execution::serial);
}

namespace {

struct ScanRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

ScanRange scan_range(int multiplier, int base, std::size_t length,
                     bool allow_leading_zero, std::uint64_t scan_limit) {
  check_parameters(multiplier, base);
  if (length == 0) throw std::invalid_argument("length must be at least 1");
  std::uint64_t hi = 1, below = 1;
  for (std::size_t i = 0; i < length; ++i) {
    below = hi;
    if (hi > scan_limit / static_cast<std::uint64_t>(base)) {
      throw ScanLimitError("exhaustive scan of " + std::to_string(base) + "^" +
                           std::to_string(length) + " strings exceeds the limit of " +
                           std::to_string(scan_limit));
    }
    hi *= static_cast<std::uint64_t>(base);
  }
  return {allow_leading_zero ? 0 : below, hi};
}

// Digit histogram of v padded to `length` places, or empty if v needs more.
bool same_digits(std::uint64_t v, std::uint64_t q, std::uint64_t base,
                 std::size_t length, std::vector<int>& hist) {
  std::fill(hist.begin(), hist.end(), 0);
  for (std::size_t i = 0; i < length; ++i) {
    ++hist[v % base];
    --hist[q % base];
    v /= base;
    q /= base;
  }
  if (q != 0) return false;
  return std::all_of(hist.begin(), hist.end(), [](int h) { return h == 0; });
}

PermutipleRecord oracle_record(std::uint64_t v, int multiplier, int base,
                               std::size_t length) {
  std::vector<int> d(length), p(length);
  std::uint64_t q = v / static_cast<std::uint64_t>(multiplier);
  for (std::size_t i = 0; i < length; ++i) {
    d[i] = static_cast<int>(v % static_cast<std::uint64_t>(base));
    p[i] = static_cast<int>(q % static_cast<std::uint64_t>(base));
    v /= static_cast<std::uint64_t>(base);
    q /= static_cast<std::uint64_t>(base);
  }
  auto rec = verify_equation(DigitString(base, d), DigitString(base, p),
                             multiplier);
  if (!rec) throw std::logic_error("oracle hit failed verification");
  return *rec;
}

}  // namespace

std::vector<PermutipleRecord> brute_force_oracle_serial(
    int multiplier, int base, std::size_t length, bool allow_leading_zero,
    std::uint64_t scan_limit) {
  const auto [lo, hi] =
      scan_range(multiplier, base, length, allow_leading_zero, scan_limit);
  const auto n = static_cast<std::uint64_t>(multiplier);
  std::vector<int> hist(static_cast<std::size_t>(base));
  std::vector<PermutipleRecord> out;
  for (std::uint64_t v = (lo + n - 1) / n * n; v < hi; v += n) {
    if (same_digits(v, v / n, static_cast<std::uint64_t>(base), length, hist)) {
      out.push_back(oracle_record(v, multiplier, base, length));
    }
  }
  return out;
}

std::vector<PermutipleRecord> brute_force_oracle(int multiplier, int base,
                                                 std::size_t length,
                                                 bool allow_leading_zero,
                                                 std::uint64_t scan_limit) {
  const auto [lo, hi] =
      scan_range(multiplier, base, length, allow_leading_zero, scan_limit);
  const auto n = static_cast<std::uint64_t>(multiplier);
  const auto first = static_cast<long long>((lo + n - 1) / n);
  const auto last = static_cast<long long>((hi + n - 1) / n);

  std::vector<std::vector<PermutipleRecord>> partial(
      static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    std::vector<int> hist(static_cast<std::size_t>(base));
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long long q = first; q < last; ++q) {
      const auto uq = static_cast<std::uint64_t>(q);
      if (same_digits(uq * n, uq, static_cast<std::uint64_t>(base), length,
                      hist)) {
        mine.push_back(oracle_record(uq * n, multiplier, base, length));
      }
    }
  }
  std::vector<PermutipleRecord> out;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

namespace {

BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Fraction-free Gaussian elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t m = a.size();
  if (m == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < m && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == m) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

}  // namespace

BigInt count_eulerian_circuits(const StateMultigraph& delta) {
  if (!check_feasible(delta)) {
    throw InfeasibleError("multigraph admits no Eulerian circuit from state 0");
  }
  const auto out = delta.outdegrees();
  std::vector<int> active;  // active states other than the root 0
  for (int c : delta.states()) {
    if (c != 0) active.push_back(c);
  }
  std::map<int, std::size_t> row;
  for (std::size_t i = 0; i < active.size(); ++i) row[active[i]] = i;

  // Out-degree Laplacian with the root's row and column deleted. Loops cancel.
  std::vector<std::vector<BigInt>> lap(active.size(),
                                       std::vector<BigInt>(active.size(), 0));
  for (const auto& t : delta.transitions()) {
    if (t.from == t.to || t.from == 0) continue;
    const auto i = row.at(t.from);
    lap[i][i] += 1;
    if (t.to != 0) lap[i][row.at(t.to)] -= 1;
  }
  BigInt result = bareiss_determinant(std::move(lap));
  for (int c : delta.states()) {
    result *= factorial(out[static_cast<std::size_t>(c)] - 1);
  }
  return result;
}

BigInt expected_string_count(const StateMultigraph& delta) {
  BigInt total = count_eulerian_circuits(delta) * delta.outdegrees()[0];
  const auto& ts = delta.transitions();
  for (auto it = ts.begin(); it != ts.end(); it = ts.upper_bound(*it)) {
    total /= factorial(static_cast<int>(ts.count(*it)));
  }
  return total;
}

}  // namespace permutiple
