#include "permutiple/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "permutiple/enumeration.hpp"

namespace permutiple::io {

Json record_to_json(const PermutipleRecord& rec) {
  Json edges = Json::array();
  const auto graph = graph_of_permutiple(rec);
  for (const auto& e : graph.edges()) {
    edges.push_back({e.from, e.to});
  }
  const auto& c = rec.carries();
  return Json{
      {"base", rec.base()},
      {"multiplier", rec.multiplier()},
      {"digits", rec.digits().msf()},
      {"preimage", rec.preimage().msf()},
      {"sigma", rec.sigma().map()},
      {"carries", std::vector<int>(c.rbegin() + 1, c.rend())},
      {"canonical", rec.digits().canonical()},
      {"edges", edges},
  };
}

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("record is missing \"") + key + "\"", 0);
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for \"") + key + "\": " + e.what(), 0);
  }
}

}  // namespace

PermutipleRecord record_from_json(const Json& j) {
  const int base = field<int>(j, "base");
  const int n = field<int>(j, "multiplier");
  const auto digits = field<std::vector<int>>(j, "digits");
  const auto sigma = field<std::vector<int>>(j, "sigma");
  std::optional<PermutipleRecord> rec;
  try {
    rec = verify_permutiple(DigitString::from_msf(base, digits),
                            Permutation(sigma), n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid record: ") + e.what(), 0);
  }
  if (!rec) throw VerificationError("record does not describe a permutiple");
  if (j.contains("preimage") &&
      field<std::vector<int>>(j, "preimage") != rec->preimage().msf()) {
    throw VerificationError("preimage disagrees with digits and sigma");
  }
  if (j.contains("carries")) {
    const auto& c = rec->carries();
    if (field<std::vector<int>>(j, "carries") !=
        std::vector<int>(c.rbegin() + 1, c.rend())) {
      throw VerificationError("carries disagree with the multiplication");
    }
  }
  return *rec;
}

std::string record_line(const PermutipleRecord& rec) {
  return record_to_json(rec).dump();
}

DigitString parse_digits(std::string_view text, int base, std::size_t offset) {
  if (base < 2) throw ParseError("base must be at least 2", offset);
  std::vector<int> msf;
  if (text.empty()) throw ParseError("expected digits", offset);
  if (base <= 10) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch < '0' || ch > '9' || ch - '0' >= base) {
        throw ParseError(std::string("invalid base-") + std::to_string(base) +
                             " digit '" + ch + "'",
                         offset + i);
      }
      msf.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto stop = std::min(text.find(',', start), text.size());
      const auto token = text.substr(start, stop - start);
      if (token.empty() || token.size() > 6 ||
          !std::all_of(token.begin(), token.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("expected a comma-separated digit", offset + start);
      }
      const int d = std::stoi(std::string(token));
      if (d >= base) {
        throw ParseError("digit " + std::to_string(d) + " out of range",
                         offset + start);
      }
      msf.push_back(d);
      start = stop + 1;
    }
  }
  return DigitString::from_msf(base, msf);
}

Permutation parse_sigma(std::string_view text) {
  std::vector<int> map;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = std::min(text.find(',', start), text.size());
    const auto token = text.substr(start, stop - start);
    if (token.empty() || token.size() > 6 ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("expected a comma-separated index", start);
    }
    map.push_back(std::stoi(std::string(token)));
    start = stop + 1;
  }
  try {
    return Permutation(std::move(map));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

namespace {

// Removes whitespace, remembering each kept character's original offset.
std::pair<std::string, std::vector<std::size_t>> compact(std::string_view text,
                                                         std::size_t offset) {
  std::string out;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    out += text[i];
    where.push_back(offset + i);
  }
  where.push_back(offset + text.size());
  return {out, where};
}

int parse_small_int(std::string_view s, std::size_t pos, const char* what) {
  if (s.empty() || s.size() > 6 ||
      !std::all_of(s.begin(), s.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(std::string("expected ") + what, pos);
  }
  return std::stoi(std::string(s));
}

Equation parse_equation_at(std::string_view text, int base, std::size_t offset) {
  const auto [s, where] = compact(text, offset);
  const auto eq = s.find('=');
  if (eq == std::string::npos) throw ParseError("expected '='", where.back());
  const auto star = s.find('*', eq);
  if (star == std::string::npos) throw ParseError("expected '*'", where.back());
  const auto lhs = std::string_view(s).substr(0, eq);
  const auto mult = std::string_view(s).substr(eq + 1, star - eq - 1);
  const auto rhs = std::string_view(s).substr(star + 1);
  const int n = parse_small_int(mult, where[eq + 1], "a multiplier");

  // parse_digits offsets are into the compacted string; map them back.
  auto digits_at = [&](std::string_view part, std::size_t start) {
    try {
      return parse_digits(part, base, 0);
    } catch (const ParseError& e) {
      throw ParseError(std::string("invalid digits"),
                       where[std::min(start + e.position(), where.size() - 1)]);
    }
  };
  auto digits = digits_at(lhs, 0);
  auto preimage = digits_at(rhs, star + 1);
  if (digits.size() != preimage.size()) {
    // A shorter right-hand side is read with leading zeros.
    if (preimage.size() > digits.size()) {
      throw ParseError("right-hand side is longer than the left", where[star + 1]);
    }
    auto d = preimage.digits();
    d.resize(digits.size(), 0);
    preimage = DigitString(base, std::move(d));
  }
  return Equation{n, std::move(digits), std::move(preimage)};
}

}  // namespace

Equation parse_equation(std::string_view text, int base) {
  return parse_equation_at(text, base, 0);
}

Equation parse_seed(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'NxB:'", 0);
  const auto head = text.substr(0, colon);
  const auto x = head.find('x');
  if (x == std::string_view::npos) throw ParseError("expected 'x' in 'NxB'", 0);
  const int n = parse_small_int(head.substr(0, x), 0, "a multiplier");
  const int b = parse_small_int(head.substr(x + 1), x + 1, "a base");
  if (b < 2) throw ParseError("base must be at least 2", x + 1);
  auto eq = parse_equation_at(text.substr(colon + 1), b, colon + 1);
  if (eq.multiplier != n) {
    throw ParseError("multiplier in the equation differs from the prefix", colon + 1);
  }
  return eq;
}

PermutipleRecord verify_seed(const Equation& eq) {
  auto rec = verify_equation(eq.digits, eq.preimage, eq.multiplier);
  if (!rec) {
    throw VerificationError(to_tuple_string(eq.digits) + " = " +
                            std::to_string(eq.multiplier) + "*" +
                            to_tuple_string(eq.preimage) +
                            " is not a permutiple");
  }
  return *rec;
}

Json digit_graph_json(const DigitGraph& g, int multiplier) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.from, e.to});
  std::vector<int> vertices(static_cast<std::size_t>(g.base()));
  for (int v = 0; v < g.base(); ++v) vertices[static_cast<std::size_t>(v)] = v;
  return Json{{"base", g.base()},
              {"multiplier", multiplier},
              {"vertices", vertices},
              {"edges", edges}};
}

std::string digit_graph_dot(const DigitGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < g.base(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.from << " -> " << e.to << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

std::string edge_key(int c1, int c2) {
  return std::to_string(c1) + "->" + std::to_string(c2);
}

std::string joined_labels(const std::set<DigitEdge>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ',';
    out += to_string(l);
  }
  return out;
}

}  // namespace

Json state_graph_json(const StateGraph& g) {
  Json edges = Json::object();
  for (const auto& [key, labels] : g.edges()) {
    Json ls = Json::array();
    for (const auto& l : labels) ls.push_back(to_string(l));
    edges[edge_key(key.first, key.second)] = ls;
  }
  return Json{{"base", g.base()},
              {"multiplier", g.multiplier()},
              {"states", g.states()},
              {"edges", edges}};
}

std::string state_graph_dot(const StateGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int c : g.states()) out << "  " << c << ";\n";
  for (const auto& [key, labels] : g.edges()) {
    out << "  " << key.first << " -> " << key.second << " [label=\""
        << joined_labels(labels) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json state_multigraph_json(const StateMultigraph& g) {
  Json ts = Json::array();
  for (const auto& t : g.transitions()) {
    ts.push_back(Json{{"from", t.from}, {"to", t.to}, {"label", to_string(t.label)}});
  }
  return Json{{"base", g.base()},
              {"multiplier", g.multiplier()},
              {"states", g.states()},
              {"transitions", ts}};
}

std::string state_multigraph_dot(const StateMultigraph& g,
                                 const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int c : g.states()) out << "  " << c << ";\n";
  for (const auto& t : g.transitions()) {
    out << "  " << t.from << " -> " << t.to << " [label=\"" << to_string(t.label)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string idx, val, extra;
    if (!(fields >> idx)) continue;
    if (!(fields >> val) || (fields >> extra)) {
      throw ParseError("expected 'index value' on line " + std::to_string(lineno),
                       lineno);
    }
    const bool idx_ok =
        !idx.empty() && idx.size() < 19 &&
        std::all_of(idx.begin() + (idx[0] == '-' ? 1 : 0), idx.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        idx != "-";
    const bool val_ok =
        !val.empty() && std::all_of(val.begin(), val.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        });
    if (!idx_ok || !val_ok) {
      throw ParseError("malformed entry on line " + std::to_string(lineno), lineno);
    }
    const long long index = std::stoll(idx);
    if (!out.entries.empty() && index <= out.entries.back().first) {
      throw ParseError("index " + idx + " does not increase on line " +
                           std::to_string(lineno),
                       lineno);
    }
    out.entries.emplace_back(index, BigInt(val));
  }
  return out;
}

namespace {

std::size_t digit_count(BigInt v, int base) {
  std::size_t len = 0;
  do {
    v /= base;
    ++len;
  } while (v != 0);
  return len;
}

}  // namespace

OeisReport oeis_check(const BFile& bfile, int multiplier, int base,
                      std::size_t max_length) {
  check_parameters(multiplier, base);
  std::set<BigInt> permutiples;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (const auto& r : find_permutiples(multiplier, base, len, false)) {
      if (r.permutiple.preimage().canonical()) {
        permutiples.insert(value(r.permutiple.digits()));
      }
    }
  }

  OeisReport report;
  std::set<BigInt> listed;
  BigInt covered = 0;  // largest a(k) seen; extras are only judged below it
  for (const auto& [index, a] : bfile.entries) {
    covered = std::max(covered, a);
    if (a == 0) {
      ++report.skipped_zero;
      continue;
    }
    const BigInt product = a * multiplier;
    if (digit_count(product, base) > max_length) {
      ++report.beyond_length;
      continue;
    }
    listed.insert(product);
    if (permutiples.count(product)) {
      report.matches.push_back(product);
    } else {
      report.misses.push_back(product);
    }
  }
  for (const auto& v : permutiples) {
    if (v <= covered * multiplier && !listed.count(v)) report.extras.push_back(v);
  }
  return report;
}

Json oeis_report_json(const OeisReport& r) {
  auto strings = [](const std::vector<BigInt>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(v.str());
    return out;
  };
  return Json{{"ok", r.ok()},
              {"matches", r.matches.size()},
              {"misses", strings(r.misses)},
              {"extras", strings(r.extras)},
              {"skipped_zero", r.skipped_zero},
              {"beyond_length", r.beyond_length}};
}

}  // namespace permutiple::io
