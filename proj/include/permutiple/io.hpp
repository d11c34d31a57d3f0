#pragma once

// Serialization of records and graphs, seed and equation parsing, and b-file
// ingestion.

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permutiple/digits.hpp"
#include "permutiple/mother_graph.hpp"
#include "permutiple/state_machine.hpp"

namespace permutiple::io {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Keys: base, canonical, carries (c_k..c_0), digits, edges, multiplier,
// preimage, sigma (sigma(0)..sigma(k)). Digit lists are most-significant first.
Json record_to_json(const PermutipleRecord& rec);
// Re-verifies; throws ParseError on malformed input and VerificationError when
// the fields do not describe a permutiple.
PermutipleRecord record_from_json(const Json& j);
std::string record_line(const PermutipleRecord& rec);

// "87912" for b <= 10, "12,3,4" otherwise; most-significant first.
DigitString parse_digits(std::string_view text, int base,
                         std::size_t offset = 0);
// "4,3,2,1,0" as sigma(0),...,sigma(k).
Permutation parse_sigma(std::string_view text);

struct Equation {
  int multiplier;
  DigitString digits;
  DigitString preimage;
};

// "87912 = 4 * 21978", whitespace optional.
Equation parse_equation(std::string_view text, int base);
// "4x10:727119288=4*181779822". The multiplier in the seed prefix and the
// equation must agree.
Equation parse_seed(std::string_view text);
// Throws VerificationError when the equation is not a permutiple.
PermutipleRecord verify_seed(const Equation& eq);

Json digit_graph_json(const DigitGraph& g, int multiplier);
std::string digit_graph_dot(const DigitGraph& g, const std::string& name);
Json state_graph_json(const StateGraph& g);
std::string state_graph_dot(const StateGraph& g, const std::string& name);
Json state_multigraph_json(const StateMultigraph& g);
std::string state_multigraph_dot(const StateMultigraph& g,
                                 const std::string& name);

struct BFile {
  std::vector<std::pair<long long, BigInt>> entries;
};

// "index value" per line; '#' starts a comment; blank lines ignored. Indices
// must increase strictly. ParseError::position() is the 1-based line.
BFile parse_bfile(std::istream& in);

struct OeisReport {
  std::vector<BigInt> matches;
  std::vector<BigInt> misses;  // n*a(k) that is not a permutiple
  std::vector<BigInt> extras;  // permutiples missing from the b-file
  std::size_t skipped_zero = 0;
  std::size_t beyond_length = 0;
  bool ok() const { return misses.empty() && extras.empty(); }
};

// Compares n*a(k) with permutiples of length <= max_length whose digits and
// preimage both have a nonzero leading digit.
OeisReport oeis_check(const BFile& bfile, int multiplier, int base,
                      std::size_t max_length);
Json oeis_report_json(const OeisReport& r);

}  // namespace permutiple::io
