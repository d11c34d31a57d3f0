#pragma once

// Base-b digit strings, digit permutations, and verified digit-preserving
// multiplications.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permutiple {

using BigInt = boost::multiprecision::cpp_int;

// Throws std::invalid_argument unless 1 < n < b.
void check_parameters(int multiplier, int base);

// Digits are stored least-significant first, so digits()[j] is d_j.
// Display and serialization are most-significant first.
class DigitString {
 public:
  DigitString(int base, std::vector<int> digits);

  static DigitString from_msf(int base, std::span<const int> msf);

  int base() const { return base_; }
  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t j) const { return digits_[j]; }
  const std::vector<int>& digits() const { return digits_; }
  std::vector<int> msf() const;

  // True when the leading digit d_k is nonzero.
  bool canonical() const { return digits_.back() != 0; }

  // Histogram of length base().
  std::vector<int> counts() const;

  bool operator==(const DigitString&) const = default;
  // Orders by base, then length, then most-significant-first digits.
  std::strong_ordering operator<=>(const DigitString& other) const;

 private:
  int base_;
  std::vector<int> digits_;
};

// "87912" for bases up to 10, "12,3,4" otherwise.
std::string to_compact_string(const DigitString& ds);
// "(8,7,9,1,2)_10"
std::string to_tuple_string(const DigitString& ds);

// A bijection on {0, ..., size-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> map);

  static Permutation identity(std::size_t size);
  // psi^j, where psi is the cycle (0,1,...,size-1): i -> i + j (mod size).
  static Permutation rotation(std::size_t size, long long j);
  // rho: i -> size-1-i.
  static Permutation reversal(std::size_t size);
  static Permutation transposition(std::size_t size, int a, int b);

  int operator()(std::size_t i) const { return map_[i]; }
  std::size_t size() const { return map_.size(); }
  const std::vector<int>& map() const { return map_; }
  bool is_identity() const;

  Permutation inverse() const;

  // Composition: (a * b)(i) == a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

std::string to_string(const Permutation& p);

// A digit-preserving multiplication digits == n * preimage that has passed
// verification. Only verify_permutiple() constructs one.
class PermutipleRecord {
 public:
  int multiplier() const { return multiplier_; }
  int base() const { return digits_.base(); }
  std::size_t length() const { return digits_.size(); }
  const DigitString& digits() const { return digits_; }
  const Permutation& sigma() const { return sigma_; }
  // c_0 .. c_{k+1}; both ends are zero.
  const std::vector<int>& carries() const { return carries_; }
  // d_{sigma(j)} at index j.
  DigitString preimage() const;

  bool operator==(const PermutipleRecord&) const = default;

 private:
  PermutipleRecord(int multiplier, DigitString digits, Permutation sigma,
                   std::vector<int> carries);

  friend std::optional<PermutipleRecord> verify_permutiple(
      const DigitString&, const Permutation&, int);

  int multiplier_;
  DigitString digits_;
  Permutation sigma_;
  std::vector<int> carries_;
};

// Orders records by digits, then preimage.
bool record_less(const PermutipleRecord& a, const PermutipleRecord& b);
bool same_product(const PermutipleRecord& a, const PermutipleRecord& b);

// "(8,7,9,1,2)_10 = 4*(2,1,9,7,8)_10"
std::string to_equation_string(const PermutipleRecord& rec);

BigInt value(const DigitString& ds);

// Least non-negative residue of x modulo b.
int lambda_residue(long long x, int base);

// Runs single-digit multiplication of the sigma-permuted digits by n and
// returns the record when every product digit matches and the final carry is
// zero. Throws std::invalid_argument on bad parameters or a size mismatch.
std::optional<PermutipleRecord> verify_permutiple(const DigitString& digits,
                                                  const Permutation& sigma,
                                                  int multiplier);

DigitString reflect_digits(const DigitString& ds);

// Lexicographically smallest sigma with digits[sigma(j)] == preimage[j], or
// nullopt if the two strings are not rearrangements of each other.
std::optional<Permutation> canonical_sigma(const DigitString& digits,
                                           const DigitString& preimage);

// digits == n * preimage, checked as a permutiple with the canonical sigma.
std::optional<PermutipleRecord> verify_equation(const DigitString& digits,
                                                const DigitString& preimage,
                                                int multiplier);

// Finds the preimage by exact division and verifies it.
std::optional<PermutipleRecord> verify_any_sigma(const DigitString& digits,
                                                 int multiplier);

}  // namespace permutiple
