#include "permutiple/digits.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permutiple {

void check_parameters(int multiplier, int base) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2, got " +
                                std::to_string(base));
  }
  if (multiplier <= 1 || multiplier >= base) {
    throw std::invalid_argument("multiplier must satisfy 1 < n < b, got n=" +
                                std::to_string(multiplier) +
                                ", b=" + std::to_string(base));
  }
}

DigitString::DigitString(int base, std::vector<int> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) {
    throw std::invalid_argument("base must be at least 2");
  }
  if (digits_.empty()) {
    throw std::invalid_argument("a digit string needs at least one digit");
  }
  for (int d : digits_) {
    if (d < 0 || d >= base_) {
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " out of range for base " +
                                  std::to_string(base_));
    }
  }
}

DigitString DigitString::from_msf(int base, std::span<const int> msf) {
  return DigitString(base, std::vector<int>(msf.rbegin(), msf.rend()));
}

std::vector<int> DigitString::msf() const {
  return std::vector<int>(digits_.rbegin(), digits_.rend());
}

std::vector<int> DigitString::counts() const {
  std::vector<int> out(static_cast<std::size_t>(base_), 0);
  for (int d : digits_) ++out[static_cast<std::size_t>(d)];
  return out;
}

std::strong_ordering DigitString::operator<=>(const DigitString& other) const {
  if (auto c = base_ <=> other.base_; c != 0) return c;
  if (auto c = digits_.size() <=> other.digits_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      digits_.rbegin(), digits_.rend(), other.digits_.rbegin(),
      other.digits_.rend());
}

std::string to_compact_string(const DigitString& ds) {
  std::string out;
  const auto msf = ds.msf();
  for (std::size_t i = 0; i < msf.size(); ++i) {
    if (ds.base() <= 10) {
      out += static_cast<char>('0' + msf[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(msf[i]);
    }
  }
  return out;
}

std::string to_tuple_string(const DigitString& ds) {
  std::string out = "(";
  const auto msf = ds.msf();
  for (std::size_t i = 0; i < msf.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(msf[i]);
  }
  return out + ")_" + std::to_string(ds.base());
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || static_cast<std::size_t>(v) >= map_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      std::string shown;
      for (int x : map_) shown += std::to_string(x) + ' ';
      throw std::invalid_argument("not a permutation: " + shown);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<int> m(size);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::rotation(std::size_t size, long long j) {
  const auto n = static_cast<long long>(size);
  std::vector<int> m(size);
  for (long long i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)] = static_cast<int>(((i + j) % n + n) % n);
  }
  return Permutation(std::move(m));
}

Permutation Permutation::reversal(std::size_t size) {
  std::vector<int> m(size);
  for (std::size_t i = 0; i < size; ++i) {
    m[i] = static_cast<int>(size - 1 - i);
  }
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(std::size_t size, int a, int b) {
  auto m = identity(size).map_;
  std::swap(m.at(static_cast<std::size_t>(a)), m.at(static_cast<std::size_t>(b)));
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cannot compose permutations of different sizes");
  }
  std::vector<int> m(a.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = a(static_cast<std::size_t>(b(i)));
  }
  return Permutation(std::move(m));
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p(i));
  }
  return out + "]";
}

PermutipleRecord::PermutipleRecord(int multiplier, DigitString digits,
                                   Permutation sigma, std::vector<int> carries)
    : multiplier_(multiplier),
      digits_(std::move(digits)),
      sigma_(std::move(sigma)),
      carries_(std::move(carries)) {}

DigitString PermutipleRecord::preimage() const {
  std::vector<int> out(length());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = digits_[static_cast<std::size_t>(sigma_(j))];
  }
  return DigitString(base(), std::move(out));
}

bool record_less(const PermutipleRecord& a, const PermutipleRecord& b) {
  if (a.digits() != b.digits()) return a.digits() < b.digits();
  return a.preimage() < b.preimage();
}

bool same_product(const PermutipleRecord& a, const PermutipleRecord& b) {
  return a.multiplier() == b.multiplier() && a.digits() == b.digits() &&
         a.preimage() == b.preimage();
}

std::string to_equation_string(const PermutipleRecord& rec) {
  return to_tuple_string(rec.digits()) + " = " +
         std::to_string(rec.multiplier()) + "*" +
         to_tuple_string(rec.preimage());
}

BigInt value(const DigitString& ds) {
  BigInt v = 0;
  for (auto it = ds.digits().rbegin(); it != ds.digits().rend(); ++it) {
    v = v * ds.base() + *it;
  }
  return v;
}

int lambda_residue(long long x, int base) {
  const long long r = x % base;
  return static_cast<int>(r < 0 ? r + base : r);
}

std::optional<PermutipleRecord> verify_permutiple(const DigitString& digits,
                                                  const Permutation& sigma,
                                                  int multiplier) {
  const int b = digits.base();
  check_parameters(multiplier, b);
  if (sigma.size() != digits.size()) {
    throw std::invalid_argument("sigma has size " + std::to_string(sigma.size()) +
                                " but the digit string has length " +
                                std::to_string(digits.size()));
  }

  std::vector<int> carries(digits.size() + 1, 0);
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const int t =
        multiplier * digits[static_cast<std::size_t>(sigma(j))] + carries[j];
    if (t % b != digits[j]) return std::nullopt;
    carries[j + 1] = t / b;
  }
  if (carries.back() != 0) return std::nullopt;
  return PermutipleRecord(multiplier, digits, sigma, std::move(carries));
}

DigitString reflect_digits(const DigitString& ds) {
  std::vector<int> out(ds.digits());
  for (int& d : out) d = ds.base() - 1 - d;
  return DigitString(ds.base(), std::move(out));
}

std::optional<Permutation> canonical_sigma(const DigitString& digits,
                                           const DigitString& preimage) {
  if (digits.base() != preimage.base() || digits.size() != preimage.size()) {
    return std::nullopt;
  }
  // Positions of each digit value, ascending; consumed front to back.
  std::vector<std::vector<int>> positions(static_cast<std::size_t>(digits.base()));
  for (std::size_t i = digits.size(); i-- > 0;) {
    positions[static_cast<std::size_t>(digits[i])].push_back(static_cast<int>(i));
  }
  std::vector<int> map(digits.size());
  for (std::size_t j = 0; j < preimage.size(); ++j) {
    auto& pool = positions[static_cast<std::size_t>(preimage[j])];
    if (pool.empty()) return std::nullopt;
    map[j] = pool.back();
    pool.pop_back();
  }
  return Permutation(std::move(map));
}

std::optional<PermutipleRecord> verify_equation(const DigitString& digits,
                                                const DigitString& preimage,
                                                int multiplier) {
  auto sigma = canonical_sigma(digits, preimage);
  if (!sigma) return std::nullopt;
  return verify_permutiple(digits, *sigma, multiplier);
}

std::optional<PermutipleRecord> verify_any_sigma(const DigitString& digits,
                                                 int multiplier) {
  check_parameters(multiplier, digits.base());
  const BigInt v = value(digits);
  if (v % multiplier != 0) return std::nullopt;
  BigInt q = v / multiplier;
  std::vector<int> pre(digits.size(), 0);
  for (std::size_t j = 0; j < pre.size(); ++j) {
    pre[j] = static_cast<int>(q % digits.base());
    q /= digits.base();
  }
  if (q != 0) return std::nullopt;
  return verify_equation(digits, DigitString(digits.base(), std::move(pre)),
                         multiplier);
}

}  // namespace permutiple
