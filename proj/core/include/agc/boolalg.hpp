#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agc {

class bool_algebra;
using algebra_ptr = std::shared_ptr<const bool_algebra>;

/// One member of a finite Boolean algebra, stored as a dense truth table.
///
/// Bit i is the value of the function under the i-th valuation. Valuation i
/// assigns generator k (0-based in generator order) the bit (n-1-k) of i, so
/// the generator list reads as the big-endian binary digits of the valuation
/// index. The text form produced by bitstring() puts valuation 0 first.
class element {
public:
  element(algebra_ptr algebra, std::vector<std::uint64_t> words);

  const algebra_ptr& algebra() const { return algebra_; }
  std::size_t width() const;
  bool bit(std::size_t valuation) const;
  std::string bitstring() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const element& x, const element& y);
  friend bool operator!=(const element& x, const element& y) { return !(x == y); }

private:
  algebra_ptr algebra_;
  std::vector<std::uint64_t> words_;
};

/// The free Boolean algebra on a list of named generators. Elements are truth
/// tables over the 2^n valuations of the generators. Immutable; share via
/// algebra_ptr.
class bool_algebra : public std::enable_shared_from_this<bool_algebra> {
public:
  static constexpr int max_generators_default = 16;

  /// Generator names must be distinct and non-empty, and there may be at most
  /// max_generators of them so elements fit dense bitvectors.
  static algebra_ptr make(std::vector<std::string> generators,
                          int max_generators = max_generators_default);

  int generator_count() const { return n_; }
  std::size_t width() const { return width_; }  // 2^n valuations
  std::size_t word_count() const { return (width_ + 63) / 64; }
  const std::vector<std::string>& generators() const { return names_; }
  std::optional<int> generator_index(std::string_view name) const;

  element top() const;
  element bottom() const;
  element generator(int index) const;
  element generator(std::string_view name) const;  // throws unknown_variable
  element from_bitstring(std::string_view bits) const;

  friend bool operator==(const bool_algebra& x, const bool_algebra& y) {
    return x.names_ == y.names_;
  }
  friend bool operator!=(const bool_algebra& x, const bool_algebra& y) {
    return !(x == y);
  }

private:
  explicit bool_algebra(std::vector<std::string> names);

  std::vector<std::string> names_;
  int n_;
  std::size_t width_;
};

/// True when both elements live in the same algebra (same object or equal
/// generator lists).
bool same_algebra(const element& x, const element& y);

element meet(const element& x, const element& y);
element join(const element& x, const element& y);
element complement(const element& x);
element implies(const element& x, const element& y);  // !x | y
bool leq(const element& x, const element& y);          // x & y == x

/// All 2^(2^n) elements, in ascending truth-table order. The cap is the
/// largest generator count that may be enumerated (default 3, i.e. at most
/// 256 elements).
std::vector<element> enumerate_elements(const algebra_ptr& algebra,
                                        int max_generators = 3);

/// Fixture algebra with synthesized generator names (p, q, r, s for n <= 4,
/// x0..x{n-1} beyond).
algebra_ptr free_bool_algebra(int n);

}  // namespace agc
