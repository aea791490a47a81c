#include "agc/boolalg.hpp"

#include <algorithm>
#include <unordered_set>

#include "agc/errors.hpp"

namespace agc {

namespace {

std::uint64_t tail_mask(std::size_t width) {
  const std::size_t rem = width % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

void mask_tail(std::vector<std::uint64_t>& words, std::size_t width) {
  if (!words.empty()) words.back() &= tail_mask(width);
}

const algebra_ptr& require_same(const element& x, const element& y) {
  if (!same_algebra(x, y)) throw algebra_mismatch{};
  return x.algebra();
}

}  // namespace

element::element(algebra_ptr algebra, std::vector<std::uint64_t> words)
    : algebra_(std::move(algebra)), words_(std::move(words)) {
  if (!algebra_) throw error("element requires an algebra");
  if (words_.size() != algebra_->word_count())
    throw error("element word count does not match algebra width");
  mask_tail(words_, algebra_->width());
}

std::size_t element::width() const { return algebra_->width(); }

bool element::bit(std::size_t valuation) const {
  return (words_[valuation >> 6] >> (valuation & 63)) & 1;
}

std::string element::bitstring() const {
  std::string out(width(), '0');
  for (std::size_t i = 0; i < out.size(); ++i)
    if (bit(i)) out[i] = '1';
  return out;
}

bool operator==(const element& x, const element& y) {
  return same_algebra(x, y) && x.words_ == y.words_;
}

bool same_algebra(const element& x, const element& y) {
  return x.algebra() == y.algebra() || *x.algebra() == *y.algebra();
}

bool_algebra::bool_algebra(std::vector<std::string> names)
    : names_(std::move(names)),
      n_(static_cast<int>(names_.size())),
      width_(std::size_t{1} << names_.size()) {}

algebra_ptr bool_algebra::make(std::vector<std::string> generators, int max_generators) {
  if (static_cast<int>(generators.size()) > max_generators)
    throw error("too many generators: " + std::to_string(generators.size()) +
                " exceeds the maximum of " + std::to_string(max_generators));
  std::unordered_set<std::string_view> seen;
  for (const auto& name : generators) {
    if (name.empty()) throw error("generator names must be non-empty");
    if (!seen.insert(name).second) throw error("duplicate generator: " + name);
  }
  return algebra_ptr(new bool_algebra(std::move(generators)));
}

std::optional<int> bool_algebra::generator_index(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

element bool_algebra::top() const {
  std::vector<std::uint64_t> words(word_count(), ~std::uint64_t{0});
  return element(shared_from_this(), std::move(words));
}

element bool_algebra::bottom() const {
  return element(shared_from_this(), std::vector<std::uint64_t>(word_count(), 0));
}

element bool_algebra::generator(int index) const {
  if (index < 0 || index >= n_) throw error("generator index out of range");
  std::vector<std::uint64_t> words(word_count(), 0);
  const int shift = n_ - 1 - index;
  for (std::size_t i = 0; i < width_; ++i)
    if ((i >> shift) & 1) words[i >> 6] |= std::uint64_t{1} << (i & 63);
  return element(shared_from_this(), std::move(words));
}

element bool_algebra::generator(std::string_view name) const {
  const auto index = generator_index(name);
  if (!index) throw unknown_variable(std::string(name));
  return generator(*index);
}

element bool_algebra::from_bitstring(std::string_view bits) const {
  if (bits.size() != width_)
    throw error("bitstring length " + std::to_string(bits.size()) +
                " does not match algebra width " + std::to_string(width_));
  std::vector<std::uint64_t> words(word_count(), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      words[i >> 6] |= std::uint64_t{1} << (i & 63);
    else if (bits[i] != '0')
      throw error("bitstring may contain only '0' and '1'");
  }
  return element(shared_from_this(), std::move(words));
}

element meet(const element& x, const element& y) {
  require_same(x, y);
  std::vector<std::uint64_t> words(x.words());
  for (std::size_t i = 0; i < words.size(); ++i) words[i] &= y.words()[i];
  return element(x.algebra(), std::move(words));
}

element join(const element& x, const element& y) {
  require_same(x, y);
  std::vector<std::uint64_t> words(x.words());
  for (std::size_t i = 0; i < words.size(); ++i) words[i] |= y.words()[i];
  return element(x.algebra(), std::move(words));
}

element complement(const element& x) {
  std::vector<std::uint64_t> words(x.words());
  for (auto& w : words) w = ~w;
  return element(x.algebra(), std::move(words));  // ctor masks the tail
}

element implies(const element& x, const element& y) {
  require_same(x, y);
  std::vector<std::uint64_t> words(x.words());
  for (std::size_t i = 0; i < words.size(); ++i)
    words[i] = ~words[i] | y.words()[i];
  return element(x.algebra(), std::move(words));
}

bool leq(const element& x, const element& y) {
  require_same(x, y);
  for (std::size_t i = 0; i < x.words().size(); ++i)
    if (x.words()[i] & ~y.words()[i]) return false;
  return true;
}

std::vector<element> enumerate_elements(const algebra_ptr& algebra, int max_generators) {
  const int n = algebra->generator_count();
  if (n > max_generators || algebra->width() > 63) throw cap_exceeded{};
  const std::uint64_t count = std::uint64_t{1} << algebra->width();
  std::vector<element> out;
  out.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v)
    out.push_back(element(algebra, {v}));
  return out;
}

algebra_ptr free_bool_algebra(int n) {
  static const char* short_names[] = {"p", "q", "r", "s"};
  std::vector<std::string> names;
  names.reserve(n);
  for (int k = 0; k < n; ++k)
    names.push_back(n <= 4 ? short_names[k] : "x" + std::to_string(k));
  return bool_algebra::make(std::move(names));
}

}  // namespace agc
