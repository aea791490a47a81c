#include "agc/contract.hpp"

#include <cassert>

#include "agc/errors.hpp"

namespace agc {

contract contract::unchecked(element a, element g) {
  assert(join(a, g) == a.algebra()->top());
  return contract(std::move(a), std::move(g));
}

contract contract::saturate(element a, element g) {
  element saturated = implies(a, g);
  return contract(std::move(a), std::move(saturated));
}

contract contract::from_saturated(element a, element g) {
  if (join(a, g) != a.algebra()->top())
    throw error("unsaturated contract: join(assumptions, guarantees) is not top");
  return contract(std::move(a), std::move(g));
}

contract contract::top(const algebra_ptr& algebra) {
  return contract(algebra->bottom(), algebra->top());
}

contract contract::bottom(const algebra_ptr& algebra) {
  return contract(algebra->top(), algebra->bottom());
}

contract contract::identity(const algebra_ptr& algebra) {
  return contract(algebra->top(), algebra->top());
}

bool refines(const contract& c, const contract& c2) {
  return leq(c.guarantees(), c2.guarantees()) && leq(c2.assumptions(), c.assumptions());
}

contract conj(const contract& c, const contract& c2) {
  return contract::unchecked(join(c.assumptions(), c2.assumptions()),
                             meet(c.guarantees(), c2.guarantees()));
}

contract disj(const contract& c, const contract& c2) {
  return contract::unchecked(meet(c.assumptions(), c2.assumptions()),
                             join(c.guarantees(), c2.guarantees()));
}

contract merge(const contract& c, const contract& c2) {
  element a = meet(c.assumptions(), c2.assumptions());
  element g = implies(a, meet(c.guarantees(), c2.guarantees()));
  return contract::unchecked(std::move(a), std::move(g));
}

contract compose(const contract& c, const contract& c2) {
  element g = meet(c.guarantees(), c2.guarantees());
  element a = implies(g, meet(c.assumptions(), c2.assumptions()));
  return contract::unchecked(std::move(a), std::move(g));
}

contract reciprocal(const contract& c) {
  return contract::unchecked(c.guarantees(), c.assumptions());
}

contract act_left(const element& x, const contract& c) {
  return contract::unchecked(meet(x, c.assumptions()), implies(x, c.guarantees()));
}

contract act_right(const contract& c, const element& x) {
  return contract::unchecked(c.assumptions(),
                             implies(c.assumptions(), meet(x, c.guarantees())));
}

contract act_left_disj(const element& x, const contract& c) {
  return contract::unchecked(implies(x, c.assumptions()), meet(x, c.guarantees()));
}

contract act_right_disj(const contract& c, const element& x) {
  return contract::unchecked(implies(c.guarantees(), meet(x, c.assumptions())),
                             c.guarantees());
}

std::vector<contract> enumerate_contracts(const algebra_ptr& algebra, int max_generators) {
  const int n = algebra->generator_count();
  // 3^(2^n) contracts; past n = 3 the vector alone would dwarf memory.
  if (n > max_generators || algebra->width() > 8) throw cap_exceeded{};
  const std::size_t width = algebra->width();

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < width; ++i) count *= 3;

  std::vector<contract> out;
  out.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    std::uint64_t a = 0, g = 0, rest = index;
    for (std::size_t i = 0; i < width; ++i) {
      const std::uint64_t digit = rest % 3;
      rest /= 3;
      if (digit != 2) a |= std::uint64_t{1} << i;
      if (digit != 0) g |= std::uint64_t{1} << i;
    }
    out.push_back(contract::from_saturated(element(algebra, {a}), element(algebra, {g})));
  }
  return out;
}

}  // namespace agc
