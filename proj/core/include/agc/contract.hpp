#pragma once

#include <vector>

#include "agc/boolalg.hpp"

namespace agc {

/// An assume-guarantee contract: a saturated pair (a, g) of assumptions and
/// guarantees over one Boolean algebra, i.e. join(a, g) = top. Construction
/// canonicalizes, so every contract value is saturated and equality is plain
/// component comparison.
class contract {
public:
  /// Canonicalizing constructor: stores (a, a -> g). Idempotent, and the
  /// identity on pairs that are already saturated.
  static contract saturate(element a, element g);

  /// Strict variant: requires join(a, g) = top and throws agc::error
  /// otherwise.
  static contract from_saturated(element a, element g);

  static contract top(const algebra_ptr& algebra);       // (0, 1)
  static contract bottom(const algebra_ptr& algebra);    // (1, 0)
  static contract identity(const algebra_ptr& algebra);  // e = (1, 1)

  const element& assumptions() const { return a_; }
  const element& guarantees() const { return g_; }
  const algebra_ptr& algebra() const { return a_.algebra(); }

  friend bool operator==(const contract& x, const contract& y) {
    return x.a_ == y.a_ && x.g_ == y.g_;
  }
  friend bool operator!=(const contract& x, const contract& y) { return !(x == y); }

private:
  contract(element a, element g) : a_(std::move(a)), g_(std::move(g)) {}
  static contract unchecked(element a, element g);

  // The operations below produce pairs that are saturated by construction.
  friend contract conj(const contract&, const contract&);
  friend contract disj(const contract&, const contract&);
  friend contract merge(const contract&, const contract&);
  friend contract compose(const contract&, const contract&);
  friend contract reciprocal(const contract&);
  friend contract act_left(const element&, const contract&);
  friend contract act_right(const contract&, const element&);
  friend contract act_left_disj(const element&, const contract&);
  friend contract act_right_disj(const contract&, const element&);

  element a_;
  element g_;
};

/// c refines c2: stricter guarantees, more relaxed assumptions.
bool refines(const contract& c, const contract& c2);

contract conj(const contract& c, const contract& c2);  // GLB: (a | a', g & g')
contract disj(const contract& c, const contract& c2);  // LUB: (a & a', g | g')
contract merge(const contract& c, const contract& c2);
contract compose(const contract& c, const contract& c2);
contract reciprocal(const contract& c);  // (a, g) -> (g, a); involution

// Conjunctive-monoid actions: x . C adds x to the assumptions, C . x adds x
// to the guarantees.
contract act_left(const element& x, const contract& c);   // (x & a, x -> g)
contract act_right(const contract& c, const element& x);  // (a, a -> (x & g))

// Disjunctive-monoid actions, the transport of the conjunctive ones along
// reciprocal.
contract act_left_disj(const element& x, const contract& c);   // (x -> a, x & g)
contract act_right_disj(const contract& c, const element& x);  // (g -> (x & a), g)

/// All 3^(2^n) saturated contracts, in a fixed deterministic order: ternary
/// counting with one digit per valuation (valuation 0 least significant),
/// digit 0 = (a=1,g=0), 1 = (a=1,g=1), 2 = (a=0,g=1). Index 0 is the bottom
/// contract and the last index is the top.
std::vector<contract> enumerate_contracts(const algebra_ptr& algebra,
                                          int max_generators = 3);

}  // namespace agc
