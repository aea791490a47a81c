#include "agc/adjoints.hpp"

#include "agc/errors.hpp"

namespace agc {

namespace {

void require_same(const contract& c1, const contract& c2) {
  if (!same_algebra(c1.assumptions(), c2.assumptions())) throw algebra_mismatch{};
}

}  // namespace

contract quotient(const contract& c1, const contract& c2, int max_generators) {
  require_same(c1, c2);
  contract best = contract::bottom(c1.algebra());  // always a candidate
  for (const auto& x : enumerate_contracts(c1.algebra(), max_generators))
    if (refines(compose(x, c2), c1)) best = disj(best, x);
  if (!refines(compose(best, c2), c1)) throw adjoint_witness_error{};
  return best;
}

contract separation(const contract& c1, const contract& c2, int max_generators) {
  require_same(c1, c2);
  contract best = contract::top(c1.algebra());  // always a candidate
  for (const auto& x : enumerate_contracts(c1.algebra(), max_generators))
    if (refines(c1, merge(x, c2))) best = conj(best, x);
  if (!refines(c1, merge(best, c2))) throw adjoint_witness_error{};
  return best;
}

contract implication(const contract& c1, const contract& c2, int max_generators) {
  require_same(c1, c2);
  contract best = contract::bottom(c1.algebra());
  for (const auto& x : enumerate_contracts(c1.algebra(), max_generators))
    if (refines(conj(x, c2), c1)) best = disj(best, x);
  if (!refines(conj(best, c2), c1)) throw adjoint_witness_error{};
  return best;
}

contract coimplication(const contract& c1, const contract& c2, int max_generators) {
  require_same(c1, c2);
  contract best = contract::top(c1.algebra());
  for (const auto& x : enumerate_contracts(c1.algebra(), max_generators))
    if (refines(c1, disj(x, c2))) best = conj(best, x);
  if (!refines(c1, disj(best, c2))) throw adjoint_witness_error{};
  return best;
}

}  // namespace agc
