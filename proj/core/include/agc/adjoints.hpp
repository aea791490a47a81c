#pragma once

#include "agc/contract.hpp"

namespace agc {

// The four adjoint operations, computed by residuation over the finite
// contract lattice: enumerate every contract over the operands' algebra,
// fold the optimal bound over the candidates, then verify the bound is
// itself a candidate. The fold seeds (bottom resp. top) are always
// candidates, so the candidate set is never empty; a bound that fails its
// own defining property throws adjoint_witness_error.

/// Largest X with refines(compose(X, c2), c1).
contract quotient(const contract& c1, const contract& c2, int max_generators = 3);

/// Smallest X with refines(c1, merge(X, c2)).
contract separation(const contract& c1, const contract& c2, int max_generators = 3);

/// Largest X with refines(conj(X, c2), c1).
contract implication(const contract& c1, const contract& c2, int max_generators = 3);

/// Smallest X with refines(c1, disj(X, c2)).
contract coimplication(const contract& c1, const contract& c2, int max_generators = 3);

}  // namespace agc
