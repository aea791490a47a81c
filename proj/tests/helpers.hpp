#pragma once

#include <string>
#include <vector>

#include "agc/boolalg.hpp"
#include "agc/contract.hpp"
#include "agc/formula.hpp"

namespace testutil {

inline agc::algebra_ptr alg(std::vector<std::string> names) {
  return agc::bool_algebra::make(std::move(names));
}

/// Evaluate a formula string over an algebra.
inline agc::element ev(const agc::algebra_ptr& a, const std::string& text) {
  return agc::evaluate(agc::parse_formula(text), a);
}

/// Contract from two formula strings, saturating.
inline agc::contract ct(const agc::algebra_ptr& a, const std::string& assumptions,
                        const std::string& guarantees) {
  return agc::contract::saturate(ev(a, assumptions), ev(a, guarantees));
}

}  // namespace testutil
