#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "agc/boolalg.hpp"

namespace agc {

/// One counterexample: rendered operand bindings plus the two sides that
/// should have agreed.
struct law_violation {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one law check. A law holds on the checked instances iff
/// violations is empty; the recorded list is capped (see law_options), so a
/// failing report may carry fewer counterexamples than there are.
struct law_report {
  std::string law;
  int n = 0;
  std::uint64_t instances = 0;
  std::vector<law_violation> violations;
  std::int64_t millis = 0;

  bool ok() const { return violations.empty(); }
};

/// Report JSON: {"law":..., "n":..., "instances":..., "violations":
/// [{"inputs":[...], "lhs":..., "rhs":...}, ...], "millis":...}.
std::string to_json(const law_report& report);
std::string to_json(const std::vector<law_report>& reports);

/// How the tensor-product and linear-map checks explore the space of maps.
/// exhaustive scans every binary operation (only feasible at n = 0, where
/// there are 3^9 of them); constructive sweeps the generated maps
/// m -> x.(m T D).y, mirroring the factorization argument. automatic picks
/// exhaustive at n = 0 and constructive otherwise.
enum class tensor_mode { automatic, exhaustive, constructive };

struct law_options {
  int max_n = 3;  // enumeration cap, as a generator count
  tensor_mode mode = tensor_mode::automatic;
  /// Checks whose exhaustive instance count would exceed this refuse to run
  /// (cap_exceeded) instead of running for days.
  std::uint64_t work_budget = std::uint64_t{1} << 33;
  std::size_t violation_cap = 20;
};

/// The five bimodule bullets for the conjunctive actions: unit, left and
/// right associativity, interchange, and two-sided distributivity over
/// contract conjunction.
law_report check_bimodule_axioms(int n, const law_options& options = {});

/// Merging is bilinear over the conjunctive monoid: commutativity, additivity
/// in a slot, and x.(C T C').y = (x.C.y) T C' = C T (x.C'.y).
law_report check_bilinear_merge(int n, const law_options& options = {});

/// The dual statement: composition is bilinear over the disjunctive monoid
/// with the disjunctive actions.
law_report check_bilinear_compose(int n, const law_options& options = {});

/// Enumerates linear maps (filter mode at n = 0, constructive otherwise),
/// re-verifies both linear-map identities on everything yielded, and checks
/// the identity map is among them. At n = 0 it also checks every
/// constructively generated map is found by the filter.
law_report check_linear_maps(int n, const law_options& options = {});

/// The universal property for merging. Exhaustive (n = 0): every one of the
/// 3^9 binary operations is scanned; each bilinear one must factor uniquely
/// through merge via fhat(C) = f(e, C), and the bilinear and linear map
/// counts must agree. Constructive (n >= 1): each generated linear map fhat
/// yields f = fhat o merge, which must be bilinear and recover fhat as
/// C -> f(e, C).
law_report check_tensor_up_merge(int n, const law_options& options = {});

/// Same suite for composition over the disjunctive structure, plus the
/// duality transport: every merge factorization carries over to a compose
/// factorization along reciprocal.
law_report check_tensor_up_compose(int n, const law_options& options = {});

/// Reciprocal is a bijective linear map between the two bimodule structures.
law_report check_bimodule_iso(int n, const law_options& options = {});

/// The number of saturated pairs, counted by scanning all element pairs,
/// equals 3^(2^n) and the enumerator's count.
law_report check_contract_count(int n, const law_options& options = {});

/// A contract-to-contract map tabulated over the enumerate_contracts order.
struct linear_map {
  std::vector<std::uint32_t> table;

  friend bool operator==(const linear_map& x, const linear_map& y) {
    return x.table == y.table;
  }
};

/// Linear maps for the conjunctive view, deduplicated, in discovery order.
/// Filter mode requires n = 0 (3^3 candidate functions); constructive mode
/// generates m -> x.(m merge D).y for all x, y, D.
std::vector<linear_map> enumerate_linear_maps(int n, const law_options& options = {});

/// Registry driving the CLI: the eight named laws above, in a fixed order.
const std::vector<std::string>& law_names();
law_report run_law(std::string_view name, int n, const law_options& options = {});
std::vector<law_report> run_all_laws(int n, const law_options& options = {});

}  // namespace agc
