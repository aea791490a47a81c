#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "agc/boolalg.hpp"

namespace agc {

/// Propositional syntax tree over variables, the constants, negation,
/// conjunction, disjunction, and implication. Immutable; subtrees are shared.
class formula {
public:
  struct node;  // opaque; formulas are handles to immutable shared nodes

  enum class kind {
    truth,
    falsity,
    variable,
    negation,
    conjunction,
    disjunction,
    implication,
  };

  static formula truth();
  static formula falsity();
  static formula var(std::string name);
  static formula negate(formula f);
  static formula conjoin(formula lhs, formula rhs);
  static formula disjoin(formula lhs, formula rhs);
  static formula imply(formula lhs, formula rhs);

  kind node_kind() const;
  const std::string& name() const;  // variable nodes only
  formula child() const;            // negation only
  formula lhs() const;              // binary nodes only
  formula rhs() const;

  /// Free variables, sorted and deduplicated.
  std::vector<std::string> variables() const;

  /// Parseable rendering with minimal parentheses.
  std::string to_string() const;

  friend bool operator==(const formula& a, const formula& b);  // structural
  friend bool operator!=(const formula& a, const formula& b) { return !(a == b); }

private:
  explicit formula(std::shared_ptr<const node> n) : node_(std::move(n)) {}
  std::shared_ptr<const node> node_;
};

/// Grammar, loosest to tightest: `->` (right-associative), `|`, `&`, `!`;
/// parentheses; token spellings `!`/`~`/`not`, `&`/`and`, `|`/`or`,
/// `->`/`implies`, `true`, `false`; identifiers [A-Za-z_][A-Za-z0-9_]*;
/// whitespace-insensitive. Rejections throw parse_error with a 1-based
/// character position.
formula parse_formula(std::string_view text);

/// Truth table of f over the algebra's valuation ordering. Every variable of
/// f must be a generator; otherwise unknown_variable is thrown.
element evaluate(const formula& f, const algebra_ptr& algebra);

/// Canonical disjunction of minterms for the set bits, in valuation order;
/// "false" for bottom and "true" for top. Evaluating the parsed result gives
/// back the element.
std::string to_dnf(const element& x);

}  // namespace agc
