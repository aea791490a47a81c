#include "agc/formula.hpp"

#include <cctype>
#include <set>

#include "agc/errors.hpp"

namespace agc {

struct formula::node {
  kind k;
  std::string name;                 // variable
  std::shared_ptr<const node> lhs;  // unary child or binary lhs
  std::shared_ptr<const node> rhs;
};

namespace {

using node_ptr = std::shared_ptr<const formula::node>;

node_ptr make_node(formula::kind k, std::string name = {}, node_ptr lhs = nullptr,
                   node_ptr rhs = nullptr) {
  auto n = std::make_shared<formula::node>();
  n->k = k;
  n->name = std::move(name);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

}  // namespace

formula formula::truth() { return formula(make_node(kind::truth)); }
formula formula::falsity() { return formula(make_node(kind::falsity)); }

formula formula::var(std::string name) {
  if (name.empty()) throw error("variable names must be non-empty");
  return formula(make_node(kind::variable, std::move(name)));
}

formula formula::negate(formula f) {
  return formula(make_node(kind::negation, {}, std::move(f.node_)));
}

formula formula::conjoin(formula lhs, formula rhs) {
  return formula(make_node(kind::conjunction, {}, std::move(lhs.node_), std::move(rhs.node_)));
}

formula formula::disjoin(formula lhs, formula rhs) {
  return formula(make_node(kind::disjunction, {}, std::move(lhs.node_), std::move(rhs.node_)));
}

formula formula::imply(formula lhs, formula rhs) {
  return formula(make_node(kind::implication, {}, std::move(lhs.node_), std::move(rhs.node_)));
}

formula::kind formula::node_kind() const { return node_->k; }
const std::string& formula::name() const { return node_->name; }
formula formula::child() const { return formula(node_->lhs); }
formula formula::lhs() const { return formula(node_->lhs); }
formula formula::rhs() const { return formula(node_->rhs); }

namespace {

void collect_variables(const node_ptr& n, std::set<std::string>& out) {
  if (!n) return;
  if (n->k == formula::kind::variable) out.insert(n->name);
  collect_variables(n->lhs, out);
  collect_variables(n->rhs, out);
}

bool nodes_equal(const node_ptr& a, const node_ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->k != b->k || a->name != b->name) return false;
  return nodes_equal(a->lhs, b->lhs) && nodes_equal(a->rhs, b->rhs);
}

int precedence(formula::kind k) {
  switch (k) {
    case formula::kind::implication: return 1;
    case formula::kind::disjunction: return 2;
    case formula::kind::conjunction: return 3;
    default: return 4;
  }
}

void print_node(const node_ptr& n, std::string& out, int parent_prec) {
  const int prec = precedence(n->k);
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (n->k) {
    case formula::kind::truth: out += "true"; break;
    case formula::kind::falsity: out += "false"; break;
    case formula::kind::variable: out += n->name; break;
    case formula::kind::negation:
      out += '!';
      print_node(n->lhs, out, 4);
      break;
    case formula::kind::conjunction:
      print_node(n->lhs, out, 3);
      out += " & ";
      print_node(n->rhs, out, 4);
      break;
    case formula::kind::disjunction:
      print_node(n->lhs, out, 2);
      out += " | ";
      print_node(n->rhs, out, 3);
      break;
    case formula::kind::implication:
      // right-associative: rhs prints at the same level, lhs one tighter
      print_node(n->lhs, out, 2);
      out += " -> ";
      print_node(n->rhs, out, 1);
      break;
  }
  if (parens) out += ')';
}

element eval_formula(const formula& f, const algebra_ptr& algebra) {
  switch (f.node_kind()) {
    case formula::kind::truth: return algebra->top();
    case formula::kind::falsity: return algebra->bottom();
    case formula::kind::variable: return algebra->generator(f.name());
    case formula::kind::negation: return complement(eval_formula(f.child(), algebra));
    case formula::kind::conjunction:
      return meet(eval_formula(f.lhs(), algebra), eval_formula(f.rhs(), algebra));
    case formula::kind::disjunction:
      return join(eval_formula(f.lhs(), algebra), eval_formula(f.rhs(), algebra));
    case formula::kind::implication:
      return implies(eval_formula(f.lhs(), algebra), eval_formula(f.rhs(), algebra));
  }
  throw error("corrupt formula node");
}

}  // namespace

std::vector<std::string> formula::variables() const {
  std::set<std::string> vars;
  collect_variables(node_, vars);
  return {vars.begin(), vars.end()};
}

std::string formula::to_string() const {
  std::string out;
  print_node(node_, out, 0);
  return out;
}

bool operator==(const formula& a, const formula& b) {
  return nodes_equal(a.node_, b.node_);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class tok {
  ident, kw_true, kw_false,
  bang, amp, pipe, arrow,
  lparen, rparen,
  end,
};

struct token {
  tok type;
  std::string text;
  std::size_t pos;  // 1-based
};

struct lexer {
  std::string_view src;
  std::size_t at = 0;  // 0-based cursor

  token next() {
    while (at < src.size() && std::isspace(static_cast<unsigned char>(src[at]))) ++at;
    const std::size_t pos = at + 1;
    if (at >= src.size()) return {tok::end, "end of input", pos};
    const char c = src[at];
    if (c == '(') { ++at; return {tok::lparen, "(", pos}; }
    if (c == ')') { ++at; return {tok::rparen, ")", pos}; }
    if (c == '!' || c == '~') { ++at; return {tok::bang, std::string(1, c), pos}; }
    if (c == '&') { ++at; return {tok::amp, "&", pos}; }
    if (c == '|') { ++at; return {tok::pipe, "|", pos}; }
    if (c == '-') {
      if (at + 1 < src.size() && src[at + 1] == '>') { at += 2; return {tok::arrow, "->", pos}; }
      throw parse_error("unexpected character '-'", pos);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = at;
      while (end < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
        ++end;
      std::string word(src.substr(at, end - at));
      at = end;
      if (word == "true") return {tok::kw_true, std::move(word), pos};
      if (word == "false") return {tok::kw_false, std::move(word), pos};
      if (word == "not") return {tok::bang, std::move(word), pos};
      if (word == "and") return {tok::amp, std::move(word), pos};
      if (word == "or") return {tok::pipe, std::move(word), pos};
      if (word == "implies") return {tok::arrow, std::move(word), pos};
      return {tok::ident, std::move(word), pos};
    }
    throw parse_error("unexpected character '" + std::string(1, c) + "'", pos);
  }
};

struct parser {
  lexer lex;
  token look;

  explicit parser(std::string_view text) : lex{text} { look = lex.next(); }

  token advance() {
    token t = look;
    look = lex.next();
    return t;
  }

  formula parse_implication() {  // right-associative, loosest
    formula lhs = parse_disjunction();
    if (look.type == tok::arrow) {
      advance();
      return formula::imply(std::move(lhs), parse_implication());
    }
    return lhs;
  }

  formula parse_disjunction() {
    formula lhs = parse_conjunction();
    while (look.type == tok::pipe) {
      advance();
      lhs = formula::disjoin(std::move(lhs), parse_conjunction());
    }
    return lhs;
  }

  formula parse_conjunction() {
    formula lhs = parse_unary();
    while (look.type == tok::amp) {
      advance();
      lhs = formula::conjoin(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  formula parse_unary() {
    if (look.type == tok::bang) {
      advance();
      return formula::negate(parse_unary());
    }
    return parse_atom();
  }

  formula parse_atom() {
    switch (look.type) {
      case tok::kw_true: advance(); return formula::truth();
      case tok::kw_false: advance(); return formula::falsity();
      case tok::ident: return formula::var(advance().text);
      case tok::lparen: {
        advance();
        formula inner = parse_implication();
        if (look.type != tok::rparen) throw parse_error("expected ')'", look.pos);
        advance();
        return inner;
      }
      default:
        throw parse_error("expected an operand", look.pos);
    }
  }
};

}  // namespace

formula parse_formula(std::string_view text) {
  parser p(text);
  formula f = p.parse_implication();
  if (p.look.type != tok::end)
    throw parse_error("unexpected '" + p.look.text + "'", p.look.pos);
  return f;
}

element evaluate(const formula& f, const algebra_ptr& algebra) {
  // Reject out-of-universe variables up front so the error names the
  // variable instead of surfacing mid-evaluation.
  for (const auto& v : f.variables())
    if (!algebra->generator_index(v)) throw unknown_variable(v);
  return eval_formula(f, algebra);
}

std::string to_dnf(const element& x) {
  const auto& algebra = *x.algebra();
  const std::size_t width = algebra.width();
  bool all = true, none = true;
  for (std::size_t i = 0; i < width; ++i)
    (x.bit(i) ? none : all) = false;
  if (none) return "false";
  if (all) return "true";

  std::string out;
  const int n = algebra.generator_count();
  for (std::size_t i = 0; i < width; ++i) {
    if (!x.bit(i)) continue;
    if (!out.empty()) out += " | ";
    out += '(';
    for (int k = 0; k < n; ++k) {
      if (k > 0) out += " & ";
      if (!((i >> (n - 1 - k)) & 1)) out += '!';
      out += algebra.generators()[k];
    }
    out += ')';
  }
  return out;
}

}  // namespace agc
