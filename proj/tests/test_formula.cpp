#include <doctest.h>

#include "agc/errors.hpp"
#include "agc/formula.hpp"
#include "helpers.hpp"

using namespace agc;
using testutil::alg;
using testutil::ev;

namespace {

std::size_t position_of(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const parse_error& e) {
    return e.position();
  }
  return 0;  // no error raised
}

}  // namespace

TEST_CASE("implication is right-associative") {
  const formula expected = formula::imply(
      formula::var("p"), formula::imply(formula::var("q"), formula::var("r")));
  CHECK(parse_formula("p -> q -> r") == expected);
  CHECK(parse_formula("p -> (q -> r)") == expected);
  CHECK(parse_formula("(p -> q) -> r") != expected);
}

TEST_CASE("precedence: ! then & then | then ->") {
  CHECK(parse_formula("!p & q | r") ==
        formula::disjoin(
            formula::conjoin(formula::negate(formula::var("p")), formula::var("q")),
            formula::var("r")));
  CHECK(parse_formula("p | q & r") ==
        formula::disjoin(formula::var("p"),
                         formula::conjoin(formula::var("q"), formula::var("r"))));
  CHECK(parse_formula("p -> q | r") ==
        formula::imply(formula::var("p"),
                       formula::disjoin(formula::var("q"), formula::var("r"))));
  CHECK(parse_formula("(p | q) & r") ==
        formula::conjoin(formula::disjoin(formula::var("p"), formula::var("q")),
                         formula::var("r")));
}

TEST_CASE("word operators parse like their symbols") {
  CHECK(parse_formula("not p and q or r") == parse_formula("!p & q | r"));
  CHECK(parse_formula("p implies q") == parse_formula("p -> q"));
  CHECK(parse_formula("~p") == parse_formula("!p"));
  CHECK(parse_formula("!!p") == formula::negate(formula::negate(formula::var("p"))));
  // keywords only bind as whole words
  CHECK(parse_formula("nota").node_kind() == formula::kind::variable);
  CHECK(parse_formula("true_").node_kind() == formula::kind::variable);
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_formula("  p->q  ") == parse_formula("p -> q"));
  CHECK(parse_formula("p\t&\nq") == parse_formula("p & q"));
}

TEST_CASE("syntax errors carry 1-based positions") {
  CHECK(position_of("") == 1);
  CHECK(position_of("p &") == 4);  // dangling operator
  CHECK(position_of("(p") == 3);
  CHECK(position_of("p q") == 3);
  CHECK(position_of("p ->") == 5);
  CHECK(position_of("| p") == 1);
  CHECK(position_of("p @ q") == 3);
  CHECK(position_of("p -") == 3);
  CHECK(position_of(")") == 1);
  CHECK_THROWS_AS(parse_formula("p &"), parse_error);
}

TEST_CASE("evaluation produces truth tables") {
  auto a1 = alg({"p"});
  CHECK(ev(a1, "p").bitstring() == "01");
  auto a2 = alg({"p", "q"});
  CHECK(ev(a2, "true").bitstring() == "1111");
  CHECK(ev(a2, "false").bitstring() == "0000");
  CHECK(ev(a2, "p -> q").bitstring() == "1101");
  CHECK(ev(a2, "p & q").bitstring() == "0001");
  CHECK(ev(a2, "!p").bitstring() == "1100");
  CHECK(ev(alg({}), "true").bitstring() == "1");
}

TEST_CASE("unknown variables are named, not auto-declared") {
  auto a = alg({"p", "q"});
  try {
    ev(a, "p & r");
    FAIL("expected unknown_variable");
  } catch (const unknown_variable& e) {
    CHECK(e.name() == "r");
    CHECK(std::string(e.what()).find("r") != std::string::npos);
  }
}

TEST_CASE("to_dnf examples") {
  auto a1 = alg({"p"});
  CHECK(to_dnf(a1->from_bitstring("00")) == "false");
  CHECK(to_dnf(a1->from_bitstring("01")) == "(p)");
  CHECK(to_dnf(a1->from_bitstring("10")) == "(!p)");
  CHECK(to_dnf(a1->from_bitstring("11")) == "true");
  auto a2 = alg({"p", "q"});
  CHECK(to_dnf(a2->from_bitstring("1101")) == "(!p & !q) | (!p & q) | (p & q)");
  CHECK(to_dnf(a2->from_bitstring("0011")) == "(p & !q) | (p & q)");
  auto a0 = alg({});
  CHECK(to_dnf(a0->from_bitstring("1")) == "true");
  CHECK(to_dnf(a0->from_bitstring("0")) == "false");
}

TEST_CASE("eval(parse(to_dnf(x))) is the identity, exhaustively for n <= 2") {
  for (int n = 0; n <= 2; ++n) {
    auto a = free_bool_algebra(n);
    for (const auto& x : enumerate_elements(a)) {
      CAPTURE(x.bitstring());
      CHECK(ev(a, to_dnf(x)) == x);
    }
  }
}

TEST_CASE("to_string parses back to the same tree") {
  for (const char* text :
       {"p -> q -> r", "!p & q | r", "p | q & r", "(p | q) & r", "!(p | q)",
        "true -> !false", "p & q & r", "p -> (q & !r | p)"}) {
    const formula f = parse_formula(text);
    CHECK(parse_formula(f.to_string()) == f);
  }
}

TEST_CASE("variables are sorted and deduplicated") {
  CHECK(parse_formula("q & p | p -> zz").variables() ==
        std::vector<std::string>{"p", "q", "zz"});
  CHECK(parse_formula("true").variables().empty());
}
