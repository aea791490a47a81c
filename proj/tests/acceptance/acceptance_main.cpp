// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check pins its sweep sizes and time budget in code.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "agc/adjoints.hpp"
#include "agc/contract.hpp"
#include "agc/contract_io.hpp"
#include "agc/formula.hpp"
#include "agc/laws.hpp"

#include "../subprocess.hpp"

using namespace agc;

namespace {

int failures = 0;

struct outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

void run_criterion(int index, const std::string& name, std::int64_t budget_ms,
                   const std::function<void(outcome&)>& body) {
  outcome result;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(result);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (budget_ms > 0 && ms > budget_ms) {
    result.pass = false;
    result.detail += (result.detail.empty() ? "" : "; ") + std::string("exceeded ") +
                     std::to_string(budget_ms) + " ms budget";
  }
  if (!result.pass) ++failures;
  std::printf("%s  criterion %2d: %s (%lld ms)%s%s\n", result.pass ? "PASS" : "FAIL", index,
              name.c_str(), static_cast<long long>(ms), result.detail.empty() ? "" : " — ",
              result.detail.c_str());
  std::fflush(stdout);
}

element ev(const algebra_ptr& a, const std::string& text) {
  return evaluate(parse_formula(text), a);
}

contract ct(const algebra_ptr& a, const std::string& assumptions,
            const std::string& guarantees) {
  return contract::saturate(ev(a, assumptions), ev(a, guarantees));
}

std::string report_summary(const law_report& r) {
  return r.law + " n=" + std::to_string(r.n) + " violations=" +
         std::to_string(r.violations.size());
}

// Independent bilinear-map count at n = 0: filter all 3^9 binary operations
// against tables built from the public operations.
int bilinear_count_n0() {
  const auto a = free_bool_algebra(0);
  const auto cs = enumerate_contracts(a);
  const auto es = enumerate_elements(a);
  const auto index_of = [&](const contract& c) {
    for (int i = 0; i < 3; ++i)
      if (cs[i] == c) return i;
    throw std::runtime_error("contract not in enumeration");
  };
  int plus[3][3], act[2][3][2];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) plus[i][j] = index_of(conj(cs[i], cs[j]));
  for (int x = 0; x < 2; ++x)
    for (int i = 0; i < 3; ++i)
      for (int y = 0; y < 2; ++y)
        act[x][i][y] = index_of(act_right(act_left(es[x], cs[i]), es[y]));

  int count = 0;
  std::array<int, 9> f{};
  for (int code = 0; code < 19683; ++code) {
    int rest = code;
    for (auto& cell : f) {
      cell = rest % 3;
      rest /= 3;
    }
    const auto at = [&](int m, int nn) { return f[m * 3 + nn]; };
    bool ok = true;
    for (int m = 0; ok && m < 3; ++m)
      for (int m2 = 0; ok && m2 < 3; ++m2)
        for (int nn = 0; ok && nn < 3; ++nn)
          ok = at(plus[m][m2], nn) == plus[at(m, nn)][at(m2, nn)] &&
               at(m, plus[m2][nn]) == plus[at(m, m2)][at(m, nn)];
    for (int x = 0; ok && x < 2; ++x)
      for (int y = 0; ok && y < 2; ++y)
        for (int m = 0; ok && m < 3; ++m)
          for (int nn = 0; ok && nn < 3; ++nn) {
            const int lhs = act[x][at(m, nn)][y];
            ok = lhs == at(act[x][m][y], nn) && lhs == at(m, act[x][nn][y]);
          }
    if (ok) ++count;
  }
  return count;
}

void criterion_bimodule(outcome& o) {
  for (int n = 0; n <= 2; ++n) {
    const auto r = check_bimodule_axioms(n);
    o.require(r.ok(), report_summary(r));
    const std::uint64_t E = std::uint64_t{1} << (1u << n);
    std::uint64_t C = 1;
    for (unsigned i = 0; i < (1u << n); ++i) C *= 3;
    o.require(r.instances == C + 3 * E * E * C + E * E * C * C,
              "unexpected sweep size at n=" + std::to_string(n));
    if (n == 2)
      o.require(E * E * C * C == 1679616, "n=2 distributivity sweep must cover 16^2*81^2");
  }
}

void criterion_closed_forms(outcome& o) {
  for (int n = 0; n <= 2; ++n) {
    const auto a = free_bool_algebra(n);
    const auto cs = enumerate_contracts(a);
    const element top = a->top();
    std::uint64_t pairs = 0;
    for (const auto& x : cs)
      for (const auto& y : cs) {
        ++pairs;
        const element am = meet(x.assumptions(), y.assumptions());
        const element gm = meet(x.guarantees(), y.guarantees());
        const contract m = merge(x, y);
        o.require(m.assumptions() == am && m.guarantees() == implies(am, gm),
                  "merge closed form at n=" + std::to_string(n));
        o.require(join(m.assumptions(), m.guarantees()) == top, "merge saturation");
        const contract c = compose(x, y);
        o.require(c.guarantees() == gm && c.assumptions() == implies(gm, am),
                  "compose closed form at n=" + std::to_string(n));
        o.require(join(c.assumptions(), c.guarantees()) == top, "compose saturation");
        if (!o.pass) return;
      }
    o.require(pairs == (n == 2 ? 6561u : (n == 1 ? 81u : 9u)), "pair count");
  }
}

void criterion_glb_lub(outcome& o) {
  for (int n = 1; n <= 2; ++n) {
    const auto a = free_bool_algebra(n);
    const auto cs = enumerate_contracts(a);
    std::uint64_t triples = 0;
    for (const auto& x : cs)
      for (const auto& y : cs) {
        const contract glb = conj(x, y), lub = disj(x, y);
        for (const auto& z : cs) {
          ++triples;
          if (refines(z, glb) != (refines(z, x) && refines(z, y)) ||
              refines(lub, z) != (refines(x, z) && refines(y, z))) {
            o.require(false, "characterization fails at n=" + std::to_string(n));
            return;
          }
        }
      }
    o.require(triples == (n == 1 ? 729u : 531441u),
              "triple count at n=" + std::to_string(n));
  }
}

void criterion_identity_eq3(outcome& o) {
  for (int n = 0; n <= 2; ++n) {
    const auto a = free_bool_algebra(n);
    const auto cs = enumerate_contracts(a);
    for (const auto& x : cs)
      for (const auto& y : cs) {
        const element gg = meet(x.guarantees(), y.guarantees());
        const bool first = implies(join(x.assumptions(), y.assumptions()), gg) == gg;
        const bool second = meet(implies(x.assumptions(), x.guarantees()),
                                 implies(y.assumptions(), y.guarantees())) == gg;
        if (!first || !second) {
          o.require(false, "identity fails at n=" + std::to_string(n));
          return;
        }
      }
  }
}

void criterion_duality(outcome& o) {
  for (int n = 0; n <= 2; ++n) {
    const auto cs = enumerate_contracts(free_bool_algebra(n));
    for (const auto& x : cs)
      for (const auto& y : cs)
        if (reciprocal(merge(x, y)) != compose(reciprocal(x), reciprocal(y))) {
          o.require(false, "duality fails at n=" + std::to_string(n));
          return;
        }
  }
}

void criterion_tensor_merge(outcome& o) {
  const auto exhaustive = check_tensor_up_merge(0);
  o.require(exhaustive.ok(), report_summary(exhaustive));
  o.require(exhaustive.instances == 19683, "must scan all 3^9 candidate operations");

  const int bilinear = bilinear_count_n0();
  const int linear = static_cast<int>(enumerate_linear_maps(0).size());
  o.require(bilinear == linear,
            "bilinear count " + std::to_string(bilinear) + " != linear count " +
                std::to_string(linear));

  const auto constructive = check_tensor_up_merge(1);
  o.require(constructive.ok(), report_summary(constructive));
  o.require(constructive.instances == 144, "n=1 sweep must cover all 4*4*9 generated maps");
}

void criterion_tensor_compose(outcome& o) {
  const auto exhaustive = check_tensor_up_compose(0);
  o.require(exhaustive.ok(), report_summary(exhaustive));
  o.require(exhaustive.instances == 19683, "must scan all 3^9 candidate operations");

  const auto constructive = check_tensor_up_compose(1);
  o.require(constructive.ok(), report_summary(constructive));

  for (int n = 0; n <= 2; ++n) {
    const auto iso = check_bimodule_iso(n);
    o.require(iso.ok(), report_summary(iso));
  }
}

void criterion_galois(outcome& o) {
  // exhaustive at n = 1: 729 triples, four laws each
  {
    const auto a = free_bool_algebra(1);
    const auto cs = enumerate_contracts(a);
    std::uint64_t triples = 0;
    for (const auto& c1 : cs)
      for (const auto& c2 : cs) {
        const contract q = quotient(c1, c2);
        const contract s = separation(c1, c2);
        const contract i = implication(c1, c2);
        const contract co = coimplication(c1, c2);
        for (const auto& x : cs) {
          ++triples;
          if (refines(compose(x, c2), c1) != refines(x, q) ||
              refines(c1, merge(x, c2)) != refines(s, x) ||
              refines(conj(x, c2), c1) != refines(x, i) ||
              refines(c1, disj(x, c2)) != refines(co, x)) {
            o.require(false, "Galois equivalence fails at n=1");
            return;
          }
        }
      }
    o.require(triples == 729, "n=1 must cover all 729 triples");
  }

  // sampled at n = 2: 10,000 uniform triples, fixed seed
  {
    const auto a = free_bool_algebra(2);
    const auto cs = enumerate_contracts(a);
    std::mt19937_64 rng(0xA6C5EED5ull);
    std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
    std::unordered_map<std::uint32_t, std::array<contract, 4>> cache;
    for (int trial = 0; trial < 10000; ++trial) {
      const std::size_t i1 = pick(rng), i2 = pick(rng), ix = pick(rng);
      const std::uint32_t key = static_cast<std::uint32_t>(i1 * cs.size() + i2);
      auto found = cache.find(key);
      if (found == cache.end()) {
        const std::array<contract, 4> adjoints = {
            quotient(cs[i1], cs[i2]), separation(cs[i1], cs[i2]),
            implication(cs[i1], cs[i2]), coimplication(cs[i1], cs[i2])};
        found = cache.emplace(key, adjoints).first;
      }
      const auto& [q, s, i, co] = found->second;
      const contract &c1 = cs[i1], &c2 = cs[i2], &x = cs[ix];
      if (refines(compose(x, c2), c1) != refines(x, q) ||
          refines(c1, merge(x, c2)) != refines(s, x) ||
          refines(conj(x, c2), c1) != refines(x, i) ||
          refines(c1, disj(x, c2)) != refines(co, x)) {
        o.require(false, "Galois equivalence fails on sampled n=2 triple");
        return;
      }
    }
  }
}

void criterion_counts(outcome& o) {
  const std::uint64_t expected[] = {3, 9, 81, 6561};
  for (int n = 0; n <= 3; ++n) {
    const auto r = check_contract_count(n);
    o.require(r.ok(), report_summary(r));
    if (n <= 3) {
      std::uint64_t c = 1;
      for (unsigned i = 0; i < (1u << n); ++i) c *= 3;
      o.require(c == expected[n], "closed form mismatch");
    }
    if (n <= 2)
      o.require(enumerate_contracts(free_bool_algebra(n)).size() == expected[n],
                "enumerator count at n=" + std::to_string(n));
  }
  o.require(enumerate_contracts(free_bool_algebra(3)).size() == 6561, "enumerator at n=3");
}

void criterion_cli(outcome& o) {
  const auto dir = testutil::make_temp_dir();
  const auto write = [&](const std::string& name, const std::string& text) {
    const auto path = dir / name;
    std::ofstream out(path);
    out << text;
    return path.string();
  };
  const auto agc_run = [&](const std::vector<std::string>& args) {
    return testutil::run_cli(AGC_CLI_PATH, args, dir);
  };

  const auto u = bool_algebra::make({"p", "q", "r"});
  const auto pq = bool_algebra::make({"p", "q"});

  // merge of (p, p -> q) with (p, p -> r)
  write("m1.json", R"({"variables":["p","q"],"assumptions":"p","guarantees":"p -> q"})");
  write("m2.json", R"({"variables":["p","r"],"assumptions":"p","guarantees":"p -> r"})");
  auto r1 = agc_run({"op", "merge", (dir / "m1.json").string(), (dir / "m2.json").string(),
                     "-o", (dir / "m_out.json").string()});
  o.require(r1.exit_code == 0, "merge exit code " + std::to_string(r1.exit_code));
  if (r1.exit_code == 0) {
    const contract got = instantiate(read_contract_file(dir / "m_out.json"), u);
    o.require(got == merge(ct(u, "p", "p -> q"), ct(u, "p", "p -> r")),
              "merge output mismatch");
    o.require(got.guarantees() == ev(u, "p -> (q & r)"), "merge guarantee mismatch");
  }

  // compose of (p, p -> q) with (q, q -> r)
  write("c1.json", R"({"variables":["p","q"],"assumptions":"p","guarantees":"p -> q"})");
  write("c2.json", R"({"variables":["q","r"],"assumptions":"q","guarantees":"q -> r"})");
  auto r2 = agc_run({"op", "compose", (dir / "c1.json").string(), (dir / "c2.json").string(),
                     "-o", (dir / "c_out.json").string()});
  o.require(r2.exit_code == 0, "compose exit code " + std::to_string(r2.exit_code));
  if (r2.exit_code == 0) {
    const contract got = instantiate(read_contract_file(dir / "c_out.json"), u);
    const contract expected = compose(ct(u, "p", "p -> q"), ct(u, "q", "q -> r"));
    o.require(got == expected, "compose output mismatch");
    o.require(got.guarantees() == ev(u, "(p -> q) & (q -> r)"), "compose guarantee mismatch");
  }

  // saturate of (p, q)
  write("s.json", R"({"variables":["p","q"],"assumptions":"p","guarantees":"q"})");
  auto r3 = agc_run({"op", "saturate", (dir / "s.json").string(), "-o",
                     (dir / "s_out.json").string()});
  o.require(r3.exit_code == 0, "saturate exit code " + std::to_string(r3.exit_code));
  if (r3.exit_code == 0) {
    const contract got = instantiate(read_contract_file(dir / "s_out.json"), pq);
    o.require(got.assumptions() == ev(pq, "p") && got.guarantees() == ev(pq, "p -> q"),
              "saturate output mismatch");
    // round trip: saturating the output again is a fixed point
    auto r4 = agc_run({"op", "saturate", (dir / "s_out.json").string(), "-o",
                       (dir / "s_out2.json").string()});
    o.require(r4.exit_code == 0, "saturate round trip exit code");
    const auto once = read_contract_file(dir / "s_out.json");
    const auto twice = read_contract_file(dir / "s_out2.json");
    o.require(once.variables == twice.variables && once.assumptions == twice.assumptions &&
                  once.guarantees == twice.guarantees,
              "saturate round trip not a fixed point");
  }

  std::error_code ignored;
  std::filesystem::remove_all(dir, ignored);
}

}  // namespace

int main() {
  std::printf("agc acceptance suite\n");
  run_criterion(1, "bimodule axioms, exhaustive n = 0..2", 30000, criterion_bimodule);
  run_criterion(2, "merge/compose closed forms and saturation, n <= 2", 1000,
                criterion_closed_forms);
  run_criterion(3, "GLB/LUB characterization over all triples, n = 1..2", 10000,
                criterion_glb_lub);
  run_criterion(4, "guarantee identity under saturation, n <= 2", 0, criterion_identity_eq3);
  run_criterion(5, "merge/compose duality through reciprocal, n <= 2", 0, criterion_duality);
  run_criterion(6, "tensor universal property of merging", 60000, criterion_tensor_merge);
  run_criterion(7, "tensor universal property of composition + bimodule isomorphism", 60000,
                criterion_tensor_compose);
  run_criterion(8, "adjoint Galois connections (n = 1 exhaustive, n = 2 sampled)", 0,
                criterion_galois);
  run_criterion(9, "carrier counts 3, 9, 81, 6561", 5000, criterion_counts);
  run_criterion(10, "CLI end-to-end worked examples", 0, criterion_cli);

  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
