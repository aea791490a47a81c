#include "agc/laws.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>

#include <json.hpp>

#include "agc/contract.hpp"
#include "agc/errors.hpp"

namespace agc {

namespace {

// ---------------------------------------------------------------------------
// Packed truth tables. The harness caps at small generator counts, so an
// element fits one word and a contract is two. Everything below is pure bit
// math; the public vector-backed types appear only at the rendering edge.
// ---------------------------------------------------------------------------

struct packed {
  std::uint64_t a = 0, g = 0;
  friend bool operator==(const packed&, const packed&) = default;
};

struct sys {
  int n = 0;
  unsigned w = 1;            // 2^n valuations
  std::uint64_t mask = 1;    // low w bits
  std::uint64_t elems = 2;   // 2^w
  std::uint64_t contracts = 3;  // 3^w
  algebra_ptr alg;
};

sys make_sys(int n, const law_options& o) {
  if (n < 0) throw error("generator count must be non-negative");
  if (n > o.max_n || n > 5) throw cap_exceeded{};
  sys s;
  s.n = n;
  s.w = 1u << n;
  s.mask = s.w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.w) - 1;
  s.elems = std::uint64_t{1} << s.w;
  s.contracts = 1;
  for (unsigned i = 0; i < s.w; ++i) s.contracts *= 3;
  s.alg = free_bool_algebra(n);
  return s;
}

void require_budget(const law_options& o, unsigned __int128 cost, const char* law) {
  if (cost > o.work_budget)
    throw cap_exceeded(std::string(law) + " at this n needs more instance checks than the work budget allows");
}

inline std::uint64_t e_imp(const sys& s, std::uint64_t x, std::uint64_t y) {
  return (~x | y) & s.mask;
}
inline bool e_leq(std::uint64_t x, std::uint64_t y) { return (x & ~y) == 0; }

inline packed c_top(const sys& s) { return {0, s.mask}; }
inline packed c_bottom(const sys& s) { return {s.mask, 0}; }
inline packed c_e(const sys& s) { return {s.mask, s.mask}; }

inline packed c_conj(packed x, packed y) { return {x.a | y.a, x.g & y.g}; }
inline packed c_disj(packed x, packed y) { return {x.a & y.a, x.g | y.g}; }
inline packed c_merge(const sys& s, packed x, packed y) {
  const std::uint64_t a = x.a & y.a;
  return {a, e_imp(s, a, x.g & y.g)};
}
inline packed c_compose(const sys& s, packed x, packed y) {
  const std::uint64_t g = x.g & y.g;
  return {e_imp(s, g, x.a & y.a), g};
}
inline packed c_recip(packed x) { return {x.g, x.a}; }
inline bool c_refines(packed x, packed y) { return e_leq(x.g, y.g) && e_leq(y.a, x.a); }

inline packed act_conj(const sys& s, std::uint64_t x, packed m, std::uint64_t y) {
  const packed left{x & m.a, e_imp(s, x, m.g)};
  return {left.a, e_imp(s, left.a, y & left.g)};
}
inline packed act_disj(const sys& s, std::uint64_t x, packed m, std::uint64_t y) {
  const packed left{e_imp(s, x, m.a), x & m.g};
  return {e_imp(s, left.g, y & left.a), left.g};
}

packed contract_at(const sys& s, std::uint64_t index) {
  packed p;
  for (unsigned i = 0; i < s.w; ++i) {
    const std::uint64_t digit = index % 3;
    index /= 3;
    if (digit != 2) p.a |= std::uint64_t{1} << i;
    if (digit != 0) p.g |= std::uint64_t{1} << i;
  }
  return p;
}

std::uint64_t index_of(const sys& s, packed p) {
  std::uint64_t index = 0, scale = 1;
  for (unsigned i = 0; i < s.w; ++i) {
    const bool a = (p.a >> i) & 1, g = (p.g >> i) & 1;
    index += scale * (a ? (g ? 1 : 0) : 2);
    scale *= 3;
  }
  return index;
}

std::string render_elem(const sys& s, std::uint64_t x) {
  std::string out(s.w, '0');
  for (unsigned i = 0; i < s.w; ++i)
    if ((x >> i) & 1) out[i] = '1';
  return out;
}

std::string render_contract(const sys& s, packed p) {
  return "(a=" + render_elem(s, p.a) + ", g=" + render_elem(s, p.g) + ")";
}

struct sink {
  law_report& report;
  std::size_t cap;

  void add(std::vector<std::string> inputs, std::string lhs, std::string rhs) {
    if (report.violations.size() < cap)
      report.violations.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
  }
};

struct stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

law_report new_report(std::string law, int n) {
  law_report r;
  r.law = std::move(law);
  r.n = n;
  return r;
}

tensor_mode resolve_mode(tensor_mode mode, int n) {
  if (mode != tensor_mode::automatic) return mode;
  return n == 0 ? tensor_mode::exhaustive : tensor_mode::constructive;
}

// Which monoid structure a bilinearity/tensor check runs over.
struct view {
  bool conjunctive;
  packed (*plus)(packed, packed);
  packed (*tau)(const sys&, packed, packed);
  packed (*act)(const sys&, std::uint64_t, packed, std::uint64_t);
};

constexpr view conj_view{true, &c_conj, &c_merge, &act_conj};
constexpr view disj_view{false, &c_disj, &c_compose, &act_disj};

// ---------------------------------------------------------------------------
// Tabulated maps over contract indices (enumerate_contracts order).
// ---------------------------------------------------------------------------

struct map_ctx {
  const sys* s = nullptr;
  view v{};
  std::uint32_t C = 0, E = 0;
  std::vector<packed> cs;              // all contracts by index
  std::vector<std::uint32_t> plus_idx; // C*C
  std::vector<std::uint32_t> tau_idx;  // C*C
  std::vector<std::uint32_t> act_idx;  // E*C*E
  std::vector<std::uint32_t> recip_idx;
  std::uint32_t e_idx = 0;

  std::uint32_t plus(std::uint32_t i, std::uint32_t j) const { return plus_idx[i * C + j]; }
  std::uint32_t tau(std::uint32_t i, std::uint32_t j) const { return tau_idx[i * C + j]; }
  std::uint32_t act(std::uint32_t x, std::uint32_t i, std::uint32_t y) const {
    return act_idx[(x * C + i) * E + y];
  }
};

map_ctx build_ctx(const sys& s, const view& v) {
  map_ctx ctx;
  ctx.s = &s;
  ctx.v = v;
  ctx.C = static_cast<std::uint32_t>(s.contracts);
  ctx.E = static_cast<std::uint32_t>(s.elems);
  ctx.cs.reserve(ctx.C);
  for (std::uint32_t i = 0; i < ctx.C; ++i) ctx.cs.push_back(contract_at(s, i));
  ctx.plus_idx.resize(std::size_t{ctx.C} * ctx.C);
  ctx.tau_idx.resize(std::size_t{ctx.C} * ctx.C);
  for (std::uint32_t i = 0; i < ctx.C; ++i)
    for (std::uint32_t j = 0; j < ctx.C; ++j) {
      ctx.plus_idx[i * ctx.C + j] =
          static_cast<std::uint32_t>(index_of(s, v.plus(ctx.cs[i], ctx.cs[j])));
      ctx.tau_idx[i * ctx.C + j] =
          static_cast<std::uint32_t>(index_of(s, v.tau(s, ctx.cs[i], ctx.cs[j])));
    }
  ctx.act_idx.resize(std::size_t{ctx.E} * ctx.C * ctx.E);
  for (std::uint32_t x = 0; x < ctx.E; ++x)
    for (std::uint32_t i = 0; i < ctx.C; ++i)
      for (std::uint32_t y = 0; y < ctx.E; ++y)
        ctx.act_idx[(std::size_t{x} * ctx.C + i) * ctx.E + y] =
            static_cast<std::uint32_t>(index_of(s, v.act(s, x, ctx.cs[i], y)));
  ctx.recip_idx.resize(ctx.C);
  for (std::uint32_t i = 0; i < ctx.C; ++i)
    ctx.recip_idx[i] = static_cast<std::uint32_t>(index_of(s, c_recip(ctx.cs[i])));
  ctx.e_idx = static_cast<std::uint32_t>(index_of(s, c_e(s)));
  return ctx;
}

using map_table = std::vector<std::uint32_t>;  // length C

bool is_linear(const map_ctx& ctx, const map_table& t) {
  for (std::uint32_t i = 0; i < ctx.C; ++i)
    for (std::uint32_t j = 0; j < ctx.C; ++j)
      if (t[ctx.plus(i, j)] != ctx.plus(t[i], t[j])) return false;
  for (std::uint32_t x = 0; x < ctx.E; ++x)
    for (std::uint32_t i = 0; i < ctx.C; ++i)
      for (std::uint32_t y = 0; y < ctx.E; ++y)
        if (t[ctx.act(x, i, y)] != ctx.act(x, t[i], y)) return false;
  return true;
}

struct generated_map {
  map_table table;
  std::uint32_t x, y, d;  // first generating triple
};

/// All maps m -> x.(m tau D).y, deduplicated by table, in generation order.
std::vector<generated_map> generate_maps(const map_ctx& ctx) {
  std::vector<generated_map> out;
  std::set<map_table> seen;
  map_table t(ctx.C);
  for (std::uint32_t x = 0; x < ctx.E; ++x)
    for (std::uint32_t y = 0; y < ctx.E; ++y)
      for (std::uint32_t d = 0; d < ctx.C; ++d) {
        for (std::uint32_t m = 0; m < ctx.C; ++m) t[m] = ctx.act(x, ctx.tau(m, d), y);
        if (seen.insert(t).second) out.push_back({t, x, y, d});
      }
  return out;
}

std::vector<std::string> render_triple(const map_ctx& ctx, const generated_map& gm) {
  return {"x=" + render_elem(*ctx.s, gm.x), "y=" + render_elem(*ctx.s, gm.y),
          "D=" + render_contract(*ctx.s, ctx.cs[gm.d])};
}

// ---------------------------------------------------------------------------
// Law checks
// ---------------------------------------------------------------------------

law_report check_bimodule_axioms_impl(int n, const law_options& o) {
  const sys s = make_sys(n, o);
  law_report r = new_report("bimodule-axioms", n);
  sink out{r, o.violation_cap};
  stopwatch clock;

  const unsigned __int128 E = s.elems, C = s.contracts;
  require_budget(o, C + 3 * E * E * C + E * E * C * C, "bimodule-axioms");

  std::vector<packed> cs;
  cs.reserve(s.contracts);
  for (std::uint64_t i = 0; i < s.contracts; ++i) cs.push_back(contract_at(s, i));

  // unit: 1.m = m = m.1
  for (const packed& m : cs) {
    ++r.instances;
    const packed lhs = act_conj(s, s.mask, m, s.mask);
    if (lhs != m)
      out.add({"axiom=unit", "m=" + render_contract(s, m)}, render_contract(s, lhs),
              render_contract(s, m));
  }

  // left associativity: (x & y).m = x.(y.m)
  for (std::uint64_t x = 0; x < s.elems; ++x)
    for (std::uint64_t y = 0; y < s.elems; ++y)
      for (const packed& m : cs) {
        ++r.instances;
        const packed lhs = act_conj(s, x & y, m, s.mask);
        const packed rhs = act_conj(s, x, act_conj(s, y, m, s.mask), s.mask);
        if (lhs != rhs)
          out.add({"axiom=left-assoc", "x=" + render_elem(s, x), "y=" + render_elem(s, y),
                   "m=" + render_contract(s, m)},
                  render_contract(s, lhs), render_contract(s, rhs));
      }

  // right associativity: m.(x & y) = (m.x).y
  for (std::uint64_t x = 0; x < s.elems; ++x)
    for (std::uint64_t y = 0; y < s.elems; ++y)
      for (const packed& m : cs) {
        ++r.instances;
        const packed lhs = act_conj(s, s.mask, m, x & y);
        const packed rhs = act_conj(s, s.mask, act_conj(s, s.mask, m, x), y);
        if (lhs != rhs)
          out.add({"axiom=right-assoc", "x=" + render_elem(s, x), "y=" + render_elem(s, y),
                   "m=" + render_contract(s, m)},
                  render_contract(s, lhs), render_contract(s, rhs));
      }

  // interchange: (x.m).y = x.(m.y)
  for (std::uint64_t x = 0; x < s.elems; ++x)
    for (std::uint64_t y = 0; y < s.elems; ++y)
      for (const packed& m : cs) {
        ++r.instances;
        const packed lhs = act_conj(s, s.mask, act_conj(s, x, m, s.mask), y);
        const packed rhs = act_conj(s, x, act_conj(s, s.mask, m, y), s.mask);
        if (lhs != rhs)
          out.add({"axiom=interchange", "x=" + render_elem(s, x), "y=" + render_elem(s, y),
                   "m=" + render_contract(s, m)},
                  render_contract(s, lhs), render_contract(s, rhs));
      }

  // distributivity: x.(m & m').y = (x.m.y) & (x.m'.y)
  for (std::uint64_t x = 0; x < s.elems; ++x)
    for (std::uint64_t y = 0; y < s.elems; ++y)
      for (const packed& m : cs)
        for (const packed& m2 : cs) {
          ++r.instances;
          const packed lhs = act_conj(s, x, c_conj(m, m2), y);
          const packed rhs = c_conj(act_conj(s, x, m, y), act_conj(s, x, m2, y));
          if (lhs != rhs)
            out.add({"axiom=distributivity", "x=" + render_elem(s, x),
                     "y=" + render_elem(s, y), "m=" + render_contract(s, m),
                     "m'=" + render_contract(s, m2)},
                    render_contract(s, lhs), render_contract(s, rhs));
        }

  r.millis = clock.millis();
  return r;
}

law_report check_bilinear_impl(const char* name, const view& v, int n, const law_options& o) {
  const sys s = make_sys(n, o);
  law_report r = new_report(name, n);
  sink out{r, o.violation_cap};
  stopwatch clock;

  const unsigned __int128 E = s.elems, C = s.contracts;
  require_budget(o, C * C + C * C * C + E * E * C * C, name);

  std::vector<packed> cs;
  cs.reserve(s.contracts);
  for (std::uint64_t i = 0; i < s.contracts; ++i) cs.push_back(contract_at(s, i));

  // commutativity of tau
  for (const packed& m : cs)
    for (const packed& m2 : cs) {
      ++r.instances;
      const packed lhs = v.tau(s, m, m2), rhs = v.tau(s, m2, m);
      if (lhs != rhs)
        out.add({"law=commutativity", "m=" + render_contract(s, m),
                 "m'=" + render_contract(s, m2)},
                render_contract(s, lhs), render_contract(s, rhs));
    }

  // additivity in the first slot; the second follows by commutativity
  for (const packed& m : cs)
    for (const packed& m2 : cs)
      for (const packed& m3 : cs) {
        ++r.instances;
        const packed lhs = v.tau(s, v.plus(m, m2), m3);
        const packed rhs = v.plus(v.tau(s, m, m3), v.tau(s, m2, m3));
        if (lhs != rhs)
          out.add({"law=additivity", "m=" + render_contract(s, m),
                   "m'=" + render_contract(s, m2), "n=" + render_contract(s, m3)},
                  render_contract(s, lhs), render_contract(s, rhs));
      }

  // action law: x.(m tau n).y = (x.m.y) tau n = m tau (x.n.y)
  for (std::uint64_t x = 0; x < s.elems; ++x)
    for (std::uint64_t y = 0; y < s.elems; ++y)
      for (const packed& m : cs)
        for (const packed& m2 : cs) {
          ++r.instances;
          const packed lhs = v.act(s, x, v.tau(s, m, m2), y);
          const packed first = v.tau(s, v.act(s, x, m, y), m2);
          const packed second = v.tau(s, m, v.act(s, x, m2, y));
          if (lhs != first || lhs != second)
            out.add({"law=action", "x=" + render_elem(s, x), "y=" + render_elem(s, y),
                     "m=" + render_contract(s, m), "n=" + render_contract(s, m2)},
                    render_contract(s, lhs),
                    render_contract(s, lhs != first ? first : second));
        }

  r.millis = clock.millis();
  return r;
}

law_report check_bimodule_iso_impl(int n, const law_options& o) {
  const sys s = make_sys(n, o);
  law_report r = new_report("bimodule-iso", n);
  sink out{r, o.violation_cap};
  stopwatch clock;

  const unsigned __int128 E = s.elems, C = s.contracts;
  require_budget(o, C + 1 + E * E * C + C * C, "bimodule-iso");

  std::vector<packed> cs;
  cs.reserve(s.contracts);
  for (std::uint64_t i = 0; i < s.contracts; ++i) cs.push_back(contract_at(s, i));

  // involution (hence bijectivity)
  for (const packed& m : cs) {
    ++r.instances;
    if (c_recip(c_recip(m)) != m)
      out.add({"law=involution", "m=" + render_contract(s, m)},
              render_contract(s, c_recip(c_recip(m))), render_contract(s, m));
  }

  // the merge/compose unit is a fixed point
  ++r.instances;
  if (c_recip(c_e(s)) != c_e(s))
    out.add({"law=unit-fixed-point"}, render_contract(s, c_recip(c_e(s))),
            render_contract(s, c_e(s)));

  // action transport: recip(x .and m .and y) = x .or recip(m) .or y
  for (std::uint64_t x = 0; x < s.elems; ++x)
    for (std::uint64_t y = 0; y < s.elems; ++y)
      for (const packed& m : cs) {
        ++r.instances;
        const packed lhs = c_recip(act_conj(s, x, m, y));
        const packed rhs = act_disj(s, x, c_recip(m), y);
        if (lhs != rhs)
          out.add({"law=action-transport", "x=" + render_elem(s, x),
                   "y=" + render_elem(s, y), "m=" + render_contract(s, m)},
                  render_contract(s, lhs), render_contract(s, rhs));
      }

  // monoid transport: recip(m & m') = recip(m) | recip(m')
  for (const packed& m : cs)
    for (const packed& m2 : cs) {
      ++r.instances;
      const packed lhs = c_recip(c_conj(m, m2));
      const packed rhs = c_disj(c_recip(m), c_recip(m2));
      if (lhs != rhs)
        out.add({"law=monoid-transport", "m=" + render_contract(s, m),
                 "m'=" + render_contract(s, m2)},
                render_contract(s, lhs), render_contract(s, rhs));
    }

  r.millis = clock.millis();
  return r;
}

law_report check_contract_count_impl(int n, const law_options& o) {
  const sys s = make_sys(n, o);
  law_report r = new_report("contract-count", n);
  sink out{r, o.violation_cap};
  stopwatch clock;

  require_budget(o, static_cast<unsigned __int128>(s.elems) * s.elems, "contract-count");

  std::uint64_t found = 0;
  for (std::uint64_t a = 0; a < s.elems; ++a)
    for (std::uint64_t g = 0; g < s.elems; ++g) {
      ++r.instances;
      if ((a | g) == s.mask) ++found;
    }

  if (found != s.contracts)
    out.add({"scan=all-element-pairs"}, std::to_string(found), std::to_string(s.contracts));

  // Cross-check the public enumerator when it is in range.
  if (s.w <= 8) {
    const auto listed = enumerate_contracts(s.alg, o.max_n).size();
    if (listed != s.contracts)
      out.add({"scan=enumerator"}, std::to_string(listed), std::to_string(s.contracts));
  }

  r.millis = clock.millis();
  return r;
}

law_report check_linear_maps_impl(int n, const law_options& o) {
  const sys s = make_sys(n, o);
  law_report r = new_report("linear-maps", n);
  sink out{r, o.violation_cap};
  stopwatch clock;

  const tensor_mode mode = resolve_mode(o.mode, n);
  const unsigned __int128 E = s.elems, C = s.contracts;
  if (mode == tensor_mode::exhaustive && n != 0)
    throw cap_exceeded("filter mode scans |C|^|C| functions and requires n = 0");
  require_budget(o, E * E * C * C + E * E * C * (C * C + E * E * C), "linear-maps");

  const map_ctx ctx = build_ctx(s, conj_view);

  map_table identity(ctx.C);
  for (std::uint32_t i = 0; i < ctx.C; ++i) identity[i] = i;

  const auto generated = generate_maps(ctx);
  bool identity_generated = false;

  if (mode == tensor_mode::exhaustive) {
    // All 27 functions, filtered by the linear-map identities.
    std::vector<map_table> linear;
    map_table t(3);
    for (std::uint32_t code = 0; code < 27; ++code) {
      ++r.instances;
      t[0] = code % 3;
      t[1] = (code / 3) % 3;
      t[2] = code / 9;
      if (is_linear(ctx, t)) linear.push_back(t);
    }
    if (std::find(linear.begin(), linear.end(), identity) == linear.end())
      out.add({"check=identity-map-linear"}, "missing", "identity map among linear maps");
    // every constructively generated map must be found by the filter
    for (const auto& gm : generated) {
      ++r.instances;
      if (std::find(linear.begin(), linear.end(), gm.table) == linear.end())
        out.add(render_triple(ctx, gm), "generated map", "not found by the filter");
      if (gm.table == identity) identity_generated = true;
    }
    if (!identity_generated)
      out.add({"check=identity-map-generated"}, "missing", "identity map among generated maps");
  } else {
    r.instances = std::uint64_t(ctx.E) * ctx.E * ctx.C;  // generated triples
    for (const auto& gm : generated) {
      if (!is_linear(ctx, gm.table))
        out.add(render_triple(ctx, gm), "generated map", "linear-map identities");
      if (gm.table == identity) identity_generated = true;
    }
    if (!identity_generated)
      out.add({"check=identity-map-generated"}, "missing", "identity map among generated maps");
  }

  r.millis = clock.millis();
  return r;
}

// Exhaustive tensor-product check at n = 0: scan all 3^9 binary operations.
void tensor_exhaustive(const sys& s, const view& v, law_report& r, sink& out,
                       std::vector<std::array<std::uint8_t, 9>>* bilinear_out) {
  const map_ctx ctx = build_ctx(s, v);

  // all linear maps, by filtering the 27 functions
  std::vector<map_table> linear;
  {
    map_table t(3);
    for (std::uint32_t code = 0; code < 27; ++code) {
      t[0] = code % 3;
      t[1] = (code / 3) % 3;
      t[2] = code / 9;
      if (is_linear(ctx, t)) linear.push_back(t);
    }
  }

  std::vector<std::array<std::uint8_t, 9>> bilinear;
  std::array<std::uint8_t, 9> f{};

  const auto at = [&](std::uint32_t m, std::uint32_t nn) { return f[m * 3 + nn]; };

  for (std::uint32_t code = 0; code < 19683; ++code) {
    ++r.instances;
    std::uint32_t rest = code;
    for (auto& cell : f) {
      cell = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
    }

    bool ok = true;
    for (std::uint32_t m = 0; ok && m < 3; ++m)
      for (std::uint32_t m2 = 0; ok && m2 < 3; ++m2)
        for (std::uint32_t nn = 0; ok && nn < 3; ++nn)
          ok = at(ctx.plus(m, m2), nn) == ctx.plus(at(m, nn), at(m2, nn)) &&
               at(m, ctx.plus(m2, nn)) == ctx.plus(at(m, m2), at(m, nn));
    for (std::uint32_t x = 0; ok && x < 2; ++x)
      for (std::uint32_t y = 0; ok && y < 2; ++y)
        for (std::uint32_t m = 0; ok && m < 3; ++m)
          for (std::uint32_t nn = 0; ok && nn < 3; ++nn) {
            const std::uint32_t lhs = ctx.act(x, at(m, nn), y);
            ok = lhs == at(ctx.act(x, m, y), nn) && lhs == at(m, ctx.act(x, nn, y));
          }
    if (!ok) continue;

    bilinear.push_back(f);
    const std::string f_str = [&] {
      std::string str = "f=";
      for (auto cell : f) str += static_cast<char>('0' + cell);
      return str;
    }();

    // fhat(C) := f(e, C) must be linear
    map_table fhat(3);
    for (std::uint32_t c = 0; c < 3; ++c) fhat[c] = at(ctx.e_idx, c);
    if (!is_linear(ctx, fhat))
      out.add({f_str, "check=fhat-linear"}, "fhat", "linear-map identities");

    // factorization: f(C, C') = fhat(C tau C')
    for (std::uint32_t m = 0; m < 3; ++m)
      for (std::uint32_t nn = 0; nn < 3; ++nn)
        if (at(m, nn) != fhat[ctx.tau(m, nn)])
          out.add({f_str, "check=factorization", "m=" + render_contract(s, ctx.cs[m]),
                   "n=" + render_contract(s, ctx.cs[nn])},
                  render_contract(s, ctx.cs[at(m, nn)]),
                  render_contract(s, ctx.cs[fhat[ctx.tau(m, nn)]]));

    // uniqueness: a linear map that agrees with fhat on every tau image is fhat
    for (const auto& h : linear) {
      bool agrees = true;
      for (std::uint32_t m = 0; agrees && m < 3; ++m)
        for (std::uint32_t nn = 0; agrees && nn < 3; ++nn)
          agrees = h[ctx.tau(m, nn)] == fhat[ctx.tau(m, nn)];
      if (agrees && h != fhat)
        out.add({f_str, "check=uniqueness"}, "a second linear factorization", "fhat");
    }
  }

  if (bilinear.size() != linear.size())
    out.add({"check=bilinear-count-equals-linear-count"}, std::to_string(bilinear.size()),
            std::to_string(linear.size()));

  // every constructively generated map induces a bilinear operation the
  // exhaustive filter must have found
  for (const auto& gm : generate_maps(ctx)) {
    std::array<std::uint8_t, 9> induced{};
    for (std::uint32_t m = 0; m < 3; ++m)
      for (std::uint32_t nn = 0; nn < 3; ++nn)
        induced[m * 3 + nn] = static_cast<std::uint8_t>(gm.table[ctx.tau(m, nn)]);
    if (std::find(bilinear.begin(), bilinear.end(), induced) == bilinear.end())
      out.add(render_triple(ctx, gm), "induced bilinear map", "not found by the filter");
  }

  if (bilinear_out) *bilinear_out = std::move(bilinear);
}

// Constructive tensor-product check: sweep the generated linear maps and
// verify f := fhat o tau is bilinear and recovers fhat.
void tensor_constructive(const sys& s, const view& v, const law_options& o, law_report& r,
                         sink& out) {
  // Generation and table building alone cost E^2 * C^2; refuse before
  // materializing anything.
  const unsigned __int128 Eb = s.elems, Cb = s.contracts;
  require_budget(o, Eb * Eb * Cb * Cb, r.law.c_str());

  const map_ctx ctx = build_ctx(s, v);
  r.instances = std::uint64_t(ctx.E) * ctx.E * ctx.C;

  const auto generated = generate_maps(ctx);
  const unsigned __int128 per_map =
      static_cast<unsigned __int128>(ctx.C) * ctx.C * ctx.C * 2 +
      static_cast<unsigned __int128>(ctx.E) * ctx.E * ctx.C * ctx.C +
      static_cast<unsigned __int128>(ctx.C) * ctx.C + std::uint64_t(ctx.E) * ctx.E * ctx.C;
  require_budget(o, per_map * generated.size(), r.law.c_str());

  std::vector<std::uint32_t> F(std::size_t{ctx.C} * ctx.C);
  for (const auto& gm : generated) {
    const auto inputs = render_triple(ctx, gm);
    if (!is_linear(ctx, gm.table)) {
      out.add(inputs, "generated map", "linear-map identities");
      continue;
    }

    for (std::uint32_t m = 0; m < ctx.C; ++m)
      for (std::uint32_t nn = 0; nn < ctx.C; ++nn)
        F[m * ctx.C + nn] = gm.table[ctx.tau(m, nn)];

    // bilinearity of f = fhat o tau, both slots
    for (std::uint32_t m = 0; m < ctx.C; ++m)
      for (std::uint32_t m2 = 0; m2 < ctx.C; ++m2)
        for (std::uint32_t nn = 0; nn < ctx.C; ++nn) {
          if (F[ctx.plus(m, m2) * ctx.C + nn] !=
              ctx.plus(F[m * ctx.C + nn], F[m2 * ctx.C + nn])) {
            auto in = inputs;
            in.push_back("check=additivity-slot1");
            out.add(std::move(in), "f(m + m', n)", "f(m, n) + f(m', n)");
          }
          if (F[m * ctx.C + ctx.plus(m2, nn)] !=
              ctx.plus(F[m * ctx.C + m2], F[m * ctx.C + nn])) {
            auto in = inputs;
            in.push_back("check=additivity-slot2");
            out.add(std::move(in), "f(m, n + n')", "f(m, n) + f(m, n')");
          }
        }
    for (std::uint32_t x = 0; x < ctx.E; ++x)
      for (std::uint32_t y = 0; y < ctx.E; ++y)
        for (std::uint32_t m = 0; m < ctx.C; ++m)
          for (std::uint32_t nn = 0; nn < ctx.C; ++nn) {
            const std::uint32_t lhs = ctx.act(x, F[m * ctx.C + nn], y);
            if (lhs != F[ctx.act(x, m, y) * ctx.C + nn] ||
                lhs != F[m * ctx.C + ctx.act(x, nn, y)]) {
              auto in = inputs;
              in.push_back("check=action-interchange");
              out.add(std::move(in), "x.f(m, n).y", "f(x.m.y, n) / f(m, x.n.y)");
            }
          }

    // recovery: fhat(C) = f(e, C)
    for (std::uint32_t c = 0; c < ctx.C; ++c)
      if (F[ctx.e_idx * ctx.C + c] != gm.table[c]) {
        auto in = inputs;
        in.push_back("check=recovery");
        out.add(std::move(in), render_contract(s, ctx.cs[F[ctx.e_idx * ctx.C + c]]),
                render_contract(s, ctx.cs[gm.table[c]]));
      }
  }
}

law_report check_tensor_impl(const char* name, const view& v, int n, const law_options& o) {
  const sys s = make_sys(n, o);
  law_report r = new_report(name, n);
  sink out{r, o.violation_cap};
  stopwatch clock;

  const tensor_mode mode = resolve_mode(o.mode, n);
  if (mode == tensor_mode::exhaustive && n != 0)
    throw error("exhaustive mode requires n = 0");

  const bool compose_side = !v.conjunctive;
  if (mode == tensor_mode::exhaustive) {
    std::vector<std::array<std::uint8_t, 9>> bilinear;
    tensor_exhaustive(s, v, r, out, &bilinear);

    if (compose_side) {
      // duality transport: every merging factorization yields a composition
      // factorization along reciprocal
      const map_ctx cctx = build_ctx(s, conj_view);
      const map_ctx dctx = build_ctx(s, disj_view);
      law_report scratch = new_report("scratch", n);
      sink drop{scratch, 0};
      std::vector<std::array<std::uint8_t, 9>> conj_bilinear;
      tensor_exhaustive(s, conj_view, scratch, drop, &conj_bilinear);
      for (const auto& f : conj_bilinear) {
        std::array<std::uint8_t, 9> transported{};
        for (std::uint32_t m = 0; m < 3; ++m)
          for (std::uint32_t nn = 0; nn < 3; ++nn)
            transported[m * 3 + nn] = static_cast<std::uint8_t>(
                cctx.recip_idx[f[cctx.recip_idx[m] * 3 + cctx.recip_idx[nn]]]);
        if (std::find(bilinear.begin(), bilinear.end(), transported) == bilinear.end())
          out.add({"check=duality-transport"}, "transported merge factorization",
                  "not bilinear for composition");
        map_table fhat(3);
        for (std::uint32_t c = 0; c < 3; ++c) fhat[c] = transported[dctx.e_idx * 3 + c];
        for (std::uint32_t m = 0; m < 3; ++m)
          for (std::uint32_t nn = 0; nn < 3; ++nn)
            if (transported[m * 3 + nn] != fhat[dctx.tau(m, nn)])
              out.add({"check=duality-transport-factorization"},
                      render_contract(s, dctx.cs[transported[m * 3 + nn]]),
                      render_contract(s, dctx.cs[fhat[dctx.tau(m, nn)]]));
      }
    }
  } else {
    tensor_constructive(s, v, o, r, out);

    if (compose_side) {
      const map_ctx cctx = build_ctx(s, conj_view);
      const map_ctx dctx = build_ctx(s, disj_view);
      const std::uint32_t C = cctx.C;
      std::vector<std::uint32_t> transported(std::size_t{C} * C);
      map_table fhat(C);
      for (const auto& gm : generate_maps(cctx)) {
        for (std::uint32_t m = 0; m < C; ++m)
          for (std::uint32_t nn = 0; nn < C; ++nn)
            transported[m * C + nn] =
                cctx.recip_idx[gm.table[cctx.tau(cctx.recip_idx[m], cctx.recip_idx[nn])]];
        for (std::uint32_t c = 0; c < C; ++c) fhat[c] = transported[dctx.e_idx * C + c];
        bool factors = true;
        for (std::uint32_t m = 0; factors && m < C; ++m)
          for (std::uint32_t nn = 0; factors && nn < C; ++nn)
            factors = transported[m * C + nn] == fhat[dctx.tau(m, nn)];
        if (!factors || !is_linear(dctx, fhat)) {
          auto in = render_triple(cctx, gm);
          in.push_back("check=duality-transport");
          out.add(std::move(in), "transported merge factorization",
                  "composition factorization");
        }
      }
    }
  }

  r.millis = clock.millis();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

law_report check_bimodule_axioms(int n, const law_options& o) {
  return check_bimodule_axioms_impl(n, o);
}

law_report check_bilinear_merge(int n, const law_options& o) {
  return check_bilinear_impl("bilinear-merge", conj_view, n, o);
}

law_report check_bilinear_compose(int n, const law_options& o) {
  return check_bilinear_impl("bilinear-compose", disj_view, n, o);
}

law_report check_linear_maps(int n, const law_options& o) {
  return check_linear_maps_impl(n, o);
}

law_report check_tensor_up_merge(int n, const law_options& o) {
  return check_tensor_impl("tensor-merge", conj_view, n, o);
}

law_report check_tensor_up_compose(int n, const law_options& o) {
  return check_tensor_impl("tensor-compose", disj_view, n, o);
}

law_report check_bimodule_iso(int n, const law_options& o) {
  return check_bimodule_iso_impl(n, o);
}

law_report check_contract_count(int n, const law_options& o) {
  return check_contract_count_impl(n, o);
}

std::vector<linear_map> enumerate_linear_maps(int n, const law_options& o) {
  const sys s = make_sys(n, o);
  const tensor_mode mode = resolve_mode(o.mode, n);
  if (mode == tensor_mode::exhaustive && n != 0)
    throw cap_exceeded("filter mode scans |C|^|C| functions and requires n = 0");
  const unsigned __int128 E = s.elems, C = s.contracts;
  require_budget(o, E * E * C * C + E * E * C * (C * C + E * E * C), "linear-maps");

  const map_ctx ctx = build_ctx(s, conj_view);
  std::vector<linear_map> out;
  if (mode == tensor_mode::exhaustive) {
    map_table t(3);
    for (std::uint32_t code = 0; code < 27; ++code) {
      t[0] = code % 3;
      t[1] = (code / 3) % 3;
      t[2] = code / 9;
      if (is_linear(ctx, t)) out.push_back({t});
    }
  } else {
    for (const auto& gm : generate_maps(ctx))
      if (is_linear(ctx, gm.table)) out.push_back({gm.table});
  }
  return out;
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {
      "bimodule-axioms", "bilinear-merge", "bilinear-compose", "linear-maps",
      "tensor-merge",    "tensor-compose", "bimodule-iso",     "contract-count"};
  return names;
}

law_report run_law(std::string_view name, int n, const law_options& o) {
  if (name == "bimodule-axioms") return check_bimodule_axioms(n, o);
  if (name == "bilinear-merge") return check_bilinear_merge(n, o);
  if (name == "bilinear-compose") return check_bilinear_compose(n, o);
  if (name == "linear-maps") return check_linear_maps(n, o);
  if (name == "tensor-merge") return check_tensor_up_merge(n, o);
  if (name == "tensor-compose") return check_tensor_up_compose(n, o);
  if (name == "bimodule-iso") return check_bimodule_iso(n, o);
  if (name == "contract-count") return check_contract_count(n, o);
  throw error("unknown law: " + std::string(name));
}

std::vector<law_report> run_all_laws(int n, const law_options& o) {
  std::vector<law_report> out;
  out.reserve(law_names().size());
  for (const auto& name : law_names()) out.push_back(run_law(name, n, o));
  return out;
}

namespace {

nlohmann::json report_to_json(const law_report& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    nlohmann::json item;
    item["inputs"] = v.inputs;
    item["lhs"] = v.lhs;
    item["rhs"] = v.rhs;
    violations.push_back(std::move(item));
  }
  nlohmann::json out;
  out["law"] = r.law;
  out["n"] = r.n;
  out["instances"] = r.instances;
  out["violations"] = std::move(violations);
  out["millis"] = r.millis;
  return out;
}

}  // namespace

std::string to_json(const law_report& report) { return report_to_json(report).dump(2); }

std::string to_json(const std::vector<law_report>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out.dump(2);
}

}  // namespace agc
