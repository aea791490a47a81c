// agc — operations, refinement checks, and algebraic-law verification for
// assume-guarantee contracts over finite Boolean algebras.

#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agc/adjoints.hpp"
#include "agc/contract.hpp"
#include "agc/contract_io.hpp"
#include "agc/errors.hpp"
#include "agc/formula.hpp"
#include "agc/laws.hpp"

namespace {

using nlohmann::json;

enum class op_arity { two_files, one_file, elem_then_file, file_then_elem };

struct op_info {
  const char* name;
  op_arity arity;
};

constexpr op_info k_ops[] = {
    {"conj", op_arity::two_files},
    {"disj", op_arity::two_files},
    {"compose", op_arity::two_files},
    {"merge", op_arity::two_files},
    {"quotient", op_arity::two_files},
    {"separation", op_arity::two_files},
    {"implication", op_arity::two_files},
    {"coimplication", op_arity::two_files},
    {"reciprocal", op_arity::one_file},
    {"saturate", op_arity::one_file},
    {"act-left", op_arity::elem_then_file},
    {"act-right", op_arity::file_then_elem},
    {"act-left-disj", op_arity::elem_then_file},
    {"act-right-disj", op_arity::file_then_elem},
};

const op_info* find_op(const std::string& name) {
  for (const auto& op : k_ops)
    if (name == op.name) return &op;
  return nullptr;
}

/// Sorted, deduplicated union of the operands' variable universes.
agc::algebra_ptr union_algebra(const std::vector<agc::contract_file>& files,
                               const std::optional<agc::formula>& action_formula) {
  std::set<std::string> universe;
  for (const auto& file : files) universe.insert(file.variables.begin(), file.variables.end());
  if (action_formula) {
    const auto vars = action_formula->variables();
    universe.insert(vars.begin(), vars.end());
  }
  return agc::bool_algebra::make({universe.begin(), universe.end()});
}

std::string op_source(const std::string& op, const std::vector<agc::contract_file>& files,
                      const std::optional<std::string>& action_text) {
  json source;
  source["op"] = op;
  json a = json::array(), g = json::array();
  for (const auto& file : files) {
    a.push_back(file.assumptions);
    g.push_back(file.guarantees);
  }
  source["assumptions"] = std::move(a);
  source["guarantees"] = std::move(g);
  if (action_text) source["element"] = *action_text;
  return source.dump();
}

std::string valuation_witness(const agc::algebra_ptr& algebra, std::size_t valuation) {
  std::string out = "{";
  const int n = algebra->generator_count();
  for (int k = 0; k < n; ++k) {
    if (k > 0) out += ", ";
    out += algebra->generators()[k];
    out += '=';
    out += ((valuation >> (n - 1 - k)) & 1) ? '1' : '0';
  }
  return out + "}";
}

/// First valuation where x holds but y does not.
std::optional<std::size_t> leq_failure(const agc::element& x, const agc::element& y) {
  for (std::size_t i = 0; i < x.width(); ++i)
    if (x.bit(i) && !y.bit(i)) return i;
  return std::nullopt;
}

int run_op(const std::string& op_name, const std::vector<std::string>& inputs,
           const std::string& output_path, int cap) {
  const op_info* op = find_op(op_name);
  if (!op) {
    std::cerr << "error: unknown operation: " << op_name << "\n";
    return 2;
  }

  std::vector<agc::contract_file> files;
  std::optional<std::string> action_text;
  std::optional<agc::formula> action_formula;

  switch (op->arity) {
    case op_arity::two_files:
      if (inputs.size() != 2) {
        std::cerr << "error: " << op_name << " takes two contract files\n";
        return 2;
      }
      files.push_back(agc::read_contract_file(inputs[0]));
      files.push_back(agc::read_contract_file(inputs[1]));
      break;
    case op_arity::one_file:
      if (inputs.size() != 1) {
        std::cerr << "error: " << op_name << " takes one contract file\n";
        return 2;
      }
      files.push_back(agc::read_contract_file(inputs[0]));
      break;
    case op_arity::elem_then_file:
      if (inputs.size() != 2) {
        std::cerr << "error: " << op_name << " takes a formula and a contract file\n";
        return 2;
      }
      action_text = inputs[0];
      action_formula = agc::parse_formula(inputs[0]);
      files.push_back(agc::read_contract_file(inputs[1]));
      break;
    case op_arity::file_then_elem:
      if (inputs.size() != 2) {
        std::cerr << "error: " << op_name << " takes a contract file and a formula\n";
        return 2;
      }
      files.push_back(agc::read_contract_file(inputs[0]));
      action_text = inputs[1];
      action_formula = agc::parse_formula(inputs[1]);
      break;
  }

  const agc::algebra_ptr algebra = union_algebra(files, action_formula);
  std::vector<agc::contract> operands;
  operands.reserve(files.size());
  for (const auto& file : files) operands.push_back(agc::instantiate(file, algebra));

  std::optional<agc::contract> result;
  if (op_name == "conj") result = agc::conj(operands[0], operands[1]);
  else if (op_name == "disj") result = agc::disj(operands[0], operands[1]);
  else if (op_name == "compose") result = agc::compose(operands[0], operands[1]);
  else if (op_name == "merge") result = agc::merge(operands[0], operands[1]);
  else if (op_name == "quotient") result = agc::quotient(operands[0], operands[1], cap);
  else if (op_name == "separation") result = agc::separation(operands[0], operands[1], cap);
  else if (op_name == "implication") result = agc::implication(operands[0], operands[1], cap);
  else if (op_name == "coimplication")
    result = agc::coimplication(operands[0], operands[1], cap);
  else if (op_name == "reciprocal") result = agc::reciprocal(operands[0]);
  else if (op_name == "saturate") result = operands[0];  // instantiate saturates
  else {
    const agc::element x = agc::evaluate(*action_formula, algebra);
    if (op_name == "act-left") result = agc::act_left(x, operands[0]);
    else if (op_name == "act-right") result = agc::act_right(operands[0], x);
    else if (op_name == "act-left-disj") result = agc::act_left_disj(x, operands[0]);
    else result = agc::act_right_disj(operands[0], x);
  }

  const agc::contract_file rendered =
      agc::render(*result, op_source(op_name, files, action_text));
  if (output_path.empty())
    std::cout << agc::to_json(rendered);
  else
    agc::write_contract_file(output_path, rendered);
  return 0;
}

int run_check(const std::string& relation, const std::string& lhs_path,
              const std::string& rhs_path) {
  const agc::contract_file lhs_file = agc::read_contract_file(lhs_path);
  const agc::contract_file rhs_file = agc::read_contract_file(rhs_path);
  const agc::algebra_ptr algebra = union_algebra({lhs_file, rhs_file}, std::nullopt);
  const agc::contract lhs = agc::instantiate(lhs_file, algebra);
  const agc::contract rhs = agc::instantiate(rhs_file, algebra);

  // refines(lhs, rhs) needs rhs.a <= lhs.a and lhs.g <= rhs.g; report the
  // first valuation breaking either containment.
  const auto assumption_gap = leq_failure(rhs.assumptions(), lhs.assumptions());
  const auto guarantee_gap = leq_failure(lhs.guarantees(), rhs.guarantees());

  if (relation == "refines") {
    if (!assumption_gap && !guarantee_gap) {
      std::cout << "ok\n";
      return 0;
    }
    if (guarantee_gap)
      std::cout << "not refined: guarantees not contained at "
                << valuation_witness(algebra, *guarantee_gap) << "\n";
    else
      std::cout << "not refined: assumptions not relaxed at "
                << valuation_witness(algebra, *assumption_gap) << "\n";
    return 1;
  }

  // equiv
  if (lhs == rhs) {
    std::cout << "ok\n";
    return 0;
  }
  for (std::size_t i = 0; i < lhs.assumptions().width(); ++i) {
    if (lhs.assumptions().bit(i) != rhs.assumptions().bit(i)) {
      std::cout << "not equivalent: assumptions differ at " << valuation_witness(algebra, i)
                << "\n";
      return 1;
    }
    if (lhs.guarantees().bit(i) != rhs.guarantees().bit(i)) {
      std::cout << "not equivalent: guarantees differ at " << valuation_witness(algebra, i)
                << "\n";
      return 1;
    }
  }
  std::cout << "not equivalent\n";  // unreachable for well-formed contracts
  return 1;
}

int run_laws(int n, std::vector<std::string> selected, bool all, const std::string& mode,
             const std::string& format, int cap) {
  agc::law_options options;
  options.max_n = cap;
  if (mode == "exhaustive") options.mode = agc::tensor_mode::exhaustive;
  else if (mode == "constructive") options.mode = agc::tensor_mode::constructive;

  if (n > cap) throw agc::cap_exceeded{};

  if (all || (selected.size() == 1 && selected[0] == "all")) selected = agc::law_names();
  if (selected.empty()) {
    std::cerr << "error: pass --all or at least one --law\n";
    return 2;
  }

  std::vector<agc::law_report> reports;
  reports.reserve(selected.size());
  for (const auto& name : selected) reports.push_back(agc::run_law(name, n, options));

  if (format == "json") {
    std::cout << agc::to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << r.law << "  n=" << r.n
                << "  instances=" << r.instances << "  millis=" << r.millis
                << "  violations=" << r.violations.size() << "\n";
      for (const auto& v : r.violations) {
        std::cout << "      ";
        for (const auto& input : v.inputs) std::cout << input << "  ";
        std::cout << "lhs=" << v.lhs << "  rhs=" << v.rhs << "\n";
      }
    }
  }

  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const agc::law_report& r) { return r.ok(); });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assume-guarantee contract algebra over finite Boolean algebras"};
  app.require_subcommand(1);

  // op
  auto* op_cmd = app.add_subcommand("op", "Apply a contract operation and write the result");
  std::string op_name;
  std::vector<std::string> op_inputs;
  std::string op_output;
  int op_cap = 3;
  op_cmd->add_option("operation", op_name,
                     "conj|disj|compose|merge|quotient|separation|implication|"
                     "coimplication|reciprocal|saturate|act-left|act-right|"
                     "act-left-disj|act-right-disj")
      ->required();
  op_cmd->add_option("inputs", op_inputs, "contract files (actions take a formula operand)")
      ->expected(1, 2);
  op_cmd->add_option("-o,--output", op_output, "output path (default: stdout)");
  op_cmd->add_option("--cap", op_cap, "enumeration cap for adjoint operations")
      ->capture_default_str();

  // check
  auto* check_cmd = app.add_subcommand("check", "Check a relation between two contracts");
  std::string relation, check_lhs, check_rhs;
  check_cmd->add_option("relation", relation, "refines|equiv")
      ->required()
      ->check(CLI::IsMember({"refines", "equiv"}));
  check_cmd->add_option("lhs", check_lhs, "left contract file")->required();
  check_cmd->add_option("rhs", check_rhs, "right contract file")->required();

  // laws
  auto* laws_cmd = app.add_subcommand("laws", "Run the algebraic-law verification harness");
  int laws_n = 0;
  std::vector<std::string> laws_selected;
  bool laws_all = false;
  std::string laws_mode = "auto", laws_format = "text";
  int laws_cap = 3;
  laws_cmd->add_option("--n", laws_n, "generator count of the free algebra")->required();
  laws_cmd->add_option("--law", laws_selected, "law name (repeatable); see --list");
  laws_cmd->add_flag("--all", laws_all, "run every registered law");
  laws_cmd->add_option("--mode", laws_mode, "auto|exhaustive|constructive")
      ->check(CLI::IsMember({"auto", "exhaustive", "constructive"}))
      ->capture_default_str();
  laws_cmd->add_option("--format", laws_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  laws_cmd->add_option("--cap", laws_cap, "enumeration cap")->capture_default_str();
  bool laws_list = false;
  laws_cmd->add_flag("--list", laws_list, "print the registered law names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (op_cmd->parsed()) return run_op(op_name, op_inputs, op_output, op_cap);
    if (check_cmd->parsed()) return run_check(relation, check_lhs, check_rhs);
    if (laws_cmd->parsed()) {
      if (laws_list) {
        for (const auto& name : agc::law_names()) std::cout << name << "\n";
        return 0;
      }
      return run_laws(laws_n, laws_selected, laws_all, laws_mode, laws_format, laws_cap);
    }
  } catch (const agc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
