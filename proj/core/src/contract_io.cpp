#include "agc/contract_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "agc/errors.hpp"

namespace agc {

namespace {

using nlohmann::json;

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw error(std::string("contract file needs a string field \"") + key + "\"");
  return j[key].get<std::string>();
}

void validate_formula(const contract_file& file, const std::string& text, const char* role) {
  formula f = parse_formula(text);  // throws parse_error with a position
  for (const auto& v : f.variables())
    if (std::find(file.variables.begin(), file.variables.end(), v) == file.variables.end())
      throw error(std::string(role) + " formula uses undeclared variable: " + v);
}

}  // namespace

contract_file parse_contract_file(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw error(std::string("invalid contract file JSON: ") + e.what());
  }
  if (!j.is_object()) throw error("contract file must be a JSON object");

  contract_file file;
  if (!j.contains("variables") || !j["variables"].is_array())
    throw error("contract file needs a \"variables\" array");
  std::unordered_set<std::string> seen;
  for (const auto& v : j["variables"]) {
    if (!v.is_string() || v.get<std::string>().empty())
      throw error("variables must be non-empty strings");
    auto name = v.get<std::string>();
    if (!seen.insert(name).second) throw error("duplicate variable: " + name);
    file.variables.push_back(std::move(name));
  }
  file.assumptions = require_string(j, "assumptions");
  file.guarantees = require_string(j, "guarantees");
  if (j.contains("source")) file.source_json = j["source"].dump();

  validate_formula(file, file.assumptions, "assumptions");
  validate_formula(file, file.guarantees, "guarantees");
  return file;
}

contract_file read_contract_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open contract file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_contract_file(buffer.str());
}

std::string to_json(const contract_file& file) {
  json j;
  j["variables"] = file.variables;
  j["assumptions"] = file.assumptions;
  j["guarantees"] = file.guarantees;
  if (!file.source_json.empty()) j["source"] = json::parse(file.source_json);
  return j.dump(2) + "\n";
}

void write_contract_file(const std::filesystem::path& path, const contract_file& file) {
  std::ofstream out(path);
  if (!out) throw error("cannot write contract file: " + path.string());
  out << to_json(file);
  if (!out) throw error("failed writing contract file: " + path.string());
}

contract instantiate(const contract_file& file, const algebra_ptr& algebra) {
  element a = evaluate(parse_formula(file.assumptions), algebra);
  element g = evaluate(parse_formula(file.guarantees), algebra);
  return contract::saturate(std::move(a), std::move(g));
}

contract_file render(const contract& c, std::string source_json) {
  contract_file file;
  file.variables = c.algebra()->generators();
  file.assumptions = to_dnf(c.assumptions());
  file.guarantees = to_dnf(c.guarantees());
  file.source_json = std::move(source_json);
  return file;
}

}  // namespace agc
