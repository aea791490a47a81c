#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "agc/contract.hpp"
#include "agc/formula.hpp"

namespace agc {

/// JSON contract file:
///   {"variables": ["p", ...], "assumptions": "<formula>",
///    "guarantees": "<formula>", "source": {...}}
/// "source" is optional free-form metadata; the library carries it as raw
/// JSON text. Validation requires the variables to be distinct and non-empty,
/// both formulas to parse, and every formula variable to be declared.
struct contract_file {
  std::vector<std::string> variables;
  std::string assumptions;
  std::string guarantees;
  std::string source_json;  // raw JSON of the "source" field; empty if absent
};

contract_file parse_contract_file(std::string_view json_text);
contract_file read_contract_file(const std::filesystem::path& path);
std::string to_json(const contract_file& file);
void write_contract_file(const std::filesystem::path& path, const contract_file& file);

/// Evaluate the file's formulas over an explicit algebra (typically a union
/// variable universe covering the declared variables) and saturate.
contract instantiate(const contract_file& file, const algebra_ptr& algebra);

/// Render a contract over its own algebra with DNF-canonical formulas.
contract_file render(const contract& c, std::string source_json = {});

}  // namespace agc
