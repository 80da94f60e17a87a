#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "hcube/design.hpp"

namespace hcube {

/// Design file: one bitstring per line, leftmost character = x1. Blank
/// lines and lines starting with '#' are skipped. Errors name the line.
Design parse_design(std::istream& in, const std::string& source = "<input>");
Design read_design_file(const std::filesystem::path& path);
void write_design(std::ostream& out, const Design& design);

/// Values CSV: optional header "vertex,value", then "bitstring,value" rows
/// where value is an integer, decimal, or "p/q" literal. '#' lines and blank
/// lines are skipped.
Design parse_values(std::istream& in, const std::string& source = "<input>");
Design read_values_file(const std::filesystem::path& path);

}  // namespace hcube
