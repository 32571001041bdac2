#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "behrend/ideal.hpp"
#include "behrend/normal_factor.hpp"
#include "behrend/towers.hpp"

namespace behrend {

enum class Format { Text, Json };

inline constexpr const char* kSchemaVersion = "behrend-output/1";

struct RunOptions {
  Format format = Format::Text;
  bool svg = false;  // also render an SVG picture when the command has one
  std::uint64_t seed = 1;
  std::string bounds = "default";
  std::optional<unsigned> p_max;
};

struct RunResult {
  std::string output;
  std::optional<std::string> svg;
  bool failed_checks = false;  // verify found a failure
};

const std::vector<std::string>& command_names();

// Dispatches one command. Throws ParseError, DomainError or UnsupportedError.
// `expr` is ignored by verify.
RunResult run(const std::string& command, const std::string& expr, const RunOptions& options);

// 0 ok, 1 parse, 2 domain, 3 unsupported, 4 anything else
int exit_code_for(const std::exception& e);

std::string to_dot(const DynkinDiagram& D);
std::string ferrers_grid(const FerrersDiagram& F);
std::string ferrers_svg(const FerrersDiagram& F);
std::string fan_svg(const Fan& F);
std::string dynkin_svg(const DynkinDiagram& D);

}  // namespace behrend
