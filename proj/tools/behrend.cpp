#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "behrend/commands.hpp"
#include "behrend/errors.hpp"
#include "behrend/expr.hpp"

int main(int argc, char** argv) {
  using namespace behrend;

  CLI::App app{"Invariants of fat points in the plane: length, normalization, Behrend number"};
  app.set_version_flag("--version", "behrend 0.1.0");

  std::string command;
  std::string expr;
  std::string format;
  std::string svg_path;
  RunOptions options;
  unsigned p_max = 0;

  std::vector<std::string> commands = command_names();
  commands.push_back("is-normal");
  app.add_option("command", command, "length | nu | normalize | normal? | factor | fan | dynkin | ferrers | verify")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("expr", expr, "ideal expression, e.g. \"(x y, x^4, y^3)\" or \"m^3\"");
  app.add_option("--format", format, "text or json (default: $BEHREND_FORMAT or text)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--svg", svg_path, "also write an SVG picture (fan, dynkin, ferrers)");
  app.add_option("--seed", options.seed, "random seed for verify")->capture_default_str();
  app.add_option("--bounds", options.bounds, "verify preset: quick, default or full")
      ->capture_default_str();
  app.add_option("--p-max", p_max, "largest power tried by the definitional closure oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (format.empty()) {
    const char* env = std::getenv("BEHREND_FORMAT");
    format = env ? env : "text";
  }
  if (format != "text" && format != "json") {
    std::cerr << "error: BEHREND_FORMAT must be text or json\n";
    return 1;
  }
  options.format = format == "json" ? Format::Json : Format::Text;
  options.svg = !svg_path.empty();
  if (p_max > 0) options.p_max = p_max;
  if (command != "verify" && expr.empty()) {
    std::cerr << "error: " << command << " needs an ideal expression\n";
    return 1;
  }

  try {
    RunResult r = run(command, expr, options);
    std::cout << r.output;
    if (r.svg) {
      std::ofstream out(svg_path);
      if (!out) {
        std::cerr << "error: cannot write " << svg_path << "\n";
        return 4;
      }
      out << *r.svg;
    }
    return r.failed_checks ? 5 : 0;
  } catch (const ParseError& e) {
    std::cerr << caret_diagnostic(expr, e) << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
