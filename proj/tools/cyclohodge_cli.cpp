// cyclohodge: command-line front end.
//
//   cyclohodge <command> [INPUT] [--format json|text] [--bfs-bound N]
//   cyclohodge run JOB
//
// INPUT is a file path, "-" for standard input (the default), or an inline
// JSON object. Exit status 0 on success, 2 on any error; errors are printed
// as {"error": {"code", "message"}} on standard output.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cyclohodge/errors.hpp"
#include "cyclohodge/jobs.hpp"

namespace {

using cyclohodge::Json;

constexpr int kExitError = 2;

std::string read_source(const std::string& src) {
  if (src == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  if (!src.empty() && src.front() == '{') return src;
  std::ifstream in(src);
  if (!in) throw cyclohodge::Error(cyclohodge::ErrorCode::InvalidArgument, "cannot read input '" + src + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw cyclohodge::Error(cyclohodge::ErrorCode::SchemaViolation, std::string("invalid JSON: ") + e.what());
  }
}

int emit_error(const std::string& code, const std::string& message) {
  std::cout << cyclohodge::error_json(code, message).dump(2) << "\n";
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic covers, hypergeometric monodromy and Fujita decompositions"};
  app.require_subcommand(1);

  cyclohodge::JobOptions options;
  bool no_certify = false;
  app.add_option("--format", options.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--bfs-bound", options.bfs_bound, "Element bound for the group closure search")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-certify", no_certify, "Run the closure search to the bound without infinite-order certificates");

  std::string source = "-";
  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze-cover", "Genus and eigenspace table of a cyclic cover"},
      {"classify-hg", "Schwarz and interlacing finiteness of a Gauss equation"},
      {"monodromy", "Levelt generators, invariant form and group closure"},
      {"resolve-sing", "Hirzebruch-Jung string of a cyclic quotient singularity"},
      {"reduce", "Semistable base order and Hurwitz genus of a base cover"},
      {"fujita-report", "Fujita decomposition and semi-ampleness verdict"},
      {"kodaira-check", "Signature identity for a Kodaira fibration"},
      {"run", "Run a job file {command, input, options}"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", source, "JSON file, '-' for stdin, or inline JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  options.certify_infinite = !no_certify;
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const Json input = parse_json(read_source(source));
    const auto out = command == "run" ? cyclohodge::run_job(input, options)
                                      : cyclohodge::run_command(command, input, options);
    const bool text = command == "run" ? !out.text.empty() : options.format == "text";
    if (text) {
      std::cout << out.text;
    } else {
      std::cout << out.json.dump(2) << "\n";
    }
    return 0;
  } catch (const cyclohodge::Error& e) {
    return emit_error(std::string(cyclohodge::to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    return emit_error("InternalError", e.what());
  }
}
