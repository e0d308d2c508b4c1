// chernloci-cli COMMAND [--input FILE] [--output FILE] [--suite NAME]
//               [--bounds JSON] [--pretty]
// Reads one JSON request (stdin by default), writes one JSON response.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chernloci/cli.hpp"

namespace {

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
  using chernloci::cli::json;
  CLI::App app{"Degeneracy-locus formulas: triples, classes, specializations, verification"};
  std::string command;
  std::string input_path;
  std::string output_path;
  std::string suite;
  std::string bounds_text;
  bool pretty = false;
  app.add_option("command", command, "triple | formula | perm | specialize | verify")
      ->required()
      ->check(CLI::IsMember({"triple", "formula", "perm", "specialize", "verify"}));
  app.add_option("--input", input_path, "request JSON file (default stdin)");
  app.add_option("--output", output_path, "response file (default stdout)");
  app.add_option("--suite", suite, "verify suite: appendixA | oracles | all");
  app.add_option("--bounds", bounds_text, "verify bounds as a JSON object");
  app.add_flag("--pretty", pretty, "indent the JSON output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  chernloci::cli::Response response;
  try {
    std::string text;
    if (!input_path.empty()) {
      std::ifstream f(input_path);
      if (!f) throw chernloci::Error(chernloci::ErrorKind::Validation, "input", "cannot read " + input_path);
      text = slurp(f);
    } else if (command != "verify") {
      text = slurp(std::cin);
    }
    const json request = text.find_first_not_of(" \t\r\n") == std::string::npos ? json::object() : json::parse(text);
    const json bounds = bounds_text.empty() ? json() : json::parse(bounds_text);
    response = chernloci::cli::run(command, request, suite, bounds);
  } catch (const chernloci::Error& e) {
    response = {chernloci::cli::error_json(e), e.kind() == chernloci::ErrorKind::Validation ? 1 : 2};
  } catch (const json::exception& e) {
    response = {chernloci::cli::error_json(chernloci::Error(chernloci::ErrorKind::Validation, "schema", e.what())), 1};
  } catch (const std::exception& e) {
    response = {chernloci::cli::error_json(chernloci::Error(chernloci::ErrorKind::Internal, "internal", e.what())), 2};
  }

  const std::string out = response.body.dump(pretty ? 2 : -1) + "\n";
  if (response.body.contains("error")) std::cerr << response.body["error"]["message"].get<std::string>() << "\n";
  if (!output_path.empty()) {
    std::ofstream f(output_path);
    if (!f) {
      std::cerr << "cannot write " << output_path << "\n";
      return 2;
    }
    f << out;
  } else {
    std::cout << out;
  }
  return response.exit_code;
}
