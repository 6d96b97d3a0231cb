#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gkit/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with deformed DG-preprojective algebras"};
  std::string input = "-";
  std::optional<std::string> run, window;
  std::optional<int> truncate, arity_max;
  std::optional<unsigned> seed;
  bool pretty = false, json = false;
  app.add_option("--input", input, "DSL file, or - for standard input");
  app.add_option("--run", run, "command: check, build, homology, jacobi, hochschild, xcomplex, koszul, cyclic, normalize, extract");
  app.add_option("--truncate", truncate, "path-length truncation N");
  app.add_option("--window", window, "degree window LO:HI");
  app.add_option("--arity-max", arity_max, "largest A-infinity arity");
  app.add_option("--seed", seed, "seed recorded in the report");
  auto* jf = app.add_flag("--json", json, "compact JSON (default)");
  app.add_flag("--pretty", pretty, "indented JSON")->excludes(jf);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gkit::kExitInputError;
  }

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input);
    if (!in) {
      nlohmann::json err{{"schema", gkit::kSchema}, {"status", "error"},
                         {"error", {{"kind", "InputError"}, {"message", "cannot read " + input}}}};
      std::cout << err.dump(pretty ? 2 : -1) << "\n";
      return gkit::kExitInputError;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (run) text += "run = " + *run + "\n";
  if (truncate) text += "truncate = " + std::to_string(*truncate) + "\n";
  if (window) text += "window = " + *window + "\n";
  if (arity_max) text += "arity_max = " + std::to_string(*arity_max) + "\n";

  const gkit::JobResult res = gkit::run_text(text, seed);
  std::cout << res.report.dump(pretty ? 2 : -1) << "\n";
  return res.exit_code;
}
