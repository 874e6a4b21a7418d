#include "hopfcyc/cli.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

int main(int argc, char** argv) {
  using namespace hopfcyc;
  CLI::App app{"Exact Hopf cyclic cohomology toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  std::string command;
  RunOptions opts;
  std::string json_out;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--file", opts.file, "Presentation file");
  app.add_option("--instance", opts.instance, "Group/set instance JSON, or swap, s3, point");
  app.add_option("--target", opts.target, "Object or built-in choice the command applies to");
  app.add_option("--coefficients", opts.coefficients, "Coefficient kind for an instance: trivial, regular, conjugation");
  app.add_option("--side", opts.side, "coalgebra or algebra (check-cocyclic, cohomology)");
  app.add_option("--degree", opts.degree, "Degree bound for structural checks")->check(CLI::NonNegativeNumber);
  app.add_option("--upto", opts.upto, "Top cohomological degree")->check(CLI::NonNegativeNumber);
  app.add_option("--json", json_out, "Write the JSON report to this path ('-' for stdout)");
  app.footer("Commands: verify-hopf, check-matched-pair, check-sayd, ch-sayd, ah-sayd, check-mpi, quotient-coideal,\n"
             "check-cocyclic, cohomology, kaygun, cup, reproduce-paper, run\n"
             "Exit codes: 0 passed, 1 a check failed, 2 usage, 3 lexical, 4 syntax, 5 semantic, 6 structural,\n"
             "7 non-termination, 8 precondition, 9 I/O.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "hopfcyc: " << e.what() << "\n";
    return exit_code(ErrorKind::Usage);
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult r = run_command(command, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string text = r.report.dump(2) + "\n";
    if (json_out == "-") {
      std::cout << text;
    } else {
      std::cout << summary_text(r.report);
      if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) throw Error(ErrorKind::IO, "cannot write " + json_out);
        out << text;
      }
    }
    std::cerr << "elapsed " << secs << " s\n";
    return r.passed ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "hopfcyc: " << error_kind_name(e.kind()) << " error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "hopfcyc: internal error: " << e.what() << "\n";
    return exit_code(ErrorKind::Structural);
  }
}
