#include <doctest.h>

#include "gkit/dsl.hpp"
#include "gkit/job.hpp"
#include "helpers.hpp"

using namespace gkit;
using namespace testing_support;

namespace {

const char* kX3 = "vertices: 1\narrows: x 1 1 0\nd = 3\nw = x*x*x\ntruncate = 8\nrun = build\n";

SpecError spec_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e;
  }
  FAIL("parsed without error: " << text);
  return SpecError(ErrorKind::SyntaxError, 0, 0, "");
}

}  // namespace

TEST_CASE("parses the x^3 job") {
  JobSpec s = parse_spec(kX3);
  CHECK(s.d == 3);
  CHECK(s.truncation == 8);
  CHECK(s.command == Command::Build);
  CHECK(s.quiver->num_arrows() == 1);
  CHECK(s.potential == potential(*loops({{"x", 0}}), 3, 8, {{"x*x*x", 1}}));
}

TEST_CASE("rational coefficients are exact") {
  JobSpec s = parse_spec("vertices: 1\narrows: x 1 1 0, y 1 1 0\nd = 3\nw = 1/3 x*x*x - x*y*x*y\n");
  CyclicElement expect = potential(*loops({{"x", 0}, {"y", 0}}), 3, 8, {{"x*x*x", Rational(1, 3)}, {"x*y*x*y", -1}});
  CHECK(s.potential == expect);
}

TEST_CASE("comments, blank lines and repeated arrow lines") {
  JobSpec s = parse_spec("# a comment\nvertices: 1 2\n\narrows: a 1 2 0   # trailing\narrows: b 2 1 0\nd = 3\nw = a*b*a*b\nrun = jacobi\n");
  CHECK(s.quiver->num_vertices() == 2);
  CHECK(s.quiver->num_arrows() == 2);
  CHECK(s.command == Command::Jacobi);
}

TEST_CASE("print then parse is the identity") {
  for (const std::string& text :
       {std::string(kX3), std::string("vertices: 1\narrows: x 1 1 0, y 1 1 0\nd = 3\nw = 1/3 x*x*x - x*y*x*y\nwindow = -4:0\nrun = homology\n"),
        std::string("vertices: 1 2\narrows: a 1 2 0\nd = 2\nw = 0\ntruncate = 5\nrun = hochschild\narity_max = 5\n"),
        std::string("vertices: 1\narrows: x 1 1 0\nd = 3\nw = 0\nd z = x*x' - x'*x + x*x*x' - x*x'*x\nrun = normalize\n")}) {
    CAPTURE(text);
    JobSpec s = parse_spec(text);
    const std::string printed = print_spec(s);
    CHECK(parse_spec(printed) == s);
    CHECK(print_spec(parse_spec(printed)) == printed);
  }
}

TEST_CASE("errors carry line and column") {
  SpecError open = spec_error("vertices: 1 2\narrows: x 1 1 0, a 1 2 0\nd = 3\nw = x*a\n");
  CHECK(open.kind() == ErrorKind::NonCyclicTerm);
  CHECK(open.line() == 4);
  CHECK(open.column() == 5);

  SpecError unknown = spec_error("vertices: 1\narrows: x 1 1 0\nd = 3\nw = x*q*x\n");
  CHECK(unknown.kind() == ErrorKind::UnknownArrow);
  CHECK(unknown.line() == 4);

  SpecError bad_run = spec_error("vertices: 1\narrows: x 1 1 0\nrun = bogus\n");
  CHECK(bad_run.kind() == ErrorKind::SyntaxError);
  CHECK(bad_run.line() == 3);

  SpecError junk = spec_error("vertices: 1\nfrobnicate\n");
  CHECK(junk.kind() == ErrorKind::SyntaxError);
  CHECK(junk.line() == 2);
  CHECK(junk.column() == 1);

  SpecError bad_number = spec_error("vertices: 1\narrows: x 1 1 zero\n");
  CHECK(bad_number.kind() == ErrorKind::SyntaxError);
  CHECK(bad_number.line() == 2);
}

TEST_CASE("commands round trip through their names") {
  for (Command c : {Command::Check, Command::Build, Command::Homology, Command::Jacobi, Command::Hochschild, Command::XComplex,
                    Command::Koszul, Command::Cyclic, Command::Normalize, Command::Extract})
    CHECK(command_from_string(to_string(c)) == c);
  CHECK_THROWS_AS(command_from_string("nope"), Error);
}

TEST_CASE("run_text reports and exit codes") {
  JobResult ok = run_text(kX3);
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.report["schema"] == kSchema);
  CHECK(ok.report["status"] == "ok");
  CHECK(ok.report["input"]["truncation"] == 8);

  JobResult again = run_text(kX3);
  CHECK(again.report.dump() == ok.report.dump());

  JobResult jac = run_text("vertices: 1\narrows: x 1 1 0\nd = 3\nw = x*x*x*x\ntruncate = 6\nrun = jacobi\n");
  CHECK(jac.exit_code == kExitOk);
  CHECK(jac.report["result"]["H0_dim"] == 3);

  JobResult cyc = run_text("vertices: 1\narrows: x 1 1 0\nd = 3\nw = 0\nd z = x*x' - x'*x + x*x*x' - x*x'*x\nrun = cyclic\n");
  CHECK(cyc.exit_code == kExitCheckFailed);
  CHECK(cyc.report["status"] == "check_failed");

  JobResult bad = run_text("vertices: 1 2\narrows: x 1 1 0, a 1 2 0\nd = 3\nw = x*a\n");
  CHECK(bad.exit_code == kExitInputError);
  CHECK(bad.report["status"] == "error");
  CHECK(bad.report["error"]["kind"] == "NonCyclicTerm");
  CHECK(bad.report["error"]["line"] == 4);
  CHECK(bad.report["error"]["column"] == 5);
}

TEST_CASE("exit codes by error kind") {
  CHECK(exit_code_for(ErrorKind::MasterEquationFails) == kExitCheckFailed);
  CHECK(exit_code_for(ErrorKind::StasheffFails) == kExitCheckFailed);
  CHECK(exit_code_for(ErrorKind::NotACocycle) == kExitCheckFailed);
  CHECK(exit_code_for(ErrorKind::SyntaxError) == kExitInputError);
  CHECK(exit_code_for(ErrorKind::DegreeOutOfRange) == kExitInputError);
}
