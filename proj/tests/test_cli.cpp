#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bqsolve/cli.hpp"
#include "doctest.h"

using namespace bqsolve;

namespace {

const char* kTriangle = "1 2 1.5\n0 1 -1\n0 2 -3\n";

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args,
                  const std::string& stdin_text = "") {
  static const Registry registry = default_registry();
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  RunResult result;
  result.code = run(registry, args, in, out, err, "bqsolve");
  result.out = out.str();
  result.err = err.str();
  return result;
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("bqsolve_cli_test_" + std::to_string(counter++) + ".txt"))
                .string();
    std::ofstream file(path_);
    file << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pt end to end on the triangle instance") {
  TempFile instance(kTriangle);
  const auto result =
      run_cli({"pt", instance.path(), "--vartype=SPIN", "--seed=0"});
  CHECK(result.code == 0);
  CHECK(result.err.empty());
  CHECK(first_line(result.out) == "0,1,2,energy,num_occurrences");
  CHECK(result.out.find(",-3.5,") != std::string::npos);
}

TEST_CASE("stdin and file input produce identical bytes") {
  TempFile instance(kTriangle);
  const auto by_file =
      run_cli({"random", instance.path(), "--vartype=SPIN", "--seed=11",
               "--num_solutions=6"});
  const auto by_stdin = run_cli(
      {"random", "--vartype=SPIN", "--seed=11", "--num_solutions=6"},
      kTriangle);
  CHECK(by_file.code == 0);
  CHECK(by_stdin.code == 0);
  CHECK(by_file.out == by_stdin.out);
}

TEST_CASE("--output writes the file instead of stdout") {
  TempFile instance(kTriangle);
  const std::string out_path =
      (std::filesystem::temp_directory_path() / "bqsolve_cli_out.csv")
          .string();
  const auto result = run_cli({"bruteforce", instance.path(),
                               "--vartype=SPIN", "--num_states=2",
                               "--output", out_path});
  CHECK(result.code == 0);
  CHECK(result.out.empty());
  std::ifstream file(out_path);
  std::stringstream contents;
  contents << file.rdbuf();
  CHECK(first_line(contents.str()) == "0,1,2,energy,num_occurrences");
  std::remove(out_path.c_str());
}

TEST_CASE("help output") {
  SUBCASE("top level lists the solvers and exits 0") {
    const auto result = run_cli({"-h"});
    CHECK(result.code == 0);
    CHECK(result.out.find("{pt,random,bruteforce}") != std::string::npos);
    CHECK(result.out.find("Solvers:") != std::string::npos);
  }
  SUBCASE("solver help shows the synthesized flags") {
    const auto result = run_cli({"pt", "-h"});
    CHECK(result.code == 0);
    CHECK(result.out.find("--num_replicas NUM_REPLICAS") !=
          std::string::npos);
    CHECK(result.out.find("number of replicas to simulate (default 10)") !=
          std::string::npos);
    CHECK(result.out.find("positional arguments:") != std::string::npos);
  }
  SUBCASE("help bytes are stable across invocations") {
    CHECK(run_cli({"-h"}).out == run_cli({"-h"}).out);
    CHECK(run_cli({"bruteforce", "-h"}).out ==
          run_cli({"bruteforce", "-h"}).out);
  }
  SUBCASE("top-level transcript") {
    CHECK(run_cli({"-h"}).out ==
          "usage: bqsolve [-h] {pt,random,bruteforce} ...\n"
          "\n"
          "optional arguments:\n"
          "  -h, --help            show this help message and exit\n"
          "\n"
          "Solvers:\n"
          "  {pt,random,bruteforce}\n");
  }
  SUBCASE("pt transcript") {
    CHECK(run_cli({"pt", "-h"}).out ==
          "usage: bqsolve pt [-h] [--output OUTPUT] --vartype {SPIN,BINARY}"
          " [--num_replicas NUM_REPLICAS] [--num_pt_steps NUM_PT_STEPS]"
          " [--num_sweeps NUM_SWEEPS] [--beta_min BETA_MIN]"
          " [--beta_max BETA_MAX] [--seed SEED] input\n"
          "\n"
          "Parallel tempering sampler\n"
          "\n"
          "positional arguments:\n"
          "  input                 Path of the input BQM file in COO format."
          " If not specified, stdin is used.\n"
          "\n"
          "optional arguments:\n"
          "  -h, --help            show this help message and exit\n"
          "  --output OUTPUT       Path of the output file. If not"
          " specified, stdout is used.\n"
          "  --vartype {SPIN,BINARY}\n"
          "                        Variable type\n"
          "  --num_replicas NUM_REPLICAS\n"
          "                        number of replicas to simulate (default"
          " 10)\n"
          "  --num_pt_steps NUM_PT_STEPS\n"
          "                        number of parallel tempering steps\n"
          "  --num_sweeps NUM_SWEEPS\n"
          "                        number of Monte Carlo sweeps per parallel"
          " tempering step\n"
          "  --beta_min BETA_MIN   inverse temperature of the hottest"
          " replica\n"
          "  --beta_max BETA_MAX   inverse temperature of the coldest"
          " replica\n"
          "  --seed SEED           seed of the random number generator\n");
  }
}

TEST_CASE("usage errors exit 1") {
  TempFile instance(kTriangle);

  SUBCASE("unknown solver") {
    const auto result =
        run_cli({"nosuch", instance.path(), "--vartype=SPIN"});
    CHECK(result.code == 1);
    CHECK(result.err.find("usage:") != std::string::npos);
    CHECK(result.err.find("pt, random, bruteforce") != std::string::npos);
    CHECK(result.out.empty());
  }
  SUBCASE("missing --vartype") {
    const auto result = run_cli({"pt", instance.path()});
    CHECK(result.code == 1);
    CHECK(result.err.find("--vartype") != std::string::npos);
  }
  SUBCASE("bad choice") {
    const auto result =
        run_cli({"pt", instance.path(), "--vartype=QUATERNARY"});
    CHECK(result.code == 1);
  }
  SUBCASE("unknown flag") {
    const auto result = run_cli(
        {"pt", instance.path(), "--vartype=SPIN", "--wat=1"});
    CHECK(result.code == 1);
  }
  SUBCASE("bad integer value") {
    const auto result = run_cli({"random", instance.path(), "--vartype=SPIN",
                                 "--num_solutions=two"});
    CHECK(result.code == 1);
  }
  SUBCASE("no arguments at all") {
    const auto result = run_cli({});
    CHECK(result.code == 1);
  }
}

TEST_CASE("parse failures exit 2") {
  SUBCASE("malformed line reports its number") {
    TempFile bad("0 1 1.0\nbogus line\n");
    const auto result = run_cli({"random", bad.path(), "--vartype=SPIN"});
    CHECK(result.code == 2);
    CHECK(result.err.find("line 2") != std::string::npos);
  }
  SUBCASE("missing input file") {
    const auto result =
        run_cli({"random", "/nonexistent/nowhere.txt", "--vartype=SPIN"});
    CHECK(result.code == 2);
    CHECK(result.err.find("cannot open") != std::string::npos);
  }
}

TEST_CASE("solver errors exit 3") {
  SUBCASE("capacity error") {
    std::string big;
    for (int i = 0; i < 70; ++i) {
      big += std::to_string(i) + ' ' + std::to_string(i) + " 1.0\n";
    }
    TempFile instance(big);
    const auto result =
        run_cli({"bruteforce", instance.path(), "--vartype=SPIN"});
    CHECK(result.code == 3);
    CHECK(result.err.find("64") != std::string::npos);
  }
  SUBCASE("parameter error") {
    TempFile instance(kTriangle);
    const auto result = run_cli({"pt", instance.path(), "--vartype=SPIN",
                                 "--beta_min=2.0", "--beta_max=1.0"});
    CHECK(result.code == 3);
  }
}

TEST_CASE("successful runs emit well-formed csv") {
  TempFile instance(kTriangle);
  const auto result = run_cli({"bruteforce", instance.path(),
                               "--vartype=BINARY", "--num_states=8"});
  REQUIRE(result.code == 0);
  std::istringstream lines(result.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "0,1,2,energy,num_occurrences");
  int rows = 0;
  double previous = -1e300;
  while (std::getline(lines, line)) {
    ++rows;
    // energy is the second-to-last field and must be sorted ascending
    const auto last_comma = line.rfind(',');
    const auto prev_comma = line.rfind(',', last_comma - 1);
    const double energy = std::strtod(
        line.substr(prev_comma + 1, last_comma - prev_comma - 1).c_str(),
        nullptr);
    CHECK(energy >= previous);
    previous = energy;
  }
  CHECK(rows == 8);
}

TEST_CASE("flag values may be space separated") {
  TempFile instance(kTriangle);
  const auto with_space = run_cli(
      {"random", instance.path(), "--vartype", "SPIN", "--seed", "5"});
  const auto with_equals =
      run_cli({"random", instance.path(), "--vartype=SPIN", "--seed=5"});
  CHECK(with_space.code == 0);
  CHECK(with_space.out == with_equals.out);
}

}  // TEST_SUITE
