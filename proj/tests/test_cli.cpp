// Drives the cardqubo executable as a subprocess.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cardqubo/instances.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "cardqubo_cli_test";

int run(const std::string& args, std::string* output = nullptr) {
  fs::create_directories(kWork);
  const fs::path log = kWork / "stdout.txt";
  const std::string cmd = std::string(CARDQUBO_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(log);
    std::ostringstream s;
    s << in.rdbuf();
    *output = s.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gen writes a loadable instance") {
  const auto out = kWork / "gen.txt";
  REQUIRE(run("gen --instance psd --n 6 --seed 4 --out " + out.string()) == 0);
  CHECK(cardqubo::load_matrix(out) == cardqubo::psd(6, 4));
}

TEST_CASE("oracle and solve print cost, bit string and cardinality") {
  std::string text;
  REQUIRE(run("oracle --instance psd --n 10 --seed 2", &text) == 0);
  CHECK(text.find("solution: 0000000000") != std::string::npos);
  CHECK(text.find("cardinality: 0") != std::string::npos);

  REQUIRE(run("oracle --instance psd --n 10 --seed 2 --m 3", &text) == 0);
  CHECK(text.find("cardinality: 3") != std::string::npos);

  REQUIRE(run("solve --instance psd --n 12 --seed 2 --alpha 10 --m 4", &text) == 0);
  CHECK(text.find("cardinality: 4") != std::string::npos);
  CHECK(text.find("cost: ") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("oracle --instance gaussian --n 31") == 3);
  CHECK(run("oracle --instance gaussian --n 40 --m 20") == 3);
  CHECK(run("experiment --n 10 --m 11 --out " + (kWork / "x.csv").string()) == 2);
  CHECK(run("experiment --alphas 0,0.5,0.5 --out " + (kWork / "x.csv").string()) == 2);
  CHECK(run("experiment --alphas 0,abc --out " + (kWork / "x.csv").string()) == 2);
  CHECK(run("experiment --schedule medium --out " + (kWork / "x.csv").string()) == 2);
  CHECK(run("solve --alpha 1") == 2);
  CHECK(run("solve --alpha -1 --m 3") == 2);
  CHECK(run("oracle --instance file:" + (kWork / "missing.txt").string()) == 2);
  CHECK(run("bogus") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("experiment CSV is byte-identical across runs") {
  const auto a = kWork / "a.csv";
  const auto b = kWork / "b.csv";
  const std::string args = "experiment --n 16 --m 4 --alphas 0,1 --trials 25 --seed 3 --out ";
  REQUIRE(run(args + a.string()) == 0);
  REQUIRE(run(args + b.string() + " --threads 3") == 0);
  const auto text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("alpha,cardinality,count,best_cost,mean_cost\n", 0) == 0);
}
