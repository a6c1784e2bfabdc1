#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ainv/bench.hpp"
#include "ainv/io.hpp"
#include "ainv/oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& path, const std::string& data) {
  std::ofstream(path, std::ios::binary | std::ios::trunc) << data;
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("ainv_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome run(const std::string& args, const std::string& input = "") {
  const fs::path in = scratch() / "stdin", out = scratch() / "stdout", err = scratch() / "stderr";
  spit(in, input);
  const std::string cmd = std::string(AINV_CLI_PATH) + " " + args + " < " + in.string() + " > " +
                          out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("count from stdin") {
  auto r = run("count", "3 1 4 1 5 9 2 6");
  CHECK(r.status == 0);
  CHECK(r.out == "8\n");
  CHECK(run("count", "1 2 3").out == "0\n");
  r = run("count", "");
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("count options") {
  auto r = run("count --inner fenwick --stats --oracle", "5 4 3 2 1\n");
  CHECK(r.status == 0);
  CHECK(r.out == "10\n");
  CHECK(r.err.find("final_q=") != std::string::npos);
  CHECK(r.err.find("phase.1.q=1") != std::string::npos);

  r = run("count --oracle --oracle-limit 3", "5 4 3 2 1\n");
  CHECK(r.status == 2);
  CHECK(r.out.empty());
}

TEST_CASE("malformed input exits 2 with a location") {
  auto r = run("count", "1 2\nthree\n");
  CHECK(r.status == 2);
  CHECK(r.err.find("line 2, column 1") != std::string::npos);

  r = run("count --format binary", "AINV");
  CHECK(r.status == 2);
  CHECK(r.err.find("byte 4") != std::string::npos);

  CHECK(run("count " + (scratch() / "missing").string()).status == 2);
  CHECK(run("count --inner chan", "1").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("text and binary encodings give the same count") {
  const auto keys = ainv::generate(
      {.n = 3000, .method = ainv::GenMethod::uniform_random, .parameter = 50, .seed = 9});
  const fs::path text = scratch() / "seq.txt", bin = scratch() / "seq.bin";
  spit(text, ainv::to_text(keys));
  spit(bin, ainv::to_binary(keys));
  const auto a = run("count " + text.string() + " --oracle");
  const auto b = run("count " + bin.string() + " --format binary --oracle");
  CHECK(a.status == 0);
  CHECK(b.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == ainv::format_count(ainv::brute_count(keys)) + "\n");
}

TEST_CASE("gen") {
  auto r = run("gen --n 5 --method reverse");
  CHECK(r.status == 0);
  CHECK(r.out == "4 3 2 1 0\n");

  r = run("gen --n 0 --method sorted");
  CHECK(r.status == 0);
  CHECK(r.out.empty());

  const fs::path file = scratch() / "swaps.txt";
  r = run("gen --n 100 --method adjacent_swaps --param 37 --seed 1 -o " + file.string());
  CHECK(r.status == 0);
  CHECK(ainv::brute_count(ainv::parse_text(slurp(file))) == ainv::Count{37});
  CHECK(run("count " + file.string()).out == "37\n");

  const fs::path bin = scratch() / "swaps.bin";
  r = run("gen --n 100 --method adjacent_swaps --param 37 --seed 1 --format binary " + bin.string());
  CHECK(r.status == 0);
  CHECK(ainv::parse_binary(slurp(bin)) == ainv::parse_text(slurp(file)));

  CHECK(run("gen --n 5 --method window --param 0").status == 2);
  CHECK(run("gen --n 5 --method zigzag").status == 2);
  CHECK(run("gen --n 5 --format yaml").status == 2);
}

TEST_CASE("verify") {
  auto r = run("verify --trials 0 --n-max 5");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  r = run("verify --n-max 8 --exhaustive --trials 10");
  CHECK(r.status == 0);
  CHECK(r.out.find("40320 permutations of length 8 passed") != std::string::npos);

  r = run("verify --n-max 2000 --trials 500 --alphabet 2");
  CHECK(r.status == 0);

  CHECK(run("verify --n-max 11 --exhaustive").status == 2);
  CHECK(run("verify --n-max 100001").status == 2);
}

TEST_CASE("bench") {
  auto r = run("bench --sizes 1000 --inv-per-n 0 --omit-timing");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == ainv::kBenchCsvHeader);
  CHECK(row == "1000,adjacent_swaps,0,1,0,1,1,1000,998,2994,merge,0,0");

  r = run("bench --sizes 1000 --inv-per-n max --inner merge,fenwick --omit-timing");
  CHECK(r.status == 0);
  CHECK(r.out.find(",499500\n") != std::string::npos);
  CHECK(r.err.find("failures=0") != std::string::npos);

  const fs::path csv = scratch() / "bench.csv";
  fs::remove(csv);
  r = run("bench --sizes 500,1000 --inv-per-n 1,4 --repeats 2 --seed 5 --csv " + csv.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::istringstream file(slurp(csv));
  std::size_t count = 0;
  for (std::string line; std::getline(file, line);) ++count;
  CHECK(count == 9);

  CHECK(run("bench --sizes 10 --inv-per-n 1 --csv /nonexistent-dir/b.csv").status == 2);
  CHECK(run("bench --sizes 10 --inv-per-n x").status == 2);
  CHECK(run("bench --sizes 10").status == 2);
}
