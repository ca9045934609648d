#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef HARMLIKE_CLI_PATH
#error "HARMLIKE_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(HARMLIKE_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    res.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("table emits the recurrence values as CSV") {
  const auto res = run_cli("table --a 0.5 --n-max 3 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("n,a_re,a_im,method,value_re,value_im") !=
        std::string::npos);
  CHECK(res.output.find("0.8333333333333333") != std::string::npos);

  const auto ones = run_cli("table --a 1 --n-max 2");
  CHECK(ones.exit_code == 0);
  CHECK(ones.output.find("1.5") != std::string::npos);

  const auto complex_a = run_cli("table --a 1+1i --n-max 1");
  CHECK(complex_a.exit_code == 0);
  CHECK(complex_a.output.find(",1,0\n") != std::string::npos);
}

TEST_CASE("malformed complex literal is a usage error") {
  CHECK(run_cli("table --a 1+2j --n-max 3").exit_code == 2);
  CHECK(run_cli("table --a abc --n-max 3").exit_code == 2);
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("compare --function si2 --z-min 2 --z-max 1 --steps 3")
            .exit_code == 2);
}

TEST_CASE("verify suites exit 0 and are deterministic") {
  const auto first = run_cli("verify --suite all --n-max 25");
  const auto second = run_cli("verify --suite all --n-max 25");
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);

  CHECK(run_cli("verify --suite staver --n-max 10").exit_code == 0);
  CHECK(run_cli("verify --suite series_coeffs --n-max 12").exit_code == 0);
  CHECK(run_cli("verify --suite eq2 --n-max 30").exit_code == 0);
}

TEST_CASE("a flipped coefficient sign turns the exit code to 1") {
  const auto res = run_cli(
      "verify --suite series_coeffs --n-max 12 --inject-coefficient-fault");
  CHECK(res.exit_code == 1);
}

TEST_CASE("compare on a single grid point") {
  const auto zero = run_cli(
      "compare --function si2 --z-min 0 --z-max 0 --steps 1");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output.find("si2,0,0,0,0,0,0,0,") != std::string::npos);

  const auto one = run_cli(
      "compare --function si2 --z-min 1 --z-max 1 --steps 1 --tol 1e-14 "
      "--format json");
  CHECK(one.exit_code == 0);
  const auto arr = nlohmann::json::parse(one.output);
  REQUIRE(arr.size() == 1);
  CHECK(std::stod(arr[0]["abs_error"].get<std::string>()) <= 1e-12);

  const auto cossi = run_cli(
      "compare --function cossi --z-min 2 --z-max 2 --steps 1 --format json");
  const auto arr2 = nlohmann::json::parse(cossi.output);
  CHECK(std::stod(arr2[0]["abs_error"].get<std::string>()) <= 1e-12);
}

TEST_CASE("coeffs dumps exact rationals") {
  const auto si2 = run_cli("coeffs --function si2 --n-max 2");
  CHECK(si2.exit_code == 0);
  CHECK(si2.output.find("1/1") != std::string::npos);
  CHECK(si2.output.find("-1/9") != std::string::npos);

  const auto cossi = run_cli("coeffs --function cossi --n-max 2");
  CHECK(cossi.output.find("2/1") != std::string::npos);
  CHECK(cossi.output.find("-10/9") != std::string::npos);

  const auto si_ref = run_cli("coeffs --function si_ref --n-max 2");
  CHECK(si_ref.output.find("1/1") != std::string::npos);
  CHECK(si_ref.output.find("-1/18") != std::string::npos);

  CHECK(run_cli("coeffs --function nope --n-max 2").exit_code == 2);
}

TEST_CASE("CSV and JSON carry identical numeric content") {
  const auto csv = run_cli("table --a 0.25 --n-max 5 --format csv");
  const auto js = run_cli("table --a 0.25 --n-max 5 --format json");
  CHECK(csv.exit_code == 0);
  CHECK(js.exit_code == 0);

  // Parse both and compare field by field.
  const auto arr = nlohmann::json::parse(js.output);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < csv.output.size()) {
    const std::size_t end = csv.output.find('\n', start);
    lines.push_back(csv.output.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  REQUIRE(lines.size() >= 6);  // header + 5 rows
  const std::vector<std::string> keys = {"n",      "a_re",     "a_im",
                                         "method", "value_re", "value_im"};
  for (std::size_t row = 0; row < arr.size(); ++row) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    const std::string& line = lines[row + 1];
    while (true) {
      const std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    REQUIRE(cells.size() == keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) {
      CHECK(arr[row][keys[k]].get<std::string>() == cells[k]);
    }
  }
}
