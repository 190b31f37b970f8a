#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bohr/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bohr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) result.push_back(cell);
  return result;
}

}  // namespace

TEST_CASE("constants command") {
  const auto csv = run({"constants"});
  CHECK(csv.code == bohr::cli::kOk);
  CHECK(lines(csv.out).front() == "name,computed,reference,tolerance,residual,ok");

  const auto json = run({"constants", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["lambda1"].get<double>() == doctest::Approx(18.6095).epsilon(1e-3 / 18.6));
  CHECK(std::abs(j["aStar1"].get<double>() - 0.567284) < 1e-6);
  CHECK(std::abs(j["p"].get<double>() - 2.4721359550) < 1e-9);
  CHECK(j["withinTolerance"].get<bool>());

  const auto breach = run({"constants", "--tol", "1e-15"});
  CHECK(breach.code == bohr::cli::kResidualBreach);
  CHECK(breach.err.find("aStar1") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto t21 = run({"verify", "--theorem", "T21", "--n", "1,2,3", "--a", "0:0.99:0.01"});
  CHECK(t21.code == bohr::cli::kOk);
  const auto rows = lines(t21.out);
  CHECK(rows.front() ==
        "theorem,n,a,r,interpretation,head,tail,area,area2,extra,total,margin,certified,family,violation");
  CHECK(rows.size() == 1 + 100 + 200 + 200);

  const auto classic = run({"verify", "--theorem", "classic", "--family", "moebius:0.5", "--r", "0.51"});
  CHECK(classic.code == bohr::cli::kViolations);
  const auto crow = lines(classic.out);
  REQUIRE(crow.size() == 2);
  CHECK(cells(crow[1]).back() == "true");

  const auto e = run({"verify", "--theorem", "E", "--n", "1"});
  CHECK(e.code == bohr::cli::kOk);
  bool seen = false;
  for (const auto& line : lines(e.out)) {
    const auto c = cells(line);
    if (c[2] == "0.999") {
      seen = true;
      CHECK(std::stod(c[11]) < 1e-7);
      CHECK(std::stod(c[11]) >= 0.0);
    }
  }
  CHECK(seen);

  CHECK(run({"verify", "--theorem", "T24"}).code == bohr::cli::kUsage);
  CHECK(run({"verify"}).code == bohr::cli::kUsage);
  CHECK(run({"verify", "--theorem", "C", "--n", "2"}).code == bohr::cli::kDomain);
  CHECK(run({"verify", "--theorem", "C", "--a", "0:1.2:0.1"}).code == bohr::cli::kDomain);
  CHECK(run({"verify", "--theorem", "C", "--a", "0:0.5"}).code == bohr::cli::kUsage);
  CHECK(run({"verify", "--theorem", "T21", "--family", "unit:0.5,2", "--r", "0.6"}).code == bohr::cli::kDomain);
}

TEST_CASE("output is byte-stable and can go to a file") {
  const std::vector<std::string> args{"verify", "--theorem", "T22", "--n", "2", "--a", "0:0.9:0.1", "--format", "json"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.out == second.out);
  CHECK(nlohmann::json::parse(first.out)["rows"].size() == 20);

  const auto path = (std::filesystem::temp_directory_path() / "bohr_cli_test.csv").string();
  auto with_file = run({"constants", "--out", path});
  CHECK(with_file.code == 0);
  CHECK(with_file.out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == run({"constants"}).out);
  std::remove(path.c_str());
}

TEST_CASE("radius, scan and lemma commands") {
  const auto r = run({"radius", "--functional", "classic", "--family", "moebius:0.9"});
  REQUIRE(r.code == 0);
  const auto row = cells(lines(r.out)[1]);
  CHECK(std::abs(std::stod(row[3]) - 1.0 / 2.8) < 1e-9);

  const auto s = run({"scan", "--theorem", "C", "--epsilon", "0"});
  REQUIRE(s.code == 0);
  const auto srow = cells(lines(s.out)[1]);
  CHECK(std::abs(std::stod(srow[6]) - 0.567284) <= 1e-3);

  const auto l = run({"lemma", "--part", "a", "--family", "scaled:0.6,2", "--r", "0.5"});
  REQUIRE(l.code == 0);
  const auto lrow = lines(l.out);
  REQUIRE(lrow.size() == 2);
  CHECK(lrow[1].substr(lrow[1].size() - 4) == "true");

  const auto sp = run({"lemma", "--part", "sp", "--family", "unit:0.4,3", "--r", "0.1,0.2"});
  CHECK(sp.code == 0);
  CHECK(lines(sp.out).size() == 3);
}

TEST_CASE("every exit code") {
  using namespace bohr::cli;
  CHECK(run({"constants"}).code == kOk);
  CHECK(run({"verify", "--theorem", "classic", "--family", "moebius:0.5", "--r", "0.51"}).code == kViolations);
  CHECK(run({"constants", "--tol", "1e-15"}).code == kResidualBreach);
  CHECK(run({}).code == kUsage);
  CHECK(run({"frobnicate"}).code == kUsage);
  CHECK(run({"verify", "--theorem", "X"}).code == kUsage);
  CHECK(run({"lemma", "--part", "z", "--family", "moebius:0.5", "--r", "0.5"}).code == kUsage);
  CHECK(run({"lemma", "--part", "a", "--family", "unit:0.5,2", "--r", "0.3"}).code == kDomain);
  CHECK(run({"radius", "--functional", "classic", "--family", "moebius:1.5"}).code == kDomain);
  CHECK(run({"radius", "--functional", "B2", "--family", "blaschke:-0.9"}).code == kMonotonicity);
  CHECK(run({"lemma", "--part", "a", "--family", "scaled:0.5,4", "--r", "0.5", "--oracle", "--budget", "100"}).code ==
        kBudget);
  CHECK(run({"--help"}).code == kOk);
}
