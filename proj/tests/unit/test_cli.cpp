#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fptlab/ideals.hpp"

using fptlab::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("nu subcommand") {
  auto r = run({"nu", "-f", "x^2*y^2 + x^5 + y^5", "-p", "2", "-e", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "e,nu\n1,0\n2,1\n3,3\n4,7\n");
  CHECK(run({"nu", "-f", "x", "-p", "3", "-e", "2"}).out == "e,nu\n1,2\n2,8\n");
}

TEST_CASE("fpt subcommand") {
  auto r = run({"fpt", "-f", "y^2 - x^3", "-p", "7", "-e", "2", "--certify", "5", "7", "--vars", "x,y"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["nu"] == nlohmann::json::array({5, 40}));
  CHECK(j["interval"]["upper"] == "41/49");
  CHECK(j["certificate"]["valid"] == true);
  CHECK(j["certificate"]["witness"] == nlohmann::json::array({"x", "y"}));
  CHECK(j["certified_fpt"] == "5/6");

  auto refuted = run({"fpt", "-f", "y^2 - x^3", "-p", "5", "-e", "2", "--certify", "3", "5"});
  CHECK(refuted.code == 5);
  CHECK(nlohmann::json::parse(refuted.out)["certificate"]["valid"] == false);
}

TEST_CASE("tau subcommand") {
  auto r = run({"tau", "-f", "x^2*y^2 + x^5 + y^5", "-p", "2", "-t", "1/2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["generators"] == nlohmann::json::array({"x^2", "x*y", "y^2"}));
  CHECK(j["length"] == 3);
  CHECK(j["radical"] == false);
}

TEST_CASE("fsig and deriv subcommands") {
  auto fs = run({"fsig", "-f", "x^2*y", "-p", "3", "--grid", "0,1/2,1", "-e", "1"});
  CHECK(fs.code == 0);
  CHECK(fs.out.rfind("t_num,t_den,e,a_e,s_e_num,s_e_den,s_e\n", 0) == 0);
  CHECK(fs.out.find("1,2,1,2,2,9,") != std::string::npos);

  auto d = run({"deriv", "-f", "x^2*y", "-p", "3", "--alpha", "1/2", "-e", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("e,exponent,lambda,D_num,D_den,remark34_num,remark34_den,D,remark34\n", 0) == 0);
  CHECK(d.out.find("2,4,5,5,9,-10,9,") != std::string::npos);
}

TEST_CASE("verify subcommands") {
  auto a = run({"verify", "theorem-a", "-p", "7", "-d", "4", "-n", "4"});
  CHECK(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["certified_fpt"] == "5/6");
  for (const auto& c : j["checks"]) CHECK(c["status"] == "PASS");
  CHECK(run({"verify", "appendix", "-n", "2"}).code == 0);
  CHECK(run({"verify", "cusp", "-p", "5"}).code == 0);
  CHECK(run({"verify", "example36", "-p", "3", "-e", "4"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"nu", "-f", "x^^2", "-p", "3", "-e", "1"}).code == 2);
  CHECK(run({"nu", "-f", "x + z", "-p", "3", "-e", "1", "--vars", "x,y"}).code == 2);
  CHECK(run({"nu", "-p", "3", "-e", "1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"tau", "-f", "x", "-p", "3", "-t", "1/0"}).code == 3);
  CHECK(run({"tau", "-f", "x", "-p", "3", "-t", "one"}).code == 2);
  CHECK(run({"nu", "-f", "x", "-p", "4", "-e", "1"}).code == 3);
  CHECK(run({"nu", "-f", "1 + x", "-p", "3", "-e", "1"}).code == 3);
  CHECK(run({"verify", "cusp", "-p", "3"}).code == 3);
  CHECK(run({"verify", "theorem-a", "-p", "5", "-d", "4", "-n", "4"}).code == 3);
  auto big = run({"--max-dense-cells", "10", "fsig", "-f", "x^3 + y^3 + x*y", "-p", "3", "--grid", "1/2", "-e", "3"});
  CHECK(big.code == 4);
  CHECK(big.err.find("fptlab:") == 0);
  CHECK(fptlab::max_dense_cells() == (std::uint64_t{1} << 24));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "cusp", "-p", "7"};
  auto first = run(args);
  for (int i = 0; i < 3; ++i) CHECK(run(args).out == first.out);
  const std::vector<std::string> tau{"tau", "-f", "y^2 - x^3 + x*y", "-p", "5", "-t", "2/3"};
  CHECK(run(tau).out == run(tau).out);
}

TEST_CASE("variables default to order of appearance") {
  auto r = run({"fpt", "-f", "y^2 - x^3", "-p", "7", "-e", "1", "--certify", "5", "7"});
  CHECK(nlohmann::json::parse(r.out)["certificate"]["witness"] == nlohmann::json::array({"y", "x"}));
}
