#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cusplab/cli.hpp"
#include "cusplab/errors.hpp"

using namespace cusplab;
using namespace cusplab::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string body(const std::string& csv) {
  std::string out;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') out += line + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("point specs") {
  CHECK(parse_point("3/10").prefix() == std::vector<cf::Digit>{3, 3});
  const auto neg = parse_point("-7/3");
  CHECK(neg.integer_part() == -3);
  CHECK(neg.prefix() == std::vector<cf::Digit>{1, 2});
  CHECK(parse_point("sqrt:5-1/2").period() == std::vector<cf::Digit>{1});
  CHECK(parse_point("sqrt:7").integer_part() == 2);
  const auto spike = parse_point("1,1,100,(1)");
  CHECK(spike.prefix() == std::vector<cf::Digit>{1, 1, 100});
  CHECK(spike.period() == std::vector<cf::Digit>{1});
  CHECK(parse_point("(1,2)").period() == std::vector<cf::Digit>{1, 2});
  CHECK(parse_point("0.5").prefix() == std::vector<cf::Digit>{2});
  for (const char* bad : {"0/0", "", "1,(2", "1,0", "(2),1", "sqrt:4", "abc", "1.5", "(2)(3)"}) {
    CHECK_THROWS_AS(parse_point(bad), DomainError);
  }
}

TEST_CASE("generator and weight specs") {
  CHECK(parse_generator("loggeom:2").kind() == growth::GeneratorKind::LogGeometric);
  CHECK(*parse_generator("spiked:1,50").closed_omega() == 1.0);
  CHECK(*parse_generator("explicit:2,3,5,8").length() == 4);
  CHECK_THROWS_AS(parse_generator("geom"), DomainError);
  CHECK_THROWS_AS(parse_generator("poly:2"), DomainError);
  CHECK(parse_weights("harmonic:3,9").upper() == 9);
  CHECK(parse_weights("weights:2:1,1,2").weights()[2] == doctest::Approx(0.5));
  CHECK_THROWS_AS(parse_weights("weights:2:0,0"), DomainError);
  CHECK_THROWS_AS(parse_weights("uniform:5,3"), DomainError);
}

TEST_CASE("config files and hashing") {
  const auto c = parse_config("# comment\n horizon = 12\n\ntol=1e-9\n");
  CHECK(c.at("horizon") == "12");
  CHECK(c.at("tol") == "1e-9");
  CHECK_THROWS_AS(parse_config("novalue\n"), DomainError);
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-std::nan("")) == "nan");

  const auto dir = std::filesystem::temp_directory_path() / "cusplab_cli_test";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "horizon = 4\npoint = (3)\n";
  const auto from_file = call({"cf", "--config", cfg.string()});
  REQUIRE(from_file.code == 0);
  CHECK(body(from_file.out) == "n,a_n,p_n,q_n\n1,3,1,3\n2,3,3,10\n3,3,10,33\n4,3,33,109\n");
  // Flags override file values.
  const auto flagged = call({"cf", "--config", cfg.string(), "--horizon", "2"});
  CHECK(body(flagged.out) == "n,a_n,p_n,q_n\n1,3,1,3\n2,3,3,10\n");
  CHECK(flagged.out.find("config_hash=") != std::string::npos);
  CHECK(flagged.out != from_file.out);
  std::ofstream(cfg) << "bogus_key = 1\n";
  CHECK(call({"cf", "3/10", "--config", cfg.string()}).code == 2);
  CHECK(call({"cf", "3/10", "--config", (dir / "missing.cfg").string()}).code == 2);
}

TEST_CASE("subcommand outputs and exit codes") {
  const auto cf = call({"cf", "(2)", "--horizon", "3"});
  CHECK(cf.code == 0);
  CHECK(body(cf.out) == "n,a_n,p_n,q_n\n1,2,1,2\n2,2,2,5\n3,2,5,12\n");
  CHECK(call({"cf", "0/0"}).code == 2);
  CHECK(call({"cf"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"nosuch"}).code == 2);
  CHECK(call({"cf", "3/10", "--bogus"}).code == 2);
  CHECK(call({"--help"}).code == 0);

  const auto exc = call({"excursions", "(2)", "--horizon", "20", "--tau", "1", "--kappa", "1"});
  CHECK(exc.code == 0);
  CHECK(exc.out.find("good=1") != std::string::npos);
  CHECK(call({"excursions", "3/10", "--horizon", "20"}).code == 3);
  CHECK(call({"excursions", "(2)", "--kappa", "-1"}).code == 2);

  const auto dim = call({"dim-fn", "2"});
  CHECK(dim.code == 0);
  CHECK(dim.out.find("\n2,0.7913945485866") != std::string::npos);
  CHECK(call({"dim-fn", "1"}).code == 2);
  CHECK(call({"dim-fn", "2", "--nodes", "4"}).code == 2);

  const auto seq = call({"dim-seq", "loggeom:2"});
  CHECK(seq.code == 0);
  CHECK(seq.out.find("\n30,") != std::string::npos);
  CHECK(call({"dim-seq", "explicit:5,5,5,5,5"}).code == 2);
  CHECK(call({"dim-seq", "explicit:2,3,5,8,13", "--horizon", "10"}).code == 3);

  const auto spec = call({"spectrum", "0.75", "--grid", "3"});
  CHECK(body(spec.out) == "beta,strict,stratmann\n0.5,0,0\n0.625,0.25,0.375\n0.75,0.5,0.75\n");
  const auto flat = call({"spectrum", "1"});
  CHECK(flat.code == 2);
  CHECK(flat.err.find("collapses") != std::string::npos);

  CHECK(call({"frostman", "--samples", "0"}).code == 2);
  CHECK(call({"frostman", "weights:3:0,0"}).code == 2);
  CHECK(call({"spectrum", "0.75", "--svg"}).code == 2);
}

TEST_CASE("csv output is deterministic across runs and thread counts") {
  const std::vector<std::vector<std::string>> commands = {
      {"cf", "sqrt:7", "--horizon", "12"},
      {"excursions", "1,1,100,(1)", "--horizon", "30"},
      {"dim-fn", "2,3,7"},
      {"dim-seq", "spiked:1"},
      {"spectrum", "0.8"},
      {"frostman", "harmonic:5,15", "--samples", "40", "--seed", "9"},
  };
  for (const auto& c : commands) {
    setenv("CUSPLAB_THREADS", "1", 1);
    const auto a = call(c);
    const auto b = call(c);
    setenv("CUSPLAB_THREADS", "8", 1);
    const auto d = call(c);
    unsetenv("CUSPLAB_THREADS");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == d.out);
    CHECK(a.out.rfind("# cusplab " + c[0], 0) == 0);
    CHECK(a.out.find("# seed=") != std::string::npos);
  }
  const auto s1 = call({"frostman", "harmonic:5,15", "--samples", "5", "--seed", "1"});
  const auto s2 = call({"frostman", "harmonic:5,15", "--samples", "5", "--seed", "2"});
  CHECK(body(s1.out) != body(s2.out));
}

TEST_CASE("files and plots") {
  const auto dir = std::filesystem::temp_directory_path() / "cusplab_cli_out";
  std::filesystem::remove_all(dir);
  const auto r = call({"spectrum", "0.75", "--out", dir.string(), "--svg"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream svg(dir / "spectrum.svg");
  std::stringstream text;
  text << svg.rdbuf();
  CHECK(text.str().find("viewBox=\"0 0 800 600\"") != std::string::npos);
  CHECK(text.str().find("stroke-dasharray=\"8,6\"") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "spectrum.csv"));
  CHECK(call({"dim-fn", "2,4", "--out", dir.string(), "--svg"}).code == 0);
  CHECK(std::filesystem::exists(dir / "dim-fn.svg"));
  std::filesystem::remove_all(dir);
}
