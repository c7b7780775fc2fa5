#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "cli_support.hpp"
#include "prodmat/json_io.hpp"
#include "prodmat/prodmat.hpp"

using namespace prodmat;
using clisupport::golden;
using clisupport::run_cli;

TEST_CASE("golden transcripts") {
  for (const auto& c : clisupport::cli_cases()) {
    CAPTURE(c.golden);
    const clisupport::RunResult r = run_cli(c.args);
    CHECK(r.status == c.exit_code);
    CHECK(r.out == golden(c.golden));
  }
}

TEST_CASE("golden transcripts agree with in-process results") {
  // recompute a few pinned outputs through the library and compare bytes
  HessWindow<Rational> motzkin(3, 1);
  for (int n = 0; n < 3; ++n) {
    motzkin.set(n, n, Rational(1));
    if (n > 0) motzkin.set(n, n - 1, Rational(1));
  }
  CHECK(canonical(lowtri_to_json(output_matrix(motzkin, 4))) == golden("out_triangle.txt"));

  const JFraction<Rational> jf{std::vector<Rational>(4, Rational(1)),
                               std::vector<Rational>(3, Rational(1)), false};
  CHECK(canonical(sequence_to_json(moments_from_production(jfrac_production(jf, 4), 5))) ==
        golden("moments_tridiagonal.txt"));

  const SFraction<Rational> sf(2, std::vector<Rational>(10, Rational(1)));
  CHECK(canonical(hess_to_json(mbranched_production(sf, 3))) == golden("branched_window.txt"));

  const BesselKParams<Rational> p{Rational(1), Rational(1)};
  CHECK(canonical(hess_to_json(besselK_production(p, 3))) ==
        golden("model_product_window.txt"));
}

TEST_CASE("structured failures exit with status two") {
  const clisupport::RunResult r = run_cli("lu --matrix '[[0,1],[1,0]]'");
  CHECK(r.status == 2);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("error") == "SingularMinor");
  CHECK(j.at("index") == 1);
}

TEST_CASE("usage problems exit with status one") {
  CHECK(run_cli("output --n 4").status == 1);                  // missing required option
  CHECK(run_cli("output --pi 'not json' --n 2").status == 1);  // malformed input
  CHECK(run_cli("lu --matrix '[[1,0],[0,1]]' --symbolic").status == 1);
  CHECK(run_cli("no_such_command").status == 1);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("arguments can come from files") {
  const std::string path = "/tmp/prodmat_cli_window.json";
  {
    std::ofstream out(path);
    out << R"({"band":1,"rows":[["1","1"],["1","1","1"],["1","1"]],"size":3})";
  }
  const clisupport::RunResult direct = run_cli(
      "output --pi '{\"band\":1,\"rows\":[[\"1\",\"1\"],[\"1\",\"1\",\"1\"],[\"1\",\"1\"]],"
      "\"size\":3}' --n 4");
  const clisupport::RunResult via_file = run_cli("output --pi @" + path + " --n 4");
  CHECK(via_file.status == 0);
  CHECK(via_file.out == direct.out);
  CHECK(run_cli("output --pi @/tmp/prodmat_missing.json --n 4").status == 1);
}
