#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tvq/cli.hpp"
#include "tvq/cyclotomic.hpp"
#include "tvq/error.hpp"
#include "tvq/report_format.hpp"

using namespace tvq;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tvq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tvq_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(0.5, 3) == "0.500");
  CHECK(format_decimal(0.125, 2) == "0.13");
  CHECK(format_decimal(-0.125, 2) == "-0.13");
  CHECK(format_decimal(-0.0001, 3) == "0.000");
  CHECK(format_decimal(-0.0, 3) == "0.000");
  CHECK(format_decimal(-1.4142, 3) == "-1.414");
  CHECK(format_decimal(2.0, 0) == "2");
}

TEST_CASE("r ranges") {
  RunConfig c;
  parse_r_range("3:7", c);
  CHECK(c.r_min == 3);
  CHECK(c.r_max == 7);
  parse_r_range("5:5", c);
  CHECK(c.r_min == 5);
  CHECK_THROWS_AS(parse_r_range("7:3", c), InvalidArgument);
  CHECK_THROWS_AS(parse_r_range("2:4", c), InvalidArgument);
  CHECK_THROWS_AS(parse_r_range("x", c), InvalidArgument);
}

TEST_CASE("default workers") {
  setenv("TVQ_WORKERS", "3", 1);
  CHECK(default_workers() == 3);
  unsetenv("TVQ_WORKERS");
  CHECK(default_workers() >= 1);
}

TEST_CASE("compute") {
  const auto s3 = run({"compute", "--manifold", "S3", "--r", "3"});
  CHECK(s3.code == kExitOk);
  CHECK(s3.out.find("0.500") != std::string::npos);
  CHECK(s3.out.find("=1.000") != std::string::npos);

  const auto rp3 = run({"compute", "--manifold", "RP3", "--r", "6"});
  CHECK(rp3.code == kExitOk);
  CHECK(rp3.out.find("2q^3-4q") != std::string::npos);
  CHECK(rp3.out.find("=-3.464") != std::string::npos);

  const auto l52 = run({"compute", "--manifold", "L(5,2)", "--r", "5", "--format", "csv"});
  REQUIRE(lines(l52.out).size() == 2);
  CHECK(lines(l52.out)[0] == csv_header());
  CHECK(lines(l52.out)[1].rfind("\"L(5,2)\",5,0,0.000,0,0.000,0,0.000,", 0) == 0);

  const auto l61 = run({"compute", "--manifold", "L(6,1)", "--r", "4", "--format", "csv"});
  REQUIRE(lines(l61.out).size() == 2);
  CHECK(lines(l61.out)[1].find("-q^3+q,1.414") != std::string::npos);

  const auto file = run({"compute", "--input", TVQ_DATA_DIR "/l7_2-bipyramid.tri", "--r-range", "3:5", "--format",
                         "csv", "--workers", "2"});
  CHECK(file.code == kExitOk);
  CHECK(lines(file.out).size() == 4);

  const auto digits = run({"compute", "--manifold", "S3", "--r", "3", "--digits", "5"});
  CHECK(digits.out.find("0.50000") != std::string::npos);
}

TEST_CASE("json output") {
  const auto res = run({"compute", "--manifold", "RP3", "--r-range", "3:7", "--format", "json"});
  REQUIRE(res.code == kExitOk);
  const auto ls = lines(res.out);
  REQUIRE(ls.size() == 5);
  for (const auto& l : ls) {
    const auto j = nlohmann::json::parse(l);
    CHECK(j["manifold"] == "RP3");
    const int r = j["r"];
    for (const char* name : {"TV_0", "TV_1", "TV_2", "TV", "TV*"}) {
      const auto& inv = j["invariants"][name];
      REQUIRE(inv["poly"].is_array());
      QPolynomial p{r, {}};
      for (const auto& c : inv["poly"]) p.coeffs.emplace_back(mpz_class(c[0].get<std::string>()), mpz_class(c[1].get<std::string>()));
      CHECK(std::abs(eval_numeric(p, r).real() - inv["value_re"].get<double>()) < 1e-9);
      CHECK(p.to_string() == inv["text"].get<std::string>());
    }
    CHECK(j["checks"]["sum_of_summands"] == true);
    CHECK(j["colorings"]["adm0"].get<int>() >= 1);
  }
}

TEST_CASE("tables") {
  const auto a = run({"tables", "--workers", "1"});
  const auto b = run({"tables", "--workers", "8"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("fixture required") != std::string::npos);
  CHECK(a.out.find("MISMATCH") == std::string::npos);
  CHECK(a.out.find("flag") != std::string::npos);

  const auto j = run({"tables", "--r", "3", "--format", "json"});
  CHECK(j.code == kExitOk);
  int reports = 0, gaps = 0;
  for (const auto& l : lines(j.out)) {
    const auto obj = nlohmann::json::parse(l);
    if (obj.contains("invariants")) {
      ++reports;
    } else {
      CHECK(obj["status"] == "fixture required");
      ++gaps;
    }
  }
  CHECK(gaps == 2);
  CHECK(reports >= 15);
}

TEST_CASE("verify") {
  const auto s3 = run({"verify", "--manifold", "S3", "--r-range", "3:7"});
  CHECK(s3.code == kExitOk);
  CHECK(s3.out.find(" 0 failed") != std::string::npos);
  const auto l31 = run({"verify", "--manifold", "L(3,1)", "--r-range", "3:7"});
  CHECK(l31.code == kExitOk);
  CHECK(l31.out.find("FLAG") != std::string::npos);
}

TEST_CASE("catalog listing") {
  const auto res = run({"catalog"});
  CHECK(res.code == kExitOk);
  const auto ls = lines(res.out);
  std::vector<std::string> names;
  for (std::size_t k = 1; k < ls.size() && ls[k].find("fixture required") == std::string::npos; ++k)
    names.push_back(ls[k].substr(0, ls[k].find(' ')));
  CHECK(names.size() == 15);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(std::find(names.begin(), names.end(), "S3") != names.end());
  CHECK(res.out.find("Z/3") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"compute", "--manifold", "L(99,1)", "--r", "3"}).code == kExitValidation);
  const auto open = temp_file("open.tri", "tetrahedra 2\nglue 0 0 1 0123\nglue 1 0 0 0123\n");
  const auto nc = run({"compute", "--input", open, "--r", "3"});
  CHECK(nc.code == kExitValidation);
  CHECK_FALSE(nc.err.empty());
  const auto bad = temp_file("bad.tri", "tetrahedra 2\nglue 0 0 1 01x3\n");
  const auto pe = run({"compute", "--input", bad, "--r", "3"});
  CHECK(pe.code == kExitValidation);
  CHECK(pe.err.find("line 2") != std::string::npos);
  CHECK(run({"compute", "--input", "/nonexistent/x.tri", "--r", "3"}).code == kExitValidation);
  CHECK(run({"compute", "--manifold", "S3", "--r", "2"}).code == kExitValidation);
  CHECK(run({"compute", "--manifold", "S3", "--r", "3", "--r-range", "3:4"}).code == kExitValidation);
  CHECK(run({"compute", "--manifold", "S3", "--r", "3", "--format", "xml"}).code == kExitValidation);
  CHECK(run({"nonsense"}).code == kExitValidation);
}
