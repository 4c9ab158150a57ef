#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "json.hpp"
#include "orbicheck/cli.hpp"

using orbicheck::cli::run;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("orbicheck_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string first_line(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

const std::string cp2 = fixtures::data_path("cp2.tri");
const std::string cox = fixtures::data_path("lanner_343.cox");

}  // namespace

TEST_CASE("homology subcommand") {
  auto r = invoke({"homology", cp2});
  CHECK(r.status == 0);
  CHECK(r.out.find("H_0 = Z\nH_1 = 0\nH_2 = Z\nH_3 = 0\nH_4 = Z\n") != std::string::npos);
}

TEST_CASE("validate, manifold and pi1 subcommands") {
  auto v = invoke({"validate", cp2});
  CHECK(v.status == 0);
  CHECK(v.out.find("diagnostics: 0") != std::string::npos);

  auto m = invoke({"manifold", cp2});
  CHECK(m.status == 0);
  CHECK(m.out.find("f-vector: 10 51 134 150 60") != std::string::npos);
  CHECK(m.out.find("manifold: closed PL 4-manifold") != std::string::npos);

  auto p = invoke({"pi1", cp2, "--passes", "100"});
  CHECK(p.status == 0);
  CHECK(p.out.find("presentation: 42 generators, 134 relators") != std::string::npos);
  CHECK(p.out.find("pi1: trivial") != std::string::npos);
}

TEST_CASE("full orbifold run") {
  auto r = invoke({"orbifold", cp2, "--coxeter", cox});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("locus components: 4") != std::string::npos);
  CHECK(r.out.find("[B] = 1 x generator") != std::string::npos);

  auto again = invoke({"orbifold", cp2, "--coxeter", cox});
  CHECK(again.out == r.out);

  auto j = invoke({"orbifold", cp2, "--coxeter", cox, "--json"});
  CHECK(j.status == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["format_version"] == orbicheck::cli::kFormatVersion);
  CHECK(doc["passed"] == true);
  CHECK(doc["manifold"]["f_vector"] == nlohmann::json({10, 51, 134, 150, 60}));
  CHECK(doc["orbifold"]["components"].size() == 4);
  CHECK(doc["orbifold"]["triangles"].size() == 134);
  CHECK(doc["orbifold"]["vertices"].size() == 10);
  CHECK(doc["failures"].empty());
}

TEST_CASE("failing checks exit with 1") {
  auto dir = scratch_dir("broken");
  std::filesystem::create_directories(dir);
  std::ifstream in(cp2);
  std::stringstream text;
  text << in.rdbuf();
  std::string s = text.str();
  // Redirect the first gluing to a different partner.
  auto pos = s.find("glue 0 (0 1 2 3) 1");
  REQUIRE(pos != std::string::npos);
  s.replace(pos, 18, "glue 0 (0 1 2 3) 2");
  auto broken = (dir / "broken.tri").string();
  std::ofstream(broken) << s;

  auto r = invoke({"validate", broken});
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL:") != std::string::npos);

  auto j = invoke({"validate", broken, "--json"});
  CHECK(j.status == 1);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["passed"] == false);
  CHECK_FALSE(doc["validate"]["diagnostics"].empty());

  auto o = invoke({"orbifold", broken, "--coxeter", cox});
  CHECK(o.status == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("input errors exit with 2") {
  CHECK(invoke({"homology", "/nonexistent/file.tri"}).status == 2);
  CHECK(invoke({"homology", cp2, "--tol", "-1"}).status == 2);
  CHECK(invoke({"pi1", cp2, "--passes", "0"}).status == 2);
  CHECK(invoke({"orbifold", cp2}).status == 2);
  CHECK(invoke({"frobnicate", cp2}).status == 2);
  CHECK(invoke({}).status == 2);

  auto dir = scratch_dir("parse");
  std::filesystem::create_directories(dir);
  auto bad = (dir / "bad.tri").string();
  std::ofstream(bad) << "dim 4\nsimplices 2\nglue 0 (0 1 2 2) 1\n";
  auto r = invoke({"validate", bad});
  CHECK(r.status == 2);
  CHECK(r.err.find("line 3") != std::string::npos);

  auto badcox = (dir / "bad.cox").string();
  std::ofstream(badcox) << "rank 3\nm 0 1 3\n";
  CHECK(invoke({"orbifold", cp2, "--coxeter", badcox}).status == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("export-chain") {
  auto dir = scratch_dir("export") / "nested";
  auto r = invoke({"export-chain", cp2, "--out", dir.string()});
  CHECK(r.status == 0);
  CHECK(first_line(dir / "boundary_1.txt") == "10 51");
  CHECK(first_line(dir / "boundary_2.txt") == "51 134");
  CHECK(first_line(dir / "boundary_3.txt") == "134 150");
  CHECK(first_line(dir / "boundary_4.txt") == "150 60");

  auto dbl_dir = scratch_dir("export_double");
  std::filesystem::create_directories(dbl_dir);
  auto dbl = (dbl_dir / "double.tri").string();
  std::ofstream(dbl) << orbicheck::format_complex(fixtures::double_simplex());
  auto out = dbl_dir / "chains";
  CHECK(invoke({"export-chain", dbl, "--out", out.string()}).status == 0);
  CHECK(first_line(out / "boundary_1.txt") == "5 10");
  CHECK(first_line(out / "boundary_2.txt") == "10 10");
  CHECK(first_line(out / "boundary_3.txt") == "10 5");
  CHECK(first_line(out / "boundary_4.txt") == "5 2");

  // A regular file in the way of the destination.
  auto blocked = dbl_dir / "blocked";
  std::ofstream(blocked) << "x";
  CHECK(invoke({"export-chain", dbl, "--out", (blocked / "sub").string()}).status == 2);

  std::filesystem::remove_all(dir.parent_path());
  std::filesystem::remove_all(dbl_dir);
}
