#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = coquasi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("coquasi_cli_test_" + name);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"taft", "--n", "4"}).code == 0);
  CHECK(run({"taft", "--n", "3"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"classify", "zn", "--n", "2", "--bogus"}).code == 2);
  CHECK(run({"cocycle", "coboundary", "--n", "2", "--s", "1"}).code == 0);
  CHECK(run({"cocycle", "coboundary", "--n", "2", "--s", "1", "--strict"}).code == 1);
  CHECK(run({"cocycle", "coboundary", "--n", "4", "--s", "0", "--strict"}).code == 0);
  CHECK(run({"rform", "enumerate", "--n", "3", "--s", "1", "--strict"}).code == 1);
  CHECK(run({"obstruct", "S3", "--strict"}).code == 1);
  CHECK(run({"obstruct", "2,4", "--strict"}).code == 0);
  CHECK(run({"quiver", "build", "--n", "4", "--ram", "2:1", "--strict"}).code == 1);
  CHECK(run({"classify", "zn", "--n", "4", "--ram", "2:1"}).code == 2);
  CHECK(run({"cocycle", "check", "--n", "3", "--s", "1", "--phi", "x.json"}).code == 2);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", "zn", "--n", "4"},
           {"classify", "zn", "--n", "3", "--jobs", "4"},
           {"rform", "enumerate", "--group", "2,2"},
           {"verify", "--n", "2", "--ram", "1:1", "--max-len", "3"},
           {"classify", "abelian", "--group", "2,2", "--ram", "1,0:1;0,1:1", "--format", "csv"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  auto parallel = run({"classify", "zn", "--n", "4", "--jobs", "3"});
  CHECK(parallel.out == run({"classify", "zn", "--n", "4"}).out);
}

TEST_CASE("--out writes the document to a file") {
  const auto path = temp_file("out.json");
  std::filesystem::remove(path);
  const auto r = run({"cocycle", "check", "--n", "3", "--s", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"cocycle", "check", "--n", "3", "--s", "2"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("table files feed later commands") {
  const auto phi = temp_file("phi.json");
  const auto rform = temp_file("rform.json");
  {
    std::ofstream(phi) << R"({"group": [2], "modulus": 2, "entries": []})";
    std::ofstream(rform) << R"({"group": [2], "modulus": 2, "entries": [{"args": [[1], [1]], "exp": 1}]})";
  }
  auto r = run({"verify", "--phi", phi.string(), "--rform", rform.string(), "--ram", "1:1", "--strict"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"ok\": true") != std::string::npos);
  {
    std::ofstream(rform) << R"({"group": [2], "modulus": 4, "entries": [{"args": [[1], [1]], "exp": 1}]})";
  }
  r = run({"verify", "--phi", phi.string(), "--rform", rform.string(), "--ram", "1:1", "--strict"});
  CHECK(r.code == 1);
  {
    std::ofstream(rform) << "{not json";
  }
  CHECK(run({"verify", "--phi", phi.string(), "--rform", rform.string(), "--ram", "1:1"}).code == 2);
  std::filesystem::remove(phi);
  std::filesystem::remove(rform);
}

TEST_CASE("csv output") {
  const auto r = run({"classify", "zn", "--n", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find(',') != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}
