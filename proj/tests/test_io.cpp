#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "srlab/io.hpp"

using namespace srlab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_complex_json(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("complex JSON round trip") {
  for (const char* name : {"torus7", "rp2_6", "disk_with_induced_boundary(3)", "cross_polytope(2)"}) {
    RelativeComplex psi = builtin_complex(name);
    CHECK(parse_complex_json(complex_to_json(psi)) == psi);
  }
  RelativeComplex v = parse_complex_json(R"({"vertices":["a"],"facets":[],"void":true})");
  CHECK(v.delta().is_void());
  RelativeComplex e = parse_complex_json(R"({"vertices":[],"facets":[]})");
  CHECK_FALSE(e.delta().is_void());
  CHECK(parse_complex_json(complex_to_json(v)) == v);
}

TEST_CASE("complex JSON errors name the field") {
  CHECK(error_of(R"({"vertices":[1,2],"facets":[[1,3]]})").find("facets[0][1]") != std::string::npos);
  CHECK(error_of(R"({"vertices":[1,2],"facets":[[1,3]]})").find("unknown vertex") != std::string::npos);
  CHECK(error_of(R"({"vertices":[1,1],"facets":[]})").find("duplicate") != std::string::npos);
  CHECK(error_of(R"({"vertices":[1,2,3],"facets":[[1,2]],"gamma_facets":[[2,3]]})").find("gamma_facets") !=
        std::string::npos);
  CHECK(error_of(R"({"vertices":[1,2],"facets":)").find("malformed JSON") != std::string::npos);
  CHECK(error_of(R"({"facets":[]})").find("vertices") != std::string::npos);
  CHECK(error_of(R"({"vertices":[1],"facets":[[1]],"void":true})").find("void") != std::string::npos);
}

TEST_CASE("subdivision JSON") {
  const std::string text = R"({
    "delta": {"vertices": ["a", "m", "b"], "facets": [["a", "m"], ["m", "b"]]},
    "sigma": [
      {"dim": 0, "facets": [["a"]]},
      {"dim": 0, "facets": [["b"]]},
      {"dim": 1, "facets": [["a", "m"], ["m", "b"]], "boundary_facets": [["a"], ["b"]]}
    ]})";
  SubdivisionStructure s = parse_subdivision_json(text);
  CHECK(s.cells.size() == 3);
  CHECK(s.incidence[2] == std::vector<std::size_t>{0, 1});
  std::string bad = text;
  bad.replace(bad.find(R"([["b"]]})"), 8, R"([["q"]]})");
  try {
    parse_subdivision_json(bad);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("sigma[1].facets[0][0]") != std::string::npos);
  }
}

TEST_CASE("report JSON is stable and round trips") {
  PrimeField F;
  RunOptions o;
  o.input_name = "builtin:torus7";
  TheoremReport r = schenzel_report(builtin_complex("torus7"), F, o);
  const std::string a = report_to_json(r);
  CHECK(a == report_to_json(schenzel_report(builtin_complex("torus7"), F, o)));
  CHECK(report_from_json(a) == r);
  CHECK(a.back() == '\n');
  CHECK(a.find("\"diagnostics\"") < a.find("\"input\""));  // keys are sorted
  CHECK(a.find("425ab2d252d6ecfa") != std::string::npos);
  CHECK_THROWS_AS(report_from_json(R"({"theorem":"x"})"), InputError);
}

TEST_CASE("input loading") {
  CHECK(load_input("builtin:torus7").complex.has_value());
  CHECK(load_input("builtin:sd_simplex_2").structure.has_value());
  LoadedInput disk = load_input("builtin:sd_disk_2");
  REQUIRE(disk.complex.has_value());
  CHECK(f_h_vectors(*disk.complex).f == std::vector<std::int64_t>{0, 1, 6, 6});
  CHECK_THROWS_AS(load_input("builtin:nothing"), InputError);
  CHECK_THROWS_AS(load_input("/nonexistent/complex.json"), InputError);
}

TEST_CASE("frozen builtin data files match the builtins") {
  const std::filesystem::path dir = SRLAB_DATA_DIR;
  std::istringstream sums(slurp(dir / "CHECKSUMS"));
  std::string hash, file;
  int count = 0;
  while (sums >> hash >> file) {
    CAPTURE(file);
    const std::string text = slurp(dir / file);
    CHECK(fnv1a_hex(text) == hash);
    const std::string name = file.substr(0, file.size() - 5);  // strip .json
    CHECK(parse_complex_json(text) == builtin_complex(name));
    CHECK(text == complex_to_json(builtin_complex(name)));
    ++count;
  }
  CHECK(count >= 3);
}
