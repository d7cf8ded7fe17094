#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "modlie/cartan.hpp"
#include "modlie/serialization.hpp"

using namespace modlie;

TEST_CASE("round trips are byte-exact across the catalog") {
  std::vector<LieAlgebra> algebras;
  algebras.push_back(build_jacobson_witt(1, 5));
  algebras.push_back(build_jacobson_witt(2, 5));
  algebras.push_back(build_classical(ClassicalType::kSl, 2, 5));
  algebras.push_back(build_classical(ClassicalType::kGl, 2, 7));
  algebras.push_back(build_witt_general(1, {2}, 5));  // no pmap: null branch
  algebras.push_back(build_special_S(2, 5));
  for (const LieAlgebra& L : algebras) {
    std::string s = algebra_to_json(L);
    LieAlgebra L2 = algebra_from_json(s);
    CHECK(L2 == L);
    CHECK(L2.labels == L.labels);
    CHECK(L2.family == L.family);
    CHECK(L2.params == L.params);
    CHECK(L2.has_pmap == L.has_pmap);
    CHECK(algebra_to_json(L2) == s);
  }
}

TEST_CASE("file save and load") {
  namespace fs = std::filesystem;
  LieAlgebra W = build_jacobson_witt(1, 5);
  fs::path path = fs::temp_directory_path() / "modlie_test_w11.json";
  save_algebra_file(W, path.string());
  LieAlgebra L = load_algebra_file(path.string());
  CHECK(L == W);
  std::remove(path.string().c_str());
}

TEST_CASE("validation on load rejects a broken Jacobi identity") {
  LieAlgebra L = build_classical(ClassicalType::kSl, 2, 5);
  // consistent antisymmetry, wrong Jacobi: overwrite [e, f] = e
  L.set_bracket(0, 1, {{0, 1}});
  L.has_pmap = false;  // keep the corruption purely in the brackets
  std::string s = algebra_to_json(L);
  CHECK_THROWS_AS(algebra_from_json(s), std::runtime_error);
  LieAlgebra raw = algebra_from_json(s, false);  // loading without validation works
  CHECK(raw.dim == 3);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(algebra_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(algebra_from_json("{}"), std::runtime_error);
  CHECK_THROWS_AS(algebra_from_json(R"({"p":5,"dim":1,"labels":["a"],"sc":[],"pmap":null})"),
                  std::runtime_error);  // meta missing
  // sc entry with i >= j
  std::string bad = R"({"p":5,"dim":2,"labels":["a","b"],
    "sc":[[1,0,[[0,1]]]],"pmap":null,"meta":{"family":"","params":{}}})";
  CHECK_THROWS_AS(algebra_from_json(bad), std::runtime_error);
  // coefficient out of range
  std::string badc = R"({"p":5,"dim":2,"labels":["a","b"],
    "sc":[[0,1,[[0,7]]]],"pmap":null,"meta":{"family":"","params":{}}})";
  CHECK_THROWS_AS(algebra_from_json(badc), std::runtime_error);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/modlie.json"), std::runtime_error);
}

TEST_CASE("pmap row shape is checked") {
  std::string bad = R"({"p":5,"dim":2,"labels":["a","b"],
    "sc":[],"pmap":[[0,0],[0]],"meta":{"family":"","params":{}}})";
  CHECK_THROWS_AS(algebra_from_json(bad), std::runtime_error);
}
