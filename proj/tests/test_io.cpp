#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duocat/io.hpp"

using namespace duocat;
using io::json;

TEST_CASE("matrix round-trip and validation") {
  Matrix m(2, 3);
  m(0, 0) = Rational(1) / Rational(3);
  m(1, 2) = -7;
  json j = io::to_json(m);
  CHECK(io::matrix_from_json(j) == m);
  CHECK(j["entries"][0] == "1/3");
  CHECK(j["entries"][5] == "-7");

  json bad = j;
  bad["entries"].erase(5);
  CHECK_THROWS_WITH_AS(io::matrix_from_json(bad),
                       "matrix entry count mismatch", Error);
  bad = j;
  bad["entries"][0] = "2/0";
  CHECK_THROWS_AS(io::matrix_from_json(bad), Error);
  bad = j;
  bad["extra"] = 1;
  CHECK_THROWS_WITH_AS(io::matrix_from_json(bad), "unknown field: extra",
                       Error);
}

TEST_CASE("graded object and map documents") {
  GradedObject v(3, {1, 2, 0, 1});
  json jv = io::to_json(v);
  CHECK(io::document_kind(jv) == "graded-object");
  CHECK(io::graded_object_from_json(jv) == v);

  GradedMap f = graded_identity(v);
  f.components[1](0, 1) = Rational(5) / Rational(2);
  json jf = io::to_json(f);
  CHECK(io::document_kind(jf) == "graded-map");
  CHECK(maps_equal(io::graded_map_from_json(jf), f));

  json bad = jv;
  bad["schema"] = 2;
  CHECK_THROWS_WITH_AS(io::graded_object_from_json(bad),
                       "unsupported schema version", Error);
}

TEST_CASE("every library example round-trips canonically") {
  for (const std::string& name : example_library_names()) {
    int N = name == "end2" ? 2 : 3;
    Structured s = example_library(name, N);
    json j = io::to_json(s);
    std::string tag = io::document_kind(j);
    CHECK((tag == "monoid" || tag == "comonoid" || tag == "operad" ||
           tag == "cooperad"));
    Structured back = io::structured_from_json(j);
    CHECK(back.kind == s.kind);
    CHECK(back.carrier == s.carrier);
    CHECK(back.comps == s.comps);
    CHECK(back.unit == s.unit);
    // canonical dump is a fixed point of load-then-save
    CHECK(io::canonical_dump(io::to_json(back)) == io::canonical_dump(j));
    CHECK(check_structure(back).ok());
  }
}

TEST_CASE("species documents carry actions") {
  Structured com = example_library("com", 3);
  json j = io::to_json(com);
  CHECK(io::document_kind(j) == "operad");
  REQUIRE(j.contains("actions"));
  Structured back = io::structured_from_json(j);
  CHECK(kind_is_species(back.kind));
  CHECK(check_structure(back).ok());
  CHECK(io::canonical_dump(io::to_json(back)) == io::canonical_dump(j));

  json missing = j;
  missing.erase("actions");
  CHECK_THROWS_WITH_AS(io::structured_from_json(missing),
                       "species kind needs actions", Error);

  // a plain graded structure may not carry actions
  json plain = io::to_json(example_library("poly", 3));
  plain["actions"] = json::array();
  CHECK_THROWS_WITH_AS(io::structured_from_json(plain),
                       "unknown field: actions", Error);
}

TEST_CASE("measuring documents") {
  Structured c = example_library("grouplike2", 2);
  Structured a = example_library("poly3-deg0", 2);
  GradedObject ca = hadamard(c.carrier, a.carrier);
  std::vector<Matrix> pc;
  for (int n = 0; n <= 2; ++n) {
    Matrix m(a.carrier.dim(n), ca.dim(n));
    if (n == 0)
      for (int j = 0; j < 3; ++j) {
        m(j, j) = 1;
        m(j, 3 + j) = (j == 1 ? -1 : 1);
      }
    pc.push_back(std::move(m));
  }
  MeasuringCandidate mc{PairTag::HadamardOverCauchy, c, a, a,
                        GradedMap(ca, a.carrier, std::move(pc))};
  json j = io::to_json(mc);
  CHECK(io::document_kind(j) == "measuring");
  MeasuringCandidate back = io::measuring_from_json(j);
  CHECK(back.pair == mc.pair);
  CHECK(maps_equal(back.phi, mc.phi));
  CHECK(check_measuring(back).ok());
  CHECK(io::canonical_dump(io::to_json(back)) == io::canonical_dump(j));
}

TEST_CASE("file i/o and parse failures") {
  std::string path = "/tmp/duocat_io_test.json";
  GradedObject v(2, {1, 0, 2});
  io::save_document(io::to_json(v), path);
  json j = io::load_document(path);
  CHECK(io::graded_object_from_json(j) == v);

  CHECK_THROWS_WITH_AS(io::load_document("/tmp/does_not_exist.json"),
                       "cannot open /tmp/does_not_exist.json", Error);

  std::string badpath = "/tmp/duocat_io_bad.json";
  {
    std::ofstream out(badpath);
    out << "{ not json";
  }
  CHECK_THROWS_AS(io::load_document(badpath), Error);

  json nokind;
  nokind["schema"] = 1;
  CHECK_THROWS_WITH_AS(io::document_kind(nokind), "document has no kind",
                       Error);
}
