#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "chainmail/capi.h"

namespace {

const char* kDexJson =
    R"({"vertices":[{"id":"v1","weight":-5},{"id":"v2","weight":0},{"id":"v3","weight":0},)"
    R"({"id":"v4","weight":-4}],"edges":[{"u":"v1","v":"v2","sign":1},)"
    R"({"u":"v1","v":"v3","sign":1},{"u":"v1","v":"v3","sign":1},{"u":"v1","v":"v3","sign":1},)"
    R"({"u":"v2","v":"v4","sign":1},{"u":"v3","v":"v4","sign":1}]})";

struct Graph {
  cm_graph* g = nullptr;
  ~Graph() { cm_graph_free(g); }
};

struct Str {
  char* s = nullptr;
  ~Str() { cm_string_free(s); }
  std::string view() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("version string") {
  REQUIRE(cm_version() != nullptr);
  CHECK(std::strlen(cm_version()) > 0);
}

TEST_CASE("parse and serialize round-trip") {
  Graph g;
  REQUIRE(cm_graph_parse(kDexJson, &g.g) == CM_OK);
  Str out;
  REQUIRE(cm_graph_serialize(g.g, &out.s) == CM_OK);
  CHECK(out.view() == kDexJson);
}

TEST_CASE("parse failures set the error code and message") {
  cm_graph* g = nullptr;
  CHECK(cm_graph_parse("not json", &g) == CM_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::strlen(cm_last_error()) > 0);

  CHECK(cm_graph_parse(
            R"({"vertices":[{"id":"v1","weight":0}],"edges":[{"u":"v1","v":"v1","sign":1}]})",
            &g) == CM_ERR_INVALID);
  CHECK(g == nullptr);
  std::string msg = cm_last_error();
  CHECK(msg.find("self-loop") != std::string::npos);

  CHECK(cm_graph_parse(nullptr, &g) == CM_ERR_ARG);
  CHECK(cm_graph_parse(kDexJson, nullptr) == CM_ERR_ARG);
}

TEST_CASE("analyze through the c api") {
  Graph g;
  REQUIRE(cm_graph_parse(kDexJson, &g.g) == CM_OK);
  Str rep;
  REQUIRE(cm_analyze_report(g.g, &rep.s) == CM_OK);
  std::string text = rep.view();
  CHECK(text.find("chainmail report v1: analyze\n") == 0);
  CHECK(text.find("spin-structures: 2\n") != std::string::npos);
  CHECK(text.find("det: 4\n") != std::string::npos);

  CHECK(cm_analyze_report(nullptr, &rep.s) == CM_ERR_ARG);
  CHECK(cm_analyze_report(g.g, nullptr) == CM_ERR_ARG);
}

TEST_CASE("family and certificate through the c api") {
  Graph g;
  REQUIRE(cm_graph_parse(kDexJson, &g.g) == CM_OK);

  Str rep;
  int all_pass = 0;
  REQUIRE(cm_family_report(g.g, "v1", 10, &rep.s, &all_pass) == CM_OK);
  CHECK(all_pass == 1);
  CHECK(rep.view().find("result: pass") != std::string::npos);

  Str rep2;
  int all_pass2 = 1;
  REQUIRE(cm_family_report(g.g, "v2", 10, &rep2.s, &all_pass2) == CM_OK);
  CHECK(all_pass2 == 0);

  Str cert, n;
  REQUIRE(cm_obstruction_certificate(g.g, "v1", &cert.s, &n.s) == CM_OK);
  CHECK(n.view() == "25");
  CHECK(cert.view().find("chainmail certificate v1\n") == 0);
  CHECK(cert.view().find("N: 25\n") != std::string::npos);

  Str cert2, n2;
  CHECK(cm_obstruction_certificate(g.g, "v2", &cert2.s, &n2.s) == CM_ERR_MATH);
  CHECK(cm_obstruction_certificate(g.g, "vx", &cert2.s, &n2.s) == CM_ERR_ARG);
  CHECK(cm_family_report(g.g, nullptr, 10, &rep2.s, &all_pass2) == CM_ERR_ARG);
}

TEST_CASE("tait through the c api") {
  Str rep, tait, reduced;
  REQUIRE(cm_tait_report("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", 0, nullptr, &rep.s, &tait.s,
                         &reduced.s) == CM_OK);
  CHECK(rep.view().find("homology-order: 3\n") != std::string::npos);
  CHECK(tait.view().find("\"w1\"") != std::string::npos);

  Graph back;
  REQUIRE(cm_graph_parse(reduced.s, &back.g) == CM_OK);

  Str rep2;
  CHECK(cm_tait_report("X[1,1,2,2]", 1, nullptr, &rep2.s, nullptr, nullptr) == CM_ERR_MATH);
  CHECK(cm_tait_report("X[1,2,3]", 0, nullptr, &rep2.s, nullptr, nullptr) == CM_ERR_PARSE);
  CHECK(cm_tait_report("X[1,2,3,4]", 0, nullptr, &rep2.s, nullptr, nullptr) == CM_ERR_INVALID);
  CHECK(cm_tait_report(nullptr, 0, nullptr, &rep2.s, nullptr, nullptr) == CM_ERR_ARG);
}

TEST_CASE("pi1 through the c api") {
  Graph g;
  REQUIRE(cm_graph_parse(kDexJson, &g.g) == CM_OK);
  Str rep;
  int all_valid = 0;
  REQUIRE(cm_pi1_report(g.g, "x3", nullptr, 0, 0, &rep.s, &all_valid) == CM_OK);
  CHECK(all_valid == 1);
  CHECK(rep.view().find("result: valid") != std::string::npos);

  Str rep2;
  int all_valid2 = 0;
  REQUIRE(cm_pi1_report(g.g, "x3", "v1", 0, 2, &rep2.s, &all_valid2) == CM_OK);
  CHECK(all_valid2 == 1);
  CHECK(rep2.view().find("n-range: 0..2") != std::string::npos);

  Str rep3;
  CHECK(cm_pi1_report(g.g, "zz", nullptr, 0, 0, &rep3.s, &all_valid2) == CM_ERR_ARG);
}

TEST_CASE("prospect through the c api") {
  Str rep;
  int partial = 1;
  REQUIRE(cm_prospect_report(3, -2, 0, 2, 1000000, &rep.s, &partial) == CM_OK);
  CHECK(partial == 0);
  CHECK(rep.view().find("chainmail report v1: prospect\n") == 0);

  Str rep2;
  CHECK(cm_prospect_report(99, -2, 0, 2, 1000000, &rep2.s, &partial) == CM_ERR_ARG);
}

TEST_CASE("string free tolerates null") {
  cm_string_free(nullptr);
  cm_graph_free(nullptr);
}
