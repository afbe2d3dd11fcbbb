#include <algorithm>
#include <string>

#include "doctest.h"
#include "sqfmaps/sqfmaps.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { sqf_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + needle.size())) ++k;
  return k;
}

}  // namespace

TEST_CASE("config handles and argument checks") {
  sqf_config* c = nullptr;
  REQUIRE(sqf_config_new(&c) == SQF_OK);
  CHECK(sqf_config_set_cap(c, 0) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sqf_last_error()).find("cap") != std::string::npos);
  CHECK(sqf_config_set_workers(c, 0) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(sqf_config_set_workers(c, 2) == SQF_OK);
  CHECK(std::string(sqf_last_error()).empty());
  CHECK(sqf_config_set_seed(nullptr, 1) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(sqf_config_new(nullptr) == SQF_ERR_INVALID_ARGUMENT);
  sqf_config_free(c);
  sqf_config_free(nullptr);
  sqf_group_free(nullptr);
  sqf_string_free(nullptr);
  CHECK(std::string(sqf_version()) == "1.0.0");
}

TEST_CASE("generator text to group, with parse errors by line") {
  sqf_group* g = nullptr;
  REQUIRE(sqf_group_from_genfile_text(nullptr, "degree 4\n(0 1 2 3)\n(0 1)\n", &g) == SQF_OK);
  std::size_t order = 0, degree = 0;
  CHECK(sqf_group_order(g, &order) == SQF_OK);
  CHECK(sqf_group_degree(g, &degree) == SQF_OK);
  CHECK(order == 24);
  CHECK(degree == 4);
  Str text, rec;
  REQUIRE(sqf_analyze(nullptr, g, SQF_FORMAT_TEXT, &text.p) == SQF_OK);
  CHECK(text.s().find("regular triple: exists") != std::string::npos);
  REQUIRE(sqf_analyze(nullptr, g, SQF_FORMAT_RECORDS, &rec.p) == SQF_OK);
  CHECK(count(rec.s(), "\n") == 1);
  Str dot;
  CHECK(sqf_analyze(nullptr, g, SQF_FORMAT_DOT, &dot.p) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(dot.p == nullptr);
  sqf_group_free(g);

  sqf_group* bad = nullptr;
  CHECK(sqf_group_from_genfile_text(nullptr, "degree 3\n(0 1)\n# x\n(0 5)\n", &bad) == SQF_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(sqf_last_error_line() == 4);
  CHECK(std::string(sqf_last_error()).rfind("line 4:", 0) == 0);
  CHECK(sqf_group_from_genfile_path(nullptr, "/nonexistent.gen", &bad) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(sqf_last_error_line() == 0);

  sqf_config* c = nullptr;
  REQUIRE(sqf_config_new(&c) == SQF_OK);
  REQUIRE(sqf_config_set_cap(c, 100) == SQF_OK);
  CHECK(sqf_group_from_genfile_text(c, "degree 6\n(0 1 2 3 4 5)\n(0 1)\n", &bad) == SQF_ERR_CAP_EXCEEDED);
  CHECK(std::string(sqf_last_error()).find("group too large for desk-scale enumeration") != std::string::npos);
  sqf_config_free(c);
}

TEST_CASE("family tables through the C interface") {
  const std::size_t ns[] = {5, 13, 17, 29, 37, 41};
  Str t;
  REQUIRE(sqf_family_table(nullptr, "C31", ns, 6, 0, SQF_FORMAT_TEXT, &t.p) == SQF_OK);
  CHECK(t.s() ==
        "5 | -10 | -2.5 | squarefree\n"
        "13 | -130 | -2.5.13 | squarefree\n"
        "17 | -238 | -2.7.17 | squarefree\n"
        "29 | -754 | -2.13.29 | squarefree\n"
        "37 | -1258 | -2.17.37 | squarefree\n"
        "41 | -1558 | -2.19.41 | squarefree\n");
  const std::size_t three[] = {3};
  Str r3;
  REQUIRE(sqf_family_table(nullptr, "C31", three, 1, 0, SQF_FORMAT_TEXT, &r3.p) == SQF_OK);
  CHECK(r3.s() == "3 | 0 | 0 | not-squarefree\n");
  Str filtered;
  REQUIRE(sqf_family_table(nullptr, "C31", three, 1, 1, SQF_FORMAT_TEXT, &filtered.p) == SQF_OK);
  CHECK(filtered.s().empty());
  const std::size_t even[] = {4};
  Str e;
  CHECK(sqf_family_table(nullptr, "C31", even, 1, 0, SQF_FORMAT_TEXT, &e.p) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sqf_last_error()).find("n must be odd") != std::string::npos);
  CHECK(sqf_family_table(nullptr, "C99", three, 1, 0, SQF_FORMAT_TEXT, &e.p) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(sqf_family_check("C34", 9) == SQF_OK);
  CHECK(sqf_family_check("C33", 1) == SQF_ERR_INVALID_ARGUMENT);
  sqf_config* c = nullptr;
  REQUIRE(sqf_config_new(&c) == SQF_OK);
  REQUIRE(sqf_config_set_cap(c, 1000) == SQF_OK);
  const std::size_t big[] = {41};
  CHECK(sqf_family_table(c, "C34", big, 1, 0, SQF_FORMAT_RECORDS, &e.p) == SQF_ERR_CAP_EXCEEDED);
  CHECK(sqf_map(c, "C34", 41, SQF_FORMAT_TEXT, &e.p) == SQF_ERR_CAP_EXCEEDED);
  sqf_config_free(c);
}

TEST_CASE("maps through the C interface") {
  Str t;
  REQUIRE(sqf_map(nullptr, "C31", 5, SQF_FORMAT_TEXT, &t.p) == SQF_OK);
  CHECK(t.s().find("vertices: 5\nedges: 25\nfaces: 10\n") != std::string::npos);
  Str d;
  REQUIRE(sqf_map(nullptr, "C34", 5, SQF_FORMAT_DOT, &d.p) == SQF_OK);
  const auto dot = d.s();
  CHECK(dot.find("chi=-15 (-3.5)") != std::string::npos);
  CHECK(count(dot, " -- ") == 50);
  // 25 vertices, each on exactly 4 edge lines.
  for (int v = 0; v < 25; ++v) {
    const std::string id = "v" + std::to_string(v);
    CHECK(count(dot, "-- " + id + ";\n") + count(dot, "  " + id + " --") == 4);
  }
  Str r;
  REQUIRE(sqf_map(nullptr, "C33", 2, SQF_FORMAT_RECORDS, &r.p) == SQF_OK);
  CHECK(r.s().find("\"graph\":\"C2^(2)\"") != std::string::npos);
  Str bad;
  CHECK(sqf_map(nullptr, "C31", 4, SQF_FORMAT_TEXT, &bad.p) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sqf_last_error()) == "n must be odd");
}

TEST_CASE("verification through the C interface") {
  REQUIRE(sqf_claim_count() == 10);
  CHECK(std::string(sqf_claim_id(0)) == "lemma-2.4");
  CHECK(sqf_claim_id(10) == nullptr);
  Str out;
  int refuted = -1;
  REQUIRE(sqf_verify(nullptr, "lemma-6.3", 3, SQF_FORMAT_TEXT, &out.p, &refuted) == SQF_OK);
  CHECK(refuted == 0);
  CHECK(out.s().rfind("lemma-6.3: confirmed\n", 0) == 0);
  CHECK(out.s().find("summary: 1 claim, 1 confirmed, 0 refuted, 0 skipped\n") != std::string::npos);
  Str again;
  REQUIRE(sqf_verify(nullptr, "lemma-6.3", 3, SQF_FORMAT_TEXT, &again.p, nullptr) == SQF_OK);
  CHECK(out.s() == again.s());
  Str rec;
  REQUIRE(sqf_verify(nullptr, "lemma-6.2", 2, SQF_FORMAT_RECORDS, &rec.p, &refuted) == SQF_OK);
  CHECK(count(rec.s(), "\n") == 2);
  Str bad;
  CHECK(sqf_verify(nullptr, "lemma-9.9", 2, SQF_FORMAT_TEXT, &bad.p, &refuted) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(sqf_verify(nullptr, "lemma-6.3", 0, SQF_FORMAT_TEXT, &bad.p, &refuted) == SQF_ERR_INVALID_ARGUMENT);
  CHECK(sqf_verify(nullptr, nullptr, 2, SQF_FORMAT_TEXT, &bad.p, &refuted) == SQF_ERR_INVALID_ARGUMENT);
}
