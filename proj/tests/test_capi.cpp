#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gexp/gexp.h"

TEST_CASE("version and error state") {
  CHECK(std::strlen(gexp_version()) > 0);
  CHECK(gexp_last_error() != nullptr);
}

TEST_CASE("algebra handles") {
  gexp_algebra* a = nullptr;
  REQUIRE(gexp_algebra_sl2(3, &a) == GEXP_OK);
  REQUIRE(a != nullptr);
  uint32_t p = 0, dim = 0;
  CHECK(gexp_algebra_p(a, &p) == GEXP_OK);
  CHECK(p == 3);
  CHECK(gexp_algebra_dim(a, &dim) == GEXP_OK);
  CHECK(dim == 3);
  int alt = 0, jac = 0;
  CHECK(gexp_algebra_validate(a, &alt, &jac) == GEXP_OK);
  CHECK(alt == 1);
  CHECK(jac == 1);
  uint64_t count = 0;
  CHECK(gexp_algebra_subalgebra_count(a, 2, 0, &count) == GEXP_OK);
  CHECK(count == 4);
  gexp_algebra_free(a);

  gexp_algebra* z = nullptr;
  REQUIRE(gexp_algebra_zero(5, 2, &z) == GEXP_OK);
  CHECK(gexp_algebra_dim(z, &dim) == GEXP_OK);
  CHECK(dim == 2);
  gexp_algebra_free(z);

  CHECK(gexp_algebra_sl2(2, &a) == GEXP_INVALID);
  CHECK(std::string(gexp_last_error()).find("odd prime required") != std::string::npos);
}

TEST_CASE("algebra text parsing") {
  const char* text =
      "# three generators, one nonzero bracket\n"
      "p 3\n"
      "dim 3\n"
      "names h x+ x-\n"
      "bracket 0 1 -> 0 2 0\n"
      "bracket 0 2 -> 0 0 -2\n"
      "bracket 1 2 -> 1 0 0\n";
  gexp_algebra* a = nullptr;
  REQUIRE(gexp_algebra_from_text(text, &a) == GEXP_OK);
  int alt = 0, jac = 0;
  CHECK(gexp_algebra_validate(a, &alt, &jac) == GEXP_OK);
  CHECK(alt == 1);
  CHECK(jac == 1);
  gexp_algebra_free(a);

  gexp_algebra* bad = nullptr;
  CHECK(gexp_algebra_from_text("p 3\ndim 2\nbogus 1\n", &bad) == GEXP_INVALID);
  CHECK(bad == nullptr);
  CHECK(std::strlen(gexp_last_error()) > 0);
}

TEST_CASE("group handles and caps") {
  gexp_algebra* a = nullptr;
  REQUIRE(gexp_algebra_sl2(3, &a) == GEXP_OK);
  gexp_group* g = nullptr;
  REQUIRE(gexp_group_build(a, 0, &g) == GEXP_OK);
  uint64_t order = 0, expo = 0, zsize = 0;
  CHECK(gexp_group_order(g, &order) == GEXP_OK);
  CHECK(order == 729);
  CHECK(gexp_group_exponent(g, 2, &expo) == GEXP_OK);
  CHECK(expo == 9);
  CHECK(gexp_group_center_size(g, &zsize) == GEXP_OK);
  CHECK(zsize == 27);
  gexp_group_free(g);

  gexp_group* capped = nullptr;
  CHECK(gexp_group_build(a, 10, &capped) == GEXP_CAP_EXCEEDED);
  CHECK(capped == nullptr);
  gexp_algebra_free(a);
}

TEST_CASE("verification pipeline at the reduced size") {
  gexp_verify_options opt;
  gexp_verify_options_init(&opt);
  CHECK(opt.p == 3);
  CHECK(opt.threads == 1);
  opt.p = 7;
  gexp_report* rep = nullptr;
  REQUIRE(gexp_verify_counterexample(&opt, &rep) == GEXP_OK);
  REQUIRE(rep != nullptr);
  CHECK(gexp_report_passed(rep) == 1);
  size_t n = gexp_report_check_count(rep);
  CHECK(n == 10);
  size_t cited = 0;
  bool cited_is_full_exponent = false;
  for (size_t i = 0; i < n; ++i) {
    REQUIRE(gexp_report_check_id(rep, i) != nullptr);
    std::string status = gexp_report_check_status(rep, i);
    if (status == "cited") {
      ++cited;
      cited_is_full_exponent =
          std::string(gexp_report_check_id(rep, i)) == "full_exponent_cited";
    } else {
      CHECK(status == "pass");
    }
  }
  CHECK(cited == 1);
  CHECK(cited_is_full_exponent);
  CHECK(gexp_report_check_id(rep, n) == nullptr);
  CHECK(std::strlen(gexp_report_text(rep)) > 0);
  CHECK(std::strlen(gexp_report_json(rep)) > 0);
  gexp_report_free(rep);

  opt.p = 4;
  gexp_report* bad = nullptr;
  CHECK(gexp_verify_counterexample(&opt, &bad) == GEXP_INVALID);
  CHECK(bad == nullptr);
  CHECK(std::string(gexp_last_error()).find("odd prime required") != std::string::npos);
}

TEST_CASE("cohomology command") {
  gexp_report* rep = nullptr;
  REQUIRE(gexp_cohomology("cyclic:9", 6, 0, &rep) == GEXP_OK);
  CHECK(gexp_report_passed(rep) == 1);
  std::string j = gexp_report_json(rep);
  CHECK(j.find("\"degrees\"") != std::string::npos);
  CHECK(j.find("Z/9") != std::string::npos);
  gexp_report_free(rep);

  gexp_report* bad = nullptr;
  CHECK(gexp_cohomology("cyclic:0", 4, 0, &bad) == GEXP_INVALID);
  CHECK(gexp_cohomology("nonsense", 4, 0, &bad) == GEXP_INVALID);
}

TEST_CASE("group info and subalgebra commands") {
  gexp_report* rep = nullptr;
  REQUIRE(gexp_group_info("sl2", 3, 1, 0, &rep) == GEXP_OK);
  std::string j = gexp_report_json(rep);
  CHECK(j.find("\"order\": 729") != std::string::npos);
  gexp_report_free(rep);

  rep = nullptr;
  REQUIRE(gexp_subalgebras("sl2", 3, 2, 0, &rep) == GEXP_OK);
  CHECK(std::string(gexp_report_text(rep)).find("4") != std::string::npos);
  gexp_report_free(rep);
}

TEST_CASE("smith normal form command") {
  const char* path = "capi_snf_input.txt";
  {
    std::ofstream out(path);
    out << "# small test matrix\n2 2\n2 4\n6 8\n";
  }
  gexp_report* rep = nullptr;
  REQUIRE(gexp_snf_file(path, 0, &rep) == GEXP_OK);
  std::string j = gexp_report_json(rep);
  CHECK(j.find("\"rank\": 2") != std::string::npos);
  gexp_report_free(rep);
  std::remove(path);

  gexp_report* bad = nullptr;
  CHECK(gexp_snf_file("no_such_file_here.txt", 0, &bad) == GEXP_INVALID);
}

TEST_CASE("null arguments are rejected") {
  CHECK(gexp_algebra_sl2(3, nullptr) == GEXP_INVALID);
  CHECK(gexp_algebra_from_text(nullptr, nullptr) == GEXP_INVALID);
  CHECK(gexp_algebra_p(nullptr, nullptr) == GEXP_INVALID);
  CHECK(gexp_group_build(nullptr, 0, nullptr) == GEXP_INVALID);
  CHECK(gexp_verify_counterexample(nullptr, nullptr) == GEXP_INVALID);
  CHECK(gexp_cohomology(nullptr, 4, 0, nullptr) == GEXP_INVALID);
  CHECK(gexp_snf_file(nullptr, 0, nullptr) == GEXP_INVALID);
  CHECK(gexp_report_text(nullptr) != nullptr);
  CHECK(gexp_report_passed(nullptr) == 0);
  CHECK(gexp_report_check_id(nullptr, 0) == nullptr);
  gexp_report_free(nullptr);
  gexp_algebra_free(nullptr);
  gexp_group_free(nullptr);
}
