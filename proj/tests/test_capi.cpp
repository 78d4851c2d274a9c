#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "flatpart.h"

namespace {

// Run a C-API call expected to succeed and return its string result.
template <typename Fn>
std::string ok(Fn&& fn) {
  char* out = nullptr;
  const fp_status st = fn(&out);
  REQUIRE_MESSAGE(st == FP_OK, fp_last_error());
  REQUIRE(out != nullptr);
  std::string result(out);
  fp_string_free(out);
  return result;
}

} // namespace

TEST_CASE("counts and formulas") {
  CHECK(ok([](char** o) { return fp_count_avoiders(4, "231", 1, o); }) == "14");
  CHECK(ok([](char** o) { return fp_count_avoiders(7, "321", 4, o); }) ==
        ok([](char** o) { return fp_count_formula(7, "321", o); }));
  CHECK(ok([](char** o) { return fp_count_formula(11, "213", o); }) == "10946");
  CHECK(ok([](char** o) { return fp_count_refined(4, 1, "231", "m-size", o); }) == "6");
  CHECK(ok([](char** o) { return fp_refined_formula(4, 3, "231", o); }) == "8");
  CHECK(ok([](char** o) { return fp_u_value(4, 2, o); }) == "4");
}

TEST_CASE("error reporting") {
  char* out = nullptr;
  CHECK(fp_count_avoiders(4, "999", 1, &out) == FP_ERROR_PARSE);
  CHECK(std::string(fp_last_error()).find("999") != std::string::npos);
  CHECK(fp_count_avoiders(0, "231", 1, &out) == FP_ERROR_DOMAIN);
  CHECK(fp_count_refined(4, 1, "231", "bogus", &out) == FP_ERROR_PARSE);
  CHECK(fp_bijection("partition-to-cseq", nullptr, "1,2/3,4/5", &out) ==
        FP_ERROR_DOMAIN);
  CHECK(fp_verify_at("bogus", 3, nullptr) == FP_ERROR_PARSE);
}

TEST_CASE("verification") {
  int holds = 0;
  REQUIRE(fp_verify_at("touchard", 30, &holds) == FP_OK);
  CHECK(holds == 1);
  REQUIRE(fp_verify_at("identity5", 30, &holds) == FP_OK);
  CHECK(holds == 1);
  REQUIRE(fp_verify_at("u-closed-form", 25, &holds) == FP_OK);
  CHECK(holds == 1);
  REQUIRE(fp_verify_at("chain-inclusion", 7, &holds) == FP_OK);
  CHECK(holds == 1);
}

TEST_CASE("partition helpers") {
  CHECK(ok([](char** o) { return fp_flatten("136-279-4-58", o); }) ==
        "1,3,6,2,7,9,4,5,8");
  CHECK(ok([](char** o) { return fp_statistic_m("1-24-37-568", o); }) == "{2,6,8}");
}

TEST_CASE("bijections round trip through text") {
  const std::string c = "1,2,4,5,7,12,13,15";
  const std::string p =
      ok([&](char** o) { return fp_bijection("cseq-to-partition", nullptr, c.c_str(), o); });
  CHECK(p == "1,13/2,12/3,5/4,11/6,8/7,10/9,19/14,16/15,18/17");
  CHECK(ok([&](char** o) {
          return fp_bijection("partition-to-cseq", nullptr, p.c_str(), o);
        }) == c);

  const std::string kl = ok([](char** o) {
    return fp_bijection("kl-decompose", "231", "1-24-37-568", o);
  });
  CHECK(kl == "K={2,6,8} L={2} inner=1,3/2,5/4");
  CHECK(ok([&](char** o) {
          return fp_bijection("kl-compose", "231", kl.c_str(), o);
        }) == "1/2,4/3,7/5,6,8");

  const std::string d = ok([](char** o) {
    return fp_bijection("u321-to-dyck", nullptr, "1,3/2", o);
  });
  CHECK(d == "UUDD");
  CHECK(ok([&](char** o) {
          return fp_bijection("dyck-to-u321", nullptr, d.c_str(), o);
        }) == "1,3/2");
}

TEST_CASE("enumeration stream") {
  fp_enum* e = fp_enum_new(3, nullptr);
  REQUIRE(e != nullptr);
  int lines = 0;
  while (true) {
    char* out = nullptr;
    REQUIRE(fp_enum_next(e, &out) == FP_OK);
    if (!out)
      break;
    ++lines;
    fp_string_free(out);
  }
  fp_enum_free(e);
  CHECK(lines == 5);

  fp_enum* filtered = fp_enum_new(3, "123");
  REQUIRE(filtered != nullptr);
  char* out = nullptr;
  REQUIRE(fp_enum_next(filtered, &out) == FP_OK);
  REQUIRE(out != nullptr);
  CHECK(std::string(out) == "1,3/2");
  fp_string_free(out);
  REQUIRE(fp_enum_next(filtered, &out) == FP_OK);
  CHECK(out == nullptr);
  fp_enum_free(filtered);

  CHECK(fp_enum_new(0, nullptr) == nullptr);
}
