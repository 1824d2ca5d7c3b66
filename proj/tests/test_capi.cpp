#include <doctest.h>

#include <string>

#include "blockhh/blockhh.h"

TEST_CASE("status strings and version") {
  CHECK(std::string(bhh_status_string(BHH_OK)) == "ok");
  CHECK(std::string(bhh_version()) == "0.1.0");
  CHECK(bhh_is_prime(7) == 1);
  CHECK(bhh_is_prime(9) == 0);
  CHECK(bhh_is_prime(1) == 0);
}

TEST_CASE("series handles") {
  bhh_series* s = nullptr;
  REQUIRE(bhh_series_new(BHH_SERIES_P, 0, 101, 0, &s) == BHH_OK);
  CHECK(bhh_series_order(s) == 101);
  const char* c = nullptr;
  REQUIRE(bhh_series_coeff(s, 100, &c) == BHH_OK);
  CHECK(std::string(c) == "190569292");
  CHECK(bhh_series_coeff(s, 101, &c) == BHH_E_INVALID_ARGUMENT);
  bhh_series_free(s);

  REQUIRE(bhh_series_new(BHH_SERIES_Y, 2, 4, 0, &s) == BHH_OK);
  REQUIRE(bhh_series_coeff(s, 3, &c) == BHH_OK);
  CHECK(std::string(c) == "16");
  bhh_series_free(s);

  REQUIRE(bhh_series_new(BHH_SERIES_CS, 3, 5, 1, &s) == BHH_OK);
  REQUIRE(bhh_series_coeff(s, 1, &c) == BHH_OK);
  CHECK(std::string(c) == "2");  // c(4) for p = 3
  bhh_series_free(s);

  s = nullptr;
  CHECK(bhh_series_new(BHH_SERIES_Z, 4, 5, 0, &s) == BHH_E_NOT_PRIME);
  CHECK(s == nullptr);
  CHECK(std::string(bhh_last_error()).find("prime") != std::string::npos);
  CHECK(bhh_series_new(BHH_SERIES_CS, 3, 5, 3, &s) == BHH_E_INVALID_ARGUMENT);
  CHECK(bhh_series_new(static_cast<bhh_series_kind>(17), 3, 5, 0, &s) == BHH_E_INVALID_ARGUMENT);
  CHECK(bhh_series_new(BHH_SERIES_P, 0, 5, 0, nullptr) == BHH_E_INVALID_ARGUMENT);
  bhh_series_free(nullptr);
}

TEST_CASE("block handles") {
  bhh_blocks* b = nullptr;
  REQUIRE(bhh_blocks_new(3, 4, &b) == BHH_OK);
  REQUIRE(bhh_blocks_count(b) == 3);
  bhh_block_info info{};
  REQUIRE(bhh_blocks_get(b, 2, &info) == BHH_OK);
  CHECK(info.weight == 1);
  CHECK(info.core_length == 1);
  CHECK(info.core_parts[0] == 1);
  CHECK(std::string(info.dim_center) == "3");
  CHECK(std::string(info.dim_hh1) == "1");
  REQUIRE(bhh_blocks_get(b, 0, &info) == BHH_OK);
  CHECK(info.core_length == 2);
  CHECK(info.defect_order_exp == 0);
  CHECK(bhh_blocks_get(b, 3, &info) == BHH_E_INVALID_ARGUMENT);
  bhh_blocks_free(b);
  CHECK(bhh_blocks_new(6, 4, &b) == BHH_E_NOT_PRIME);
}

TEST_CASE("scalar queries") {
  std::uint32_t y = 0;
  REQUIRE(bhh_y1_formula(5, 8, &y) == BHH_OK);
  CHECK(y == 2);
  CHECK(bhh_y1_formula(5, 0, &y) == BHH_E_INVALID_ARGUMENT);
  std::uint64_t v = 0;
  REQUIRE(bhh_hh1_group_oracle(3, 18, &v) == BHH_OK);
  CHECK(v == 298);
  REQUIRE(bhh_sylow_exponent(2, 4, &v) == BHH_OK);
  CHECK(v == 3);
}

TEST_CASE("verification reports") {
  bhh_report* r = nullptr;
  REQUIRE(bhh_verify_theorem3(2, 40, -1, &r) == BHH_OK);
  CHECK(bhh_report_holds(r) == 1);
  CHECK(std::string(bhh_report_identity(r)) == "thm3");
  CHECK(std::string(bhh_report_detail(r)) == "phi = 2/(1-t)");
  CHECK(bhh_report_p(r) == 2);
  CHECK(bhh_report_order(r) == 40);
  std::uint64_t e = 0;
  const char* lhs = nullptr;
  const char* rhs = nullptr;
  CHECK(bhh_report_discrepancy(r, &e, &lhs, &rhs) == 0);
  bhh_report_free(r);

  REQUIRE(bhh_verify_block_decomposition(3, 2, 30, 4, &r) == BHH_OK);
  CHECK(bhh_report_holds(r) == 0);
  REQUIRE(bhh_report_discrepancy(r, &e, &lhs, &rhs) == 1);
  CHECK(e == 14);
  CHECK(std::stoll(rhs) == std::stoll(lhs) + 1);
  bhh_report_free(r);

  REQUIRE(bhh_verify_theorem2(5, 10, -1, &r) == BHH_OK);
  CHECK(bhh_report_holds(r) == 1);
  bhh_report_free(r);

  CHECK(bhh_verify_theorem3(2, 5, -1, &r) == BHH_E_INVALID_ARGUMENT);
  CHECK(bhh_verify_theorem2(9, 5, -1, &r) == BHH_E_NOT_PRIME);
}
