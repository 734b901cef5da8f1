// Exercises libqcluster only through its C header.

#include <doctest.h>

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "qcluster/qcluster.h"

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(QCL_TEST_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string out(s);
  qcl_string_free(s);
  return out;
}

qcl_seed* load(const std::string& name) {
  qcl_seed* seed = nullptr;
  REQUIRE(qcl_seed_from_json(read_data(name).c_str(), &seed) == QCL_OK);
  return seed;
}

}  // namespace

TEST_CASE("load, save and reload") {
  qcl_seed* seed = load("principal_b2.json");
  size_t m = 0, n = 0;
  REQUIRE(qcl_seed_rank(seed, &m, &n) == QCL_OK);
  CHECK(m == 4);
  CHECK(n == 2);

  qcl_seed* mutated = nullptr;
  REQUIRE(qcl_seed_mutate_word(seed, "1,2,1", &mutated) == QCL_OK);
  char* json = nullptr;
  REQUIRE(qcl_seed_to_json(mutated, &json) == QCL_OK);
  qcl_seed* reloaded = nullptr;
  REQUIRE(qcl_seed_from_json(json, &reloaded) == QCL_OK);
  qcl_string_free(json);
  int equal = 0;
  REQUIRE(qcl_seed_equal(mutated, reloaded, &equal) == QCL_OK);
  CHECK(equal == 1);
  REQUIRE(qcl_seed_equal(seed, reloaded, &equal) == QCL_OK);
  CHECK(equal == 0);

  qcl_seed_free(reloaded);
  qcl_seed_free(mutated);
  qcl_seed_free(seed);
}

TEST_CASE("mutation uses 1-based indices") {
  qcl_seed* seed = load("rank1.json");
  qcl_seed* mu = nullptr;
  REQUIRE(qcl_seed_mutate(seed, 1, &mu) == QCL_OK);
  char* text = nullptr;
  REQUIRE(qcl_seed_variables_text(mu, &text) == QCL_OK);
  CHECK(take(text) == "X'1 = q^(-1/2) X1^-1 X2 + X1^-1\nX'2 = X2\n");
  qcl_seed* bad = nullptr;
  CHECK(qcl_seed_mutate(seed, 0, &bad) == QCL_ERR_INDEX_OUT_OF_RANGE);
  CHECK(qcl_seed_mutate(seed, 2, &bad) == QCL_ERR_INDEX_OUT_OF_RANGE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(qcl_last_error()) > 0);

  qcl_seed* back = nullptr;
  REQUIRE(qcl_seed_mutate_word(seed, "1,1", &back) == QCL_OK);
  int equal = 0;
  REQUIRE(qcl_seed_equal(seed, back, &equal) == QCL_OK);
  CHECK(equal == 1);
  qcl_seed_free(back);
  qcl_seed_free(mu);
  qcl_seed_free(seed);
}

TEST_CASE("status codes for bad input") {
  qcl_seed* seed = nullptr;
  CHECK(qcl_seed_from_json(read_data("malformed.json").c_str(), &seed) == QCL_ERR_PARSE);
  CHECK(qcl_seed_from_json(read_data("not_skew.json").c_str(), &seed) == QCL_ERR_NOT_SKEW_SYMMETRIC);
  CHECK(qcl_seed_from_json(read_data("not_compatible.json").c_str(), &seed) == QCL_ERR_NOT_BLOCK_DIAGONAL);
  CHECK(qcl_seed_from_json(nullptr, &seed) == QCL_ERR_INVALID_ARGUMENT);
  CHECK(seed == nullptr);
  CHECK(std::string(qcl_status_name(QCL_ERR_SINGULAR_C)) == "SingularC");
  char* out = nullptr;
  CHECK(qcl_lambda_from_bcd_json(read_data("bcd_singular.json").c_str(), &out) == QCL_ERR_SINGULAR_C);
  CHECK(out == nullptr);
}

TEST_CASE("compatibility and the block solution") {
  char* d = nullptr;
  REQUIRE(qcl_check_compatible_json(read_data("principal_g2.json").c_str(), &d) == QCL_OK);
  CHECK(take(d) == "[3,1]");
  char* out = nullptr;
  REQUIRE(qcl_lambda_from_bcd_json(read_data("bcd_rank1.json").c_str(), &out) == QCL_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["Lambda"] == nlohmann::json::parse("[[0,-2],[2,0]]"));
  REQUIRE(qcl_lambda_from_bcd_json(R"({"B":[[0]],"C":[[2]],"D":["1/3"]})", &out) == QCL_OK);
  CHECK(nlohmann::json::parse(take(out))["Lambda"] == nlohmann::json::parse(R"([[0,"-1/6"],["1/6",0]])"));
}

TEST_CASE("exploration through the C interface") {
  qcl_seed* seed = load("principal_a2.json");
  qcl_explore_options options{};
  options.depth = 8;
  options.count_up_to_permutation = 1;
  qcl_report* report = nullptr;
  REQUIRE(qcl_explore(seed, &options, &report) == QCL_OK);
  CHECK(qcl_report_exit_code(report) == 0);
  char* json = nullptr;
  REQUIRE(qcl_report_to_json(report, &json) == QCL_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["distinctSeeds"] == 10);
  CHECK(j["distinctUpToPermutation"] == 5);
  CHECK(j["budget"] == qcl_default_budget());
  qcl_report_free(report);
  qcl_seed_free(seed);

  options.depth = 3;
  REQUIRE(qcl_explore_matrix_json(read_data("mixed_sign_matrix.json").c_str(), &options, &report) == QCL_OK);
  CHECK(qcl_report_exit_code(report) == 1);
  qcl_report_free(report);
}

TEST_CASE("duplication and periodicity") {
  qcl_seed* seed = load("principal_a2.json");
  qcl_seed* dup = nullptr;
  REQUIRE(qcl_seed_duplicate(seed, &dup) == QCL_OK);
  int yes = 0;
  REQUIRE(qcl_seed_is_integrable(dup, &yes) == QCL_OK);
  CHECK(yes == 1);
  REQUIRE(qcl_seed_is_sign_coherent(dup, &yes) == QCL_OK);
  CHECK(yes == 1);
  qcl_seed_free(dup);
  qcl_seed_free(seed);

  qcl_seed* pentagon = load("coefficient_free_a2.json");
  char* out = nullptr;
  REQUIRE(qcl_periodicity_scan(pentagon, "1,2,1,2,1", &out) == QCL_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["returnsToStart"] == false);
  CHECK(j["upToPermutation"] == true);
  CHECK(j["permutation"] == nlohmann::json::parse("[2,1]"));
  CHECK(qcl_periodicity_scan(pentagon, "1,x", &out) == QCL_ERR_PARSE);
  qcl_seed_free(pentagon);
}
