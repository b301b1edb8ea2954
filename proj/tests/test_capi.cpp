#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>
#include <vector>

#include "repgrowth/repgrowth.h"

using nlohmann::json;

namespace {

json take_json(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  rg_string_free(s);
  return j;
}

std::string take_string(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  rg_string_free(s);
  return out;
}

struct Lines {
  std::vector<std::string> rows;
  std::size_t stop_after = 0;
};

int collect(const char* line, void* user) {
  auto* l = static_cast<Lines*>(user);
  l->rows.emplace_back(line);
  return l->stop_after && l->rows.size() >= l->stop_after ? 1 : 0;
}

}  // namespace

TEST_CASE("status names are distinct") {
  std::vector<std::string> names;
  for (int s = RG_OK; s <= RG_ERR_CALLBACK; ++s) names.emplace_back(rg_status_name(static_cast<rg_status>(s)));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) CHECK(names[i] != names[j]);
  CHECK(std::strlen(rg_version()) > 0);
}

TEST_CASE("root system handle") {
  rg_root_system* rs = nullptr;
  REQUIRE(rg_root_system_create("g2", &rs) == RG_OK);
  CHECK(rg_root_system_rank(rs) == 2);
  char* out = nullptr;
  REQUIRE(rg_root_system_json(rs, &out) == RG_OK);
  const json info = take_json(out);
  CHECK(info["type"] == "G2");
  CHECK(info["positive_roots"].size() == 6);

  const std::int64_t w[] = {1, 0};
  REQUIRE(rg_dimension(rs, w, 2, &out) == RG_OK);
  CHECK(take_string(out) == "7");

  REQUIRE(rg_decompose_json(rs, w, w, 2, 0, &out) == RG_OK);
  const json d = take_json(out);
  // 7 x 7 = 1 + 7 + 14 + 27
  CHECK(d.size() == 4);
  CHECK(d[0]["weight"] == json::array({0, 0}));
  for (const auto& t : d) CHECK(t["mult"] == "1");

  const std::int64_t bad[] = {1};
  CHECK(rg_dimension(rs, bad, 1, &out) == RG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(rg_last_error()).find("rank") != std::string::npos);
  const std::int64_t neg[] = {-1, 0};
  CHECK(rg_dimension(rs, neg, 2, &out) == RG_ERR_DOMAIN);
  rg_root_system_free(rs);

  CHECK(rg_root_system_create("Q7", &rs) == RG_ERR_PARSE);
  CHECK(rg_root_system_create(nullptr, &rs) == RG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("growth json for A1") {
  rg_root_system* rs = nullptr;
  REQUIRE(rg_root_system_create("A1", &rs) == RG_OK);
  int digits = 0;
  REQUIRE(rg_digits_for_bits(53, &digits) == RG_OK);
  CHECK(rg_digits_for_bits(9, &digits) == RG_ERR_INVALID_ARGUMENT);
  REQUIRE(rg_digits_for_bits(53, &digits) == RG_OK);
  for (std::int64_t n = 1; n <= 30; ++n) {
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(rg_growth_json(rs, &n, 1, digits, &a) == RG_OK);
    REQUIRE(rg_su2_closed_form_json(static_cast<std::uint64_t>(n), digits, &b) == RG_OK);
    CHECK(take_json(a) == take_json(b));
  }
  const std::int64_t one = 1;
  char* out = nullptr;
  REQUIRE(rg_growth_json(rs, &one, 1, digits, &out) == RG_OK);
  const json r = take_json(out);
  CHECK(r["measure"] == "4");
  CHECK(r["measure_sq"] == "10");
  rg_root_system_free(rs);
}

TEST_CASE("sweep callbacks") {
  rg_root_system* rs = nullptr;
  REQUIRE(rg_root_system_create("A1", &rs) == RG_OK);
  Lines generic, closed;
  REQUIRE(rg_sweep_csv(rs, 40, 3, 17, collect, &generic) == RG_OK);
  REQUIRE(rg_su2_sweep_csv(40, 17, collect, &closed) == RG_OK);
  CHECK(generic.rows.size() == 40);
  CHECK(generic.rows == closed.rows);

  Lines early;
  early.stop_after = 5;
  CHECK(rg_sweep_csv(rs, 40, 1, 17, collect, &early) == RG_ERR_CALLBACK);
  CHECK(early.rows.size() == 5);
  CHECK(rg_sweep_csv(rs, 40, 1, 17, nullptr, nullptr) == RG_ERR_INVALID_ARGUMENT);
  rg_root_system_free(rs);
}

TEST_CASE("delta family and strict growth") {
  char* out = nullptr;
  REQUIRE(rg_delta_family_json(3, 4, 17, &out) == RG_OK);
  const json d = take_json(out);
  CHECK(d["dim"] == "125");
  CHECK(d["delta_multiple"] == 4);

  rg_root_system* rs = nullptr;
  REQUIRE(rg_root_system_create("B2", &rs) == RG_OK);
  const std::int64_t a[] = {1, 0}, b[] = {0, 1};
  REQUIRE(rg_strict_growth_json(rs, a, b, 2, &out) == RG_OK);
  const json s = take_json(out);
  CHECK(s["holds"] == true);
  rg_root_system_free(rs);
}

TEST_CASE("table handles") {
  rg_table* t = nullptr;
  REQUIRE(rg_table_builtin("psl2:5", &t) == RG_OK);
  CHECK(rg_table_num_characters(t) == 5);
  char* out = nullptr;
  REQUIRE(rg_table_summary_json(t, &out) == RG_OK);
  const json s = take_json(out);
  CHECK(s["order"] == "60");
  CHECK(s["perfect"] == true);

  REQUIRE(rg_table_export_json(t, &out) == RG_OK);
  const std::string exported = take_string(out);
  rg_table* back = nullptr;
  REQUIRE(rg_table_load_json(exported.c_str(), &back) == RG_OK);
  REQUIRE(rg_table_export_json(back, &out) == RG_OK);
  CHECK(take_string(out) == exported);
  rg_table_free(back);

  std::size_t idx = 0;
  REQUIRE(rg_table_find_degree(t, "5", &idx) == RG_OK);
  rg_combo* st = nullptr;
  REQUIRE(rg_combo_irreducible(t, idx, &st) == RG_OK);
  rg_combo* sq = nullptr;
  REQUIRE(rg_combo_power(st, 2, &sq) == RG_OK);
  REQUIRE(rg_combo_json(sq, &out) == RG_OK);
  const json c = take_json(out);
  CHECK(c["degree"] == "25");
  // St^2 contains every irreducible of A5
  CHECK(c["constituents"] == 5);
  CHECK(c["measure"] == "60");

  const rg_combo* factors[] = {st, st};
  rg_combo* prod = nullptr;
  REQUIRE(rg_combo_product(factors, 2, &prod) == RG_OK);
  REQUIRE(rg_combo_measure(prod, &out) == RG_OK);
  CHECK(take_string(out) == "60");

  REQUIRE(rg_cover_json(st, 5, &out) == RG_OK);
  CHECK(take_json(out)["N"] == 2);

  rg_combo* combo = nullptr;
  REQUIRE(rg_combo_create(t, &combo) == RG_OK);
  CHECK(rg_combo_add(combo, 0, "x") == RG_ERR_PARSE);
  CHECK(rg_combo_add(combo, 99, "1") == RG_ERR_INVALID_ARGUMENT);
  CHECK(rg_cover_json(combo, 5, &out) == RG_ERR_INVALID_ARGUMENT);
  REQUIRE(rg_combo_add(combo, 0, "2") == RG_OK);
  REQUIRE(rg_combo_multiplicity_sum(combo, &out) == RG_OK);
  CHECK(take_string(out) == "2");

  const std::size_t pair[] = {idx, idx};
  REQUIRE(rg_bound_json(t, pair, 2, &out) == RG_OK);
  const json bound = take_json(out);
  CHECK(bound["holds"] == true);
  CHECK(bound["strict_expected"] == true);
  CHECK(bound["strict_holds"] == true);

  REQUIRE(rg_power_positivity_json(t, 2, &out) == RG_OK);
  CHECK(take_json(out)["pairs"] == 16);

  REQUIRE(rg_random_checks_json(t, 25, 99, &out) == RG_OK);
  const json rc = take_json(out);
  CHECK(rc["passed"] == true);
  CHECK(rc["seed"] == 99);

  rg_combo_free(combo);
  rg_combo_free(prod);
  rg_combo_free(sq);
  rg_combo_free(st);
  rg_table_free(t);
}

TEST_CASE("table errors keep their codes") {
  rg_table* t = nullptr;
  CHECK(rg_table_builtin("psl2:6", &t) == RG_ERR_INVALID_ARGUMENT);
  CHECK(rg_table_builtin("nonsense", &t) == RG_ERR_INVALID_ARGUMENT);
  CHECK(rg_table_builtin("psl2:x", &t) == RG_ERR_PARSE);
  CHECK(rg_table_load_json("{", &t) == RG_ERR_PARSE);
  CHECK(rg_table_load_json("{}", &t) == RG_ERR_SCHEMA);
  CHECK(rg_table_builtin("psl2:2003", &t) == RG_ERR_LIMIT);
}
