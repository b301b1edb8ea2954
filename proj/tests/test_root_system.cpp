#include <doctest.h>

#include "oracles.hpp"
#include "repgrowth/error.hpp"
#include "repgrowth/root_system.hpp"

using namespace repgrowth;

namespace {

/// Textbook Cartan matrices (Bourbaki numbering), A_ij = <alpha_i, alpha_j^vee>.
std::vector<std::vector<std::int64_t>> textbook_cartan(char family, int n) {
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(1, 3);
      for (int i = 4; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[1][2] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;  // alpha_1 short
      break;
  }
  return a;
}

const std::vector<std::pair<std::string, std::size_t>> kRootCounts = {
    {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A5", 15}, {"B2", 4},  {"B3", 9},  {"B4", 16}, {"C3", 9},
    {"C4", 16}, {"D4", 12}, {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}, {"A1xA1", 2},
    {"A2xG2", 9}};

}  // namespace

TEST_CASE("cartan type parsing") {
  CHECK(CartanType::parse("a2").to_string() == "A2");
  CHECK(CartanType::parse("A1xA1").factors().size() == 2);
  CHECK(CartanType::parse("g2XB3").rank() == 5);
  for (const char* bad : {"", "A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "H3", "A", "A1x", "2A"})
    CHECK_THROWS_AS(CartanType::parse(bad), Error);
  try {
    CartanType::parse("D3");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
    CHECK(std::string(e.what()).find("D") != std::string::npos);
  }
}

TEST_CASE("positive root counts") {
  for (const auto& [type, count] : kRootCounts) {
    CAPTURE(type);
    CHECK(build_root_system(type)->num_positive_roots() == count);
  }
  CHECK(build_root_system("A1")->weyl_vector() == Weight{1});
}

TEST_CASE("cartan matrix recovered from the inner form") {
  for (const char* type : {"A1", "A4", "B2", "B3", "C3", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    CAPTURE(type);
    const auto rs = build_root_system(type);
    const auto expected = textbook_cartan(type[0], rs->rank());
    CHECK(rs->cartan_matrix() == expected);
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = 0; j < rs->rank(); ++j)
        CHECK(rs->pairing(rs->simple_root(i), rs->simple_root(j)) == expected[i][j]);
  }
}

TEST_CASE("weyl vector is half the sum of positive roots") {
  for (const auto& [type, count] : kRootCounts) {
    CAPTURE(type);
    const auto rs = build_root_system(type);
    Weight sum(static_cast<std::size_t>(rs->rank()));
    for (const auto& a : rs->positive_roots()) sum += a;
    CHECK(sum == 2 * rs->weyl_vector());
  }
}

TEST_CASE("simple reflections permute the roots") {
  for (const auto& [type, count] : kRootCounts) {
    CAPTURE(type);
    const auto rs = build_root_system(type);
    for (const auto& a : rs->positive_roots())
      for (int i = 0; i < rs->rank(); ++i) {
        const Weight r = rs->reflect(a, i);
        CHECK(rs->is_root(r));
        CHECK(rs->is_root(Weight(rs->rank()) - r));
      }
  }
}

TEST_CASE("root norms") {
  for (const auto& [type, count] : kRootCounts) {
    CAPTURE(type);
    const auto rs = build_root_system(type);
    mpq_class longest = 0;
    for (const auto& a : rs->positive_roots()) {
      const mpq_class n = rs->inner(a, a);
      CHECK(n > 0);
      if (n > longest) longest = n;
    }
    CHECK(longest == 2);
  }
  const auto g2 = build_root_system("G2");
  CHECK(g2->inner(g2->simple_root(0), g2->simple_root(0)) == mpq_class(2, 3));
  CHECK(g2->inner(g2->simple_root(1), g2->simple_root(1)) == 2);
}

TEST_CASE("inner form and pairing examples") {
  const auto a1 = build_root_system("A1");
  CHECK(a1->inner(a1->weyl_vector(), a1->simple_root(0)) == 1);
  const auto a2 = build_root_system("A2");
  CHECK(a2->pairing(Weight{1, 0}, a2->simple_root(0)) == 1);
  CHECK(a2->pairing(Weight{1, 0}, a2->simple_root(1)) == 0);
  CHECK(a2->pairing(Weight{0, 0}, a2->positive_roots().back()) == 0);
  CHECK_THROWS_AS(a2->pairing(Weight{1, 0}, Weight{1, 0}), Error);
  CHECK_THROWS_AS(a2->inner(Weight{1}, Weight{1, 0}), Error);

  for (const char* type : {"B3", "G2", "F4", "A2xB2"}) {
    const auto rs = build_root_system(type);
    const Weight lambda = [&] {
      Weight w(static_cast<std::size_t>(rs->rank()));
      for (int i = 0; i < rs->rank(); ++i) w[i] = 3 * i + 1;
      return w;
    }();
    for (int i = 0; i < rs->rank(); ++i) {
      CHECK(rs->pairing(lambda, rs->simple_root(i)) == lambda[i]);
      CHECK(rs->pairing(rs->weyl_vector(), rs->simple_root(i)) == 1);
    }
    // symmetric and positive definite on samples
    for (const auto& x : rs->positive_roots())
      for (const auto& y : rs->positive_roots()) CHECK(rs->inner(x, y) == rs->inner(y, x));
    CHECK(rs->inner(lambda, lambda) > 0);
    CHECK(rs->scaled_inner(lambda, rs->weyl_vector()) == rs->inner(lambda, rs->weyl_vector()) * rs->scale());
  }
}

TEST_CASE("semisimple types are orthogonal sums") {
  const auto rs = build_root_system("A1xG2");
  CHECK(rs->rank() == 3);
  CHECK(rs->inner(rs->simple_root(0), rs->simple_root(1)) == 0);
  CHECK(rs->inner(rs->simple_root(0), rs->simple_root(2)) == 0);
}

TEST_CASE("dominant chamber reduction") {
  const auto rs = build_root_system("A2");
  auto r = rs->to_dominant(Weight{-1, 2});
  CHECK(r.dominant == Weight{1, 1});
  CHECK(r.sign == -1);
  CHECK_FALSE(r.on_wall);
  r = rs->to_dominant(Weight{-2, 1});
  CHECK(r.dominant == Weight{1, 1});
  CHECK(r.sign == 1);
  r = rs->to_dominant(Weight{-1, 0});
  CHECK(r.on_wall);
}

TEST_CASE("weyl group orders from the orbit of delta") {
  const std::vector<std::pair<const char*, std::size_t>> orders = {
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"C3", 48}, {"D4", 192}, {"G2", 12}, {"A1xA1", 4}};
  for (const auto& [type, order] : orders) {
    CAPTURE(type);
    CHECK(oracle::weyl_group(*build_root_system(type)).size() == order);
  }
}
