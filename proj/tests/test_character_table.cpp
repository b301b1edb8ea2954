#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "repgrowth/character_table.hpp"
#include "repgrowth/error.hpp"

using namespace repgrowth;

namespace {

std::vector<long> sorted_degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (const auto& x : t.degrees()) d.push_back(x.get_si());
  std::sort(d.begin(), d.end());
  return d;
}

ErrorCode code_of(const std::string& json) {
  try {
    load_table(json);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

/// Elements of PSL_2(p), p prime: matrices (a,b,c,d) mod p with det 1, one per {g,-g}.
using Mat = std::array<long, 4>;

std::vector<Mat> psl2_elements(long p) {
  std::vector<Mat> out;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p != 1) continue;
          const Mat m{a, b, c, d};
          const Mat n{(p - a) % p, (p - b) % p, (p - c) % p, (p - d) % p};
          if (m <= n) out.push_back(m);
        }
  return out;
}

Mat mul(const Mat& x, const Mat& y, long p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p,
          (x[2] * y[1] + x[3] * y[3]) % p};
}

Mat canon(Mat m, long p) {
  const Mat n{(p - m[0]) % p, (p - m[1]) % p, (p - m[2]) % p, (p - m[3]) % p};
  return std::min(m, n);
}

Mat inverse(const Mat& m, long p) { return canon({m[3], (p - m[1]) % p, (p - m[2]) % p, m[0]}, p); }

int fixed_points(const Mat& m, long p) {
  int f = 0;
  // points (x:1) and (1:0)
  for (long x = 0; x < p; ++x) {
    const long num = (m[0] * x + m[1]) % p, den = (m[2] * x + m[3]) % p;
    if (den != 0 && num == x * den % p) ++f;
  }
  if (m[2] == 0) ++f;
  return f;
}

}  // namespace

TEST_CASE("psl2 tables") {
  const std::map<std::uint64_t, std::size_t> class_counts = {{5, 5}, {7, 6}, {9, 7}, {11, 8}, {13, 9}, {25, 15}, {27, 16}};
  for (const auto& [q, k] : class_counts) {
    CAPTURE(q);
    const auto t = build_psl2_table(q);
    CHECK(t->num_classes() == k);
    CHECK(t->order() == mpz_class(static_cast<long>(q * (q * q - 1) / 2)));
    CHECK(t->is_perfect());
    CHECK(t->is_quasisimple());
    const auto st = t->find_degree(mpz_class(static_cast<long>(q)));
    REQUIRE(st);
    for (std::size_t c = 0; c < t->num_classes(); ++c) {
      const Cyclotomic& v = t->value(*st, c);
      CHECK((v == Cyclotomic(static_cast<long>(q)) || v.is_zero() || v == Cyclotomic(1L) || v == Cyclotomic(-1L)));
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) CHECK(t->inner_product(i, j) == (i == j ? 1 : 0));
  }
  CHECK(sorted_degrees(*build_psl2_table(5)) == std::vector<long>{1, 3, 3, 4, 5});
  CHECK(sorted_degrees(*build_psl2_table(7)) == std::vector<long>{1, 3, 3, 6, 7, 8});
  for (std::uint64_t bad : {0, 1, 2, 3, 4, 6, 8, 15, 16, 21, 49 * 3})
    CHECK_THROWS_AS(build_psl2_table(bad), Error);
}

TEST_CASE("psl2 against brute force for prime q") {
  for (long p : {5L, 7L, 11L, 13L}) {
    CAPTURE(p);
    const auto elements = psl2_elements(p);
    const auto t = build_psl2_table(static_cast<std::uint64_t>(p));
    REQUIRE(mpz_class(static_cast<long>(elements.size())) == t->order());

    // conjugacy class sizes
    std::set<Mat> seen;
    std::multiset<long> sizes;
    for (const auto& g : elements) {
      if (seen.count(g)) continue;
      std::set<Mat> cls;
      for (const auto& h : elements) cls.insert(canon(mul(mul(h, g, p), inverse(h, p), p), p));
      seen.insert(cls.begin(), cls.end());
      sizes.insert(static_cast<long>(cls.size()));
    }
    std::multiset<long> table_sizes;
    for (const auto& c : t->classes()) table_sizes.insert(c.size.get_si());
    CHECK(sizes == table_sizes);

    // the permutation character on the projective line is 1 + St
    std::map<long, long> by_fixed;
    for (const auto& g : elements) ++by_fixed[fixed_points(g, p)];
    const std::size_t st = *t->find_degree(mpz_class(p));
    std::map<long, long> from_table;
    for (std::size_t c = 0; c < t->num_classes(); ++c)
      from_table[1 + t->value(st, c).to_rational().get_num().get_si()] += t->classes()[c].size.get_si();
    CHECK(by_fixed == from_table);
  }
}

TEST_CASE("extraspecial tables") {
  CHECK(sorted_degrees(*build_extraspecial_table(2, 1)) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(build_extraspecial_table(2, 1)->order() == 8);
  const auto t3 = build_extraspecial_table(3, 1);
  CHECK(t3->order() == 27);
  CHECK(t3->num_linear() == 9);
  CHECK(std::count(t3->degrees().begin(), t3->degrees().end(), mpz_class(3)) == 2);
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t n : {1, 2}) {
      const auto t = build_extraspecial_table(p, n);
      mpz_class order, squares = 0;
      mpz_ui_pow_ui(order.get_mpz_t(), p, 2 * n + 1);
      for (const auto& d : t->degrees()) squares += d * d;
      CHECK(squares == order);
      CHECK(t->order() == order);
      CHECK_FALSE(t->is_perfect());
      CHECK_FALSE(t->is_quasisimple());
    }
  CHECK_THROWS_AS(build_extraspecial_table(4, 1), Error);
  CHECK_THROWS_AS(build_extraspecial_table(3, 0), Error);
  CHECK_THROWS_AS(build_extraspecial_table(11, 2), Error);
  CHECK_THROWS_AS(build_extraspecial_table(1009, 3), Error);
}

TEST_CASE("builtin names") {
  CHECK(builtin_table("psl2:7")->num_classes() == 6);
  CHECK(builtin_table("PSL2:5")->order() == 60);
  CHECK(builtin_table("extraspecial:3:1")->order() == 27);
  for (const char* bad : {"psl2", "psl2:x", "psl2:7:1", "extraspecial:3", "a5", ""})
    CHECK_THROWS_AS(builtin_table(bad), Error);
}

TEST_CASE("json round trip") {
  for (const char* name : {"psl2:5", "psl2:7", "psl2:9", "psl2:11", "psl2:13", "extraspecial:2:1", "extraspecial:3:1",
                           "extraspecial:3:2", "extraspecial:5:1"}) {
    CAPTURE(name);
    const auto t = builtin_table(name);
    const std::string text = table_to_json(*t);
    const auto back = load_table(text);
    CHECK(table_to_json(*back) == text);
    CHECK(back->values() == t->values());
    CHECK(back->num_classes() == t->num_classes());
  }
}

TEST_CASE("json ingestion errors are distinct") {
  const std::string c2 =
      R"({"group":"C2","order":"2","classes":[{"size":"1","label":"1"},{"size":"1","label":"g"}],"characters":[[1,1],[1,-1]]})";
  CHECK(load_table(c2)->num_classes() == 2);
  CHECK(code_of(R"({"group":"C2","order":"2","classes":[{"size":"1","label":"1"},{"size":"1","label":"g"}],"characters":[[1,1],[1,2]]})") ==
        ErrorCode::Orthogonality);
  CHECK(code_of(R"({"group":"E","order":"1","classes":[],"characters":[]})") == ErrorCode::Schema);
  CHECK(code_of(R"({"group":"C2","order":"2","classes":[{"size":"1","label":"1"},{"size":"1","label":"g"}],"characters":[[1,1]]})") ==
        ErrorCode::SizeMismatch);
  CHECK(code_of(R"({"group":"C2","order":"3","classes":[{"size":"1","label":"1"},{"size":"1","label":"g"}],"characters":[[1,1],[1,-1]]})") ==
        ErrorCode::SizeMismatch);
  CHECK(code_of(R"j({"group":"C2","order":"2","classes":[{"size":"1","label":"1"},{"size":"1","label":"g"}],"characters":[[1,1],[1,"q(1/2)"]]})j") ==
        ErrorCode::Schema);
  CHECK(code_of(R"({"group":"C2","order":"two","classes":[{"size":"1","label":"1"}],"characters":[[1]]})") ==
        ErrorCode::Schema);
  CHECK(code_of("{not json") == ErrorCode::Parse);
  // C3 with an explicit conductor-3 object and an equivalent conductor-6 spelling
  const std::string c3 =
      R"({"group":"C3","order":"3","classes":[{"size":"1","label":"1"},{"size":"1","label":"g"},{"size":"1","label":"g2"}],)"
      R"("characters":[[1,1,1],[1,{"conductor":3,"coeffs":{"1":"1"}},{"conductor":6,"coeffs":{"4":"1"}}],)"
      R"([1,{"conductor":3,"coeffs":{"2":"1"}},{"conductor":3,"coeffs":{"1":"1"}}]]})";
  const auto t = load_table(c3);
  CHECK(t->conjugate_index(1) == 2);
  CHECK(load_table(table_to_json(*t))->values() == t->values());
}

TEST_CASE("perturbed builtin fails orthogonality") {
  std::string text = table_to_json(*build_psl2_table(5));
  const auto pos = text.find("\"characters\"");
  // bump one value in a nontrivial row
  const auto minus = text.find("-1", pos);
  REQUIRE(minus != std::string::npos);
  text.replace(minus, 2, "-2");
  CHECK(code_of(text) == ErrorCode::Orthogonality);
}
