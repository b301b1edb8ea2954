#include <algorithm>
#include <cctype>
#include <charconv>

#include "repgrowth/character_table.hpp"
#include "repgrowth/error.hpp"

namespace repgrowth {

namespace {

constexpr std::uint64_t kMaxPsl2Q = 2000;
constexpr std::uint64_t kMaxExtraspecialQuotient = 10000;  // p^(2n)

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^f with p prime, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p) ++p;
  if (q % p) p = q;
  unsigned f = 0;
  std::uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++f;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, f);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// sqrt(eps * q), eps = (-1)^((q-1)/2), as a cyclotomic integer.
Cyclotomic signed_sqrt(std::uint64_t p, unsigned f) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), p, f / 2);
  if (f % 2 == 0) return Cyclotomic(scale);
  // Quadratic Gauss sum: sum_x (x/p) zeta_p^x = sqrt(eps_p p).
  std::vector<std::pair<std::int64_t, mpq_class>> terms;
  for (std::uint64_t x = 1; x < p; ++x) {
    const bool residue = pow_mod(x, (p - 1) / 2, p) == 1;
    terms.emplace_back(static_cast<std::int64_t>(x), mpq_class(residue ? 1 : -1));
  }
  return Cyclotomic::from_terms(static_cast<std::uint32_t>(p), terms) * Cyclotomic(scale);
}

Cyclotomic two_cos(std::uint32_t n, std::int64_t k) {
  return Cyclotomic::from_terms(n, {{k, mpq_class(1)}, {-k, mpq_class(1)}});
}

enum class Sl2Kind { Identity, Central, C, D, ZC, ZD, Split, Nonsplit };

struct Sl2Class {
  Sl2Kind kind;
  std::int64_t param;  // l for split, m for nonsplit
  std::string label;
  mpz_class size;
  std::size_t partner;  // class of z*g
};

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorCode::Parse, "cannot parse " + std::string(what) + " from \"" + std::string(s) + "\"");
  return v;
}

}  // namespace

CharacterTablePtr build_psl2_table(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp || pp->first == 2) fail(ErrorCode::InvalidArgument, "PSL2(q) requires an odd prime power q, got " + std::to_string(q));
  if (q < 5) fail(ErrorCode::InvalidArgument, "PSL2(q) requires q >= 5");
  if (q > kMaxPsl2Q) fail(ErrorCode::Limit, "PSL2(q) builtin supports q <= " + std::to_string(kMaxPsl2Q));
  const auto [p, f] = *pp;
  const auto qq = static_cast<std::int64_t>(q);
  const std::int64_t eps = ((q - 1) / 2) % 2 == 0 ? 1 : -1;
  const Cyclotomic s = signed_sqrt(p, f);
  const auto split_n = static_cast<std::uint32_t>(q - 1);
  const auto nonsplit_n = static_cast<std::uint32_t>(q + 1);

  // Classes of SL2(q).
  std::vector<Sl2Class> cls;
  const mpz_class unip = mpz_class(qq * qq - 1) / 2;
  cls.push_back({Sl2Kind::Identity, 0, "1", 1, 1});
  cls.push_back({Sl2Kind::Central, 0, "z", 1, 0});
  cls.push_back({Sl2Kind::C, 0, "u", unip, 4});
  cls.push_back({Sl2Kind::D, 0, "u'", unip, 5});
  cls.push_back({Sl2Kind::ZC, 0, "zu", unip, 2});
  cls.push_back({Sl2Kind::ZD, 0, "zu'", unip, 3});
  const std::size_t split_start = cls.size();
  const std::int64_t n_split = (qq - 3) / 2, n_nonsplit = (qq - 1) / 2;
  for (std::int64_t l = 1; l <= n_split; ++l)
    cls.push_back({Sl2Kind::Split, l, "a^" + std::to_string(l), mpz_class(qq * (qq + 1)),
                   split_start + static_cast<std::size_t>((qq - 1) / 2 - l) - 1});
  const std::size_t nonsplit_start = cls.size();
  for (std::int64_t m = 1; m <= n_nonsplit; ++m)
    cls.push_back({Sl2Kind::Nonsplit, m, "b^" + std::to_string(m), mpz_class(qq * (qq - 1)),
                   nonsplit_start + static_cast<std::size_t>((qq + 1) / 2 - m) - 1});

  // Characters of SL2(q) as functions of the class.
  using Row = std::vector<Cyclotomic>;
  auto make_row = [&](auto value) {
    Row row;
    for (const auto& c : cls) row.push_back(value(c));
    return row;
  };
  const Cyclotomic half(mpq_class(1, 2));
  std::vector<Row> rows;
  rows.push_back(make_row([](const Sl2Class&) { return Cyclotomic(1L); }));
  rows.push_back(make_row([&](const Sl2Class& c) -> Cyclotomic {
    switch (c.kind) {
      case Sl2Kind::Identity:
      case Sl2Kind::Central: return Cyclotomic(qq);
      case Sl2Kind::Split: return Cyclotomic(1L);
      case Sl2Kind::Nonsplit: return Cyclotomic(-1L);
      default: return Cyclotomic();
    }
  }));
  for (std::int64_t i = 2; i <= n_split; i += 2) {  // principal series trivial on z
    rows.push_back(make_row([&](const Sl2Class& c) -> Cyclotomic {
      switch (c.kind) {
        case Sl2Kind::Identity:
        case Sl2Kind::Central: return Cyclotomic(qq + 1);
        case Sl2Kind::Split: return two_cos(split_n, i * c.param);
        case Sl2Kind::Nonsplit: return Cyclotomic();
        default: return Cyclotomic(1L);
      }
    }));
  }
  for (std::int64_t j = 2; j <= n_nonsplit; j += 2) {  // discrete series trivial on z
    rows.push_back(make_row([&](const Sl2Class& c) -> Cyclotomic {
      switch (c.kind) {
        case Sl2Kind::Identity:
        case Sl2Kind::Central: return Cyclotomic(qq - 1);
        case Sl2Kind::Split: return Cyclotomic();
        case Sl2Kind::Nonsplit: return -two_cos(nonsplit_n, j * c.param);
        default: return Cyclotomic(-1L);
      }
    }));
  }
  for (int sign : {1, -1}) {
    const Cyclotomic root = sign > 0 ? s : -s;
    if (eps == 1) {
      // Degree (q+1)/2, trivial on z exactly when q = 1 mod 4.
      rows.push_back(make_row([&](const Sl2Class& c) -> Cyclotomic {
        switch (c.kind) {
          case Sl2Kind::Identity:
          case Sl2Kind::Central: return Cyclotomic(mpq_class(qq + 1, 2));
          case Sl2Kind::C:
          case Sl2Kind::ZC: return half * (Cyclotomic(1L) + root);
          case Sl2Kind::D:
          case Sl2Kind::ZD: return half * (Cyclotomic(1L) - root);
          case Sl2Kind::Split: return Cyclotomic(c.param % 2 == 0 ? 1L : -1L);
          default: return Cyclotomic();
        }
      }));
    } else {
      // Degree (q-1)/2, trivial on z exactly when q = 3 mod 4.
      rows.push_back(make_row([&](const Sl2Class& c) -> Cyclotomic {
        switch (c.kind) {
          case Sl2Kind::Identity:
          case Sl2Kind::Central: return Cyclotomic(mpq_class(qq - 1, 2));
          case Sl2Kind::C:
          case Sl2Kind::ZC: return half * (Cyclotomic(-1L) + root);
          case Sl2Kind::D:
          case Sl2Kind::ZD: return half * (Cyclotomic(-1L) - root);
          case Sl2Kind::Nonsplit: return Cyclotomic(c.param % 2 == 0 ? -1L : 1L);
          default: return Cyclotomic();
        }
      }));
    }
  }

  // Fuse g with zg.
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].partner < i) continue;
    if (cls[i].kind == Sl2Kind::Identity) {
      classes.push_back({1, "1"});
    } else {
      classes.push_back({cls[i].partner == i ? mpz_class(cls[i].size / 2) : cls[i].size, cls[i].label});
    }
    keep.push_back(i);
  }
  std::vector<Row> fused;
  for (const auto& row : rows) {
    Row r;
    for (std::size_t i : keep) r.push_back(row[i]);
    fused.push_back(std::move(r));
  }
  const mpz_class order = mpz_class(qq) * mpz_class(qq * qq - 1) / 2;
  return std::make_shared<const CharacterTable>("PSL2(" + std::to_string(q) + ")", order, std::move(classes),
                                                std::move(fused));
}

CharacterTablePtr build_extraspecial_table(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "extraspecial group needs a prime p, got " + std::to_string(p));
  if (n < 1) fail(ErrorCode::InvalidArgument, "extraspecial group needs n >= 1");
  std::uint64_t quotient = 1;
  for (std::uint64_t i = 0; i < 2 * n; ++i) {
    quotient *= p;
    if (quotient > kMaxExtraspecialQuotient)
      fail(ErrorCode::Limit, "extraspecial table too large: p^(2n) must be <= " + std::to_string(kMaxExtraspecialQuotient));
  }
  const auto pi = static_cast<std::uint32_t>(p);
  const std::size_t dim = 2 * n;
  std::vector<Cyclotomic> roots;
  for (std::uint32_t k = 0; k < pi; ++k) roots.push_back(Cyclotomic::root_of_unity(pi, k));

  std::vector<std::vector<std::uint32_t>> vectors;  // F_p^(2n), lexicographic
  for (std::uint64_t idx = 0; idx < quotient; ++idx) {
    std::vector<std::uint32_t> v(dim);
    std::uint64_t x = idx;
    for (std::size_t d = dim; d-- > 0;) {
      v[d] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    vectors.push_back(std::move(v));
  }
  auto label = [](const std::vector<std::uint32_t>& v) {
    std::string s = "v(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };

  std::vector<ConjugacyClass> classes;
  for (std::uint32_t j = 0; j < pi; ++j) classes.push_back({1, j == 0 ? "1" : "z^" + std::to_string(j)});
  for (std::uint64_t idx = 1; idx < quotient; ++idx) classes.push_back({mpz_class(static_cast<unsigned long>(p)), label(vectors[idx])});

  mpz_class big_degree;
  mpz_ui_pow_ui(big_degree.get_mpz_t(), p, n);
  std::vector<std::vector<Cyclotomic>> rows;
  for (std::uint64_t u = 0; u < quotient; ++u) {
    std::vector<Cyclotomic> row(pi, Cyclotomic(1L));
    row.reserve(classes.size());
    for (std::uint64_t v = 1; v < quotient; ++v) {
      std::uint64_t dot = 0;
      for (std::size_t d = 0; d < dim; ++d) dot += static_cast<std::uint64_t>(vectors[u][d]) * vectors[v][d];
      row.push_back(roots[dot % p]);
    }
    rows.push_back(std::move(row));
  }
  for (std::uint32_t t = 1; t < pi; ++t) {
    std::vector<Cyclotomic> row;
    row.reserve(classes.size());
    for (std::uint32_t j = 0; j < pi; ++j) row.push_back(Cyclotomic(big_degree) * roots[(t * j) % pi]);
    row.resize(classes.size());
    rows.push_back(std::move(row));
  }
  mpz_class order;
  mpz_ui_pow_ui(order.get_mpz_t(), p, 2 * n + 1);
  return std::make_shared<const CharacterTable>(
      "extraspecial(" + std::to_string(p) + "^" + std::to_string(2 * n + 1) + ")", order, std::move(classes),
      std::move(rows));
}

CharacterTablePtr builtin_table(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  std::vector<std::string_view> parts;
  std::string_view rest(lower);
  for (;;) {
    auto pos = rest.find(':');
    parts.push_back(rest.substr(0, pos));
    if (pos == std::string_view::npos) break;
    rest = rest.substr(pos + 1);
  }
  if (parts[0] == "psl2" && parts.size() == 2) return build_psl2_table(parse_uint(parts[1], "q"));
  if (parts[0] == "extraspecial" && parts.size() == 3)
    return build_extraspecial_table(parse_uint(parts[1], "p"), parse_uint(parts[2], "n"));
  fail(ErrorCode::InvalidArgument,
       "unknown builtin table \"" + std::string(name) + "\" (expected psl2:<q> or extraspecial:<p>:<n>)");
}

}  // namespace repgrowth
