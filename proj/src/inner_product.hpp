#pragma once

// Exact class-function arithmetic over a validated character table. Values on
// each class are dense coefficient vectors over the column conductor; the
// coefficient type is either checked int64 (fast path) or mpz_class.

#include <cstdint>
#include <map>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/character_table.hpp"
#include "repgrowth/error.hpp"

namespace repgrowth::detail {

struct Overflow {};

inline void add_mul(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  std::int64_t p;
  if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc)) throw Overflow{};
}
inline void add_mul(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_signed(std::int64_t& acc, std::int64_t v, int sign) {
  if (sign > 0 ? __builtin_add_overflow(acc, v, &acc) : __builtin_sub_overflow(acc, v, &acc)) throw Overflow{};
}
inline void add_signed(mpz_class& acc, const mpz_class& v, int sign) {
  if (sign > 0)
    acc += v;
  else
    acc -= v;
}

template <class Int>
Int from_mpz(const mpz_class& z);
template <>
inline std::int64_t from_mpz<std::int64_t>(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Overflow{};
  return z.get_si();
}
template <>
inline mpz_class from_mpz<mpz_class>(const mpz_class& z) {
  return z;
}

template <class Int>
Int term_coef(const RawTerm& t) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    if (!t.fits64) throw Overflow{};
    return t.coef64;
  } else {
    return t.coef;
  }
}

template <class Int>
inline mpz_class to_mpz(const Int& v) {
  if constexpr (std::is_same_v<Int, std::int64_t>)
    return mpz_class(static_cast<long>(v));
  else
    return v;
}

template <class Int>
using ClassValues = std::vector<std::vector<Int>>;

/// Values of sum_i mults[i] chi_i on every class.
template <class Int>
ClassValues<Int> combo_values(const CharacterTable& t, const std::vector<mpz_class>& mults) {
  ClassValues<Int> out;
  out.reserve(t.num_classes());
  for (const auto& col : t.columns()) {
    std::vector<Int> dense(col.conductor, Int(0));
    for (std::size_t i = 0; i < mults.size(); ++i) {
      if (mults[i] == 0) continue;
      const Int m = from_mpz<Int>(mults[i]);
      for (const auto& term : col.rows[i]) add_mul(dense[term.exponent], m, term_coef<Int>(term));
    }
    out.push_back(std::move(dense));
  }
  return out;
}

/// Pointwise product of two class functions.
template <class Int>
ClassValues<Int> multiply(const ClassValues<Int>& a, const ClassValues<Int>& b) {
  ClassValues<Int> out;
  out.reserve(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    const std::size_t n = a[c].size();
    std::vector<Int> dense(n, Int(0));
    for (std::size_t x = 0; x < n; ++x) {
      if (a[c][x] == 0) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (b[c][y] == 0) continue;
        const std::size_t s = x + y;
        add_mul(dense[s < n ? s : s - n], a[c][x], b[c][y]);
      }
    }
    out.push_back(std::move(dense));
  }
  return out;
}

/// Multiplies each class value by the class size.
template <class Int>
ClassValues<Int> weighted(const CharacterTable& t, ClassValues<Int> f) {
  for (std::size_t c = 0; c < f.size(); ++c) {
    const Int size = from_mpz<Int>(t.classes()[c].size);
    for (auto& v : f[c]) {
      if (v == 0) continue;
      Int acc(0);
      add_mul(acc, v, size);
      v = acc;
    }
  }
  return f;
}

template <class Int>
Int row_coef(const RowTerm& t) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    if (!t.fits64) throw Overflow{};
    return t.coef64;
  } else {
    return *t.coef;
  }
}

/// sum_g f(g) conj(chi_gamma(g)) for f already weighted by class sizes, returned
/// as an exact cyclotomic number (rational for genuine class functions).
template <class Int>
Cyclotomic weighted_sum(const CharacterTable& t, const ClassValues<Int>& wf, std::size_t gamma) {
  const auto& groups = t.conductor_groups();
  std::vector<std::vector<Int>> acc(groups.size());
  for (const auto& term : t.row_terms(gamma)) {
    const std::size_t g = t.columns()[term.cls].group;
    const std::uint32_t n = groups[g].conductor;
    auto& a = acc[g];
    if (a.empty()) a.assign(n, Int(0));
    const auto& values = wf[term.cls];
    // conj(zeta^e) = zeta^(n-e): a[k - e mod n] += values[k] * v
    const Int v = row_coef<Int>(term);
    const std::uint32_t e = term.exponent;
    for (std::uint32_t k = e; k < n; ++k)
      if (values[k] != 0) add_mul(a[k - e], values[k], v);
    for (std::uint32_t k = 0; k < e; ++k)
      if (values[k] != 0) add_mul(a[k + n - e], values[k], v);
  }
  Cyclotomic total;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (acc[g].empty()) continue;
    auto reduced = reduce_dense(*groups[g].basis, acc[g], [](Int& out, const Int& v, int s) { add_signed(out, v, s); });
    std::map<std::uint32_t, mpq_class> coeffs;
    for (auto& [e, v] : reduced) coeffs.emplace(e, mpq_class(to_mpz(v)));
    total += Cyclotomic::from_canonical(groups[g].conductor, std::move(coeffs));
  }
  return total;
}

/// <f, chi_gamma> for weighted f; throws Domain when the value is not rational.
template <class Int>
mpq_class inner_with_character(const CharacterTable& t, const ClassValues<Int>& wf, std::size_t gamma) {
  const Cyclotomic s = weighted_sum(t, wf, gamma);
  if (!s.is_rational())
    fail(ErrorCode::Domain, "inner product with character " + std::to_string(gamma) + " is not rational");
  mpq_class r = s.to_rational() / mpq_class(t.order());
  r.canonicalize();
  return r;
}

/// Runs fn<int64_t>() and falls back to fn<mpz_class>() if any intermediate overflows.
template <class Fn>
auto with_fallback(Fn&& fn) {
  try {
    return fn(std::int64_t{});
  } catch (const Overflow&) {
    return fn(mpz_class{});
  }
}

}  // namespace repgrowth::detail
