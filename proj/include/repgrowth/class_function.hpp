#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/character_table.hpp"

namespace repgrowth {

/// A character sum_i m_i chi_i with non-negative integer multiplicities.
class ClassFunctionCombo {
 public:
  explicit ClassFunctionCombo(CharacterTablePtr table);
  ClassFunctionCombo(CharacterTablePtr table, std::vector<mpz_class> mults);
  static ClassFunctionCombo irreducible(CharacterTablePtr table, std::size_t index);
  /// Sum of every irreducible once.
  static ClassFunctionCombo all_irreducibles(CharacterTablePtr table);

  const CharacterTablePtr& table() const { return table_; }
  const std::vector<mpz_class>& mults() const { return mults_; }
  const mpz_class& mult(std::size_t i) const { return mults_.at(i); }
  bool is_zero() const;
  /// A positive multiple of the trivial character.
  bool is_trivial() const;
  mpz_class degree() const;
  std::size_t num_constituents() const;

  ClassFunctionCombo& operator+=(const ClassFunctionCombo& o);
  friend ClassFunctionCombo operator+(ClassFunctionCombo a, const ClassFunctionCombo& b) { return a += b; }
  friend bool operator==(const ClassFunctionCombo& a, const ClassFunctionCombo& b) {
    return a.table_ == b.table_ && a.mults_ == b.mults_;
  }

 private:
  CharacterTablePtr table_;
  std::vector<mpz_class> mults_;
};

/// Decomposes the product of the factors into irreducibles. Throws
/// InvalidArgument for an empty list or factors over different tables.
ClassFunctionCombo decompose_product(const CharacterTablePtr& table, const std::vector<ClassFunctionCombo>& factors);
ClassFunctionCombo power(const ClassFunctionCombo& c, unsigned k);

/// Sum of squared degrees of the distinct constituents.
mpz_class plancherel_measure_finite(const ClassFunctionCombo& c);
/// Sum of multiplicities.
mpz_class multiplicity_sum(const ClassFunctionCombo& c);
/// Sum of squared multiplicities, i.e. <c, c>.
mpz_class multiplicity_norm(const ClassFunctionCombo& c);

struct CoveringReport {
  std::optional<unsigned> n;  // smallest N <= max_N with every irreducible in c^N
  std::vector<mpz_class> measures;  // |c^1|, |c^2|, ... up to the step that decided
  /// When n is set: whether c^(n+1) also contains every irreducible.
  std::optional<bool> monotone_next;
};

/// Throws InvalidArgument when c is zero or trivial, or max_n < 1.
CoveringReport covering_number(const ClassFunctionCombo& c, unsigned max_n);

struct BoundReport {
  mpz_class lhs;  // |chi_1 ... chi_n|
  mpz_class rhs;  // max_i |chi_i|
  bool holds = false;  // lhs >= rhs
  bool strict_expected = false;  // quasisimple table and no trivial factor
  bool strict_holds = false;  // lhs > rhs
};

BoundReport verify_bound1(const CharacterTablePtr& table, const std::vector<std::size_t>& factors);

struct PowerPositivity {
  std::size_t first;
  std::size_t second;
  mpz_class multiplicity;  // <chi_first^k, chi_second>
};

/// <chi_i^k, chi_j> for every ordered pair of nontrivial irreducibles.
std::vector<PowerPositivity> power_positivity(const CharacterTablePtr& table, unsigned k);

/// Random combo with between 1 and max_support distinct constituents and
/// multiplicities in 1..max_mult.
ClassFunctionCombo random_combo(const CharacterTablePtr& table, std::mt19937_64& rng, std::size_t max_support = 3,
                                unsigned max_mult = 3);

struct InequalityCheck {
  bool subadditive = false;  // |a+b| <= |a|+|b|
  bool submultiplicative = false;  // |ab| <= |a||b|
  bool cauchy_schwarz = false;  // <ab,ab> <= sigma(a^2) sigma(b^2)
};

InequalityCheck check_measure_inequalities(const ClassFunctionCombo& a, const ClassFunctionCombo& b);

struct ReducibleSearchReport {
  std::size_t trials = 0;
  /// Products of reducible factors with |a b| < max(|a|, |b|).
  std::vector<std::pair<ClassFunctionCombo, ClassFunctionCombo>> hits;
};

/// Seeded search over random reducible pairs; reports, never asserts.
ReducibleSearchReport reducible_factor_search(const CharacterTablePtr& table, std::size_t trials, std::uint64_t seed);

}  // namespace repgrowth
