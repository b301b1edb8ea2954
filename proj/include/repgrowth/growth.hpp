#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/weyl_char.hpp"

namespace repgrowth {

/// |X|: sum of dim^2 over the distinct constituents, multiplicities ignored.
mpz_class plancherel_measure(const VirtualCharacter& v);

/// log(a)/log(b) from exact positive integers, in double precision.
double log_ratio(const mpz_class& a, const mpz_class& b);

struct GrowthReport {
  Weight highest;
  mpz_class dimension;
  mpz_class measure;     // |chi|
  mpz_class measure_sq;  // |chi^2|
  std::optional<double> exponent;  // log|chi^2| / log|chi|, absent when |chi| = 1
  std::size_t constituents_sq = 0;
};

GrowthReport growth_report(const Irrep& h);

/// (|chi_n|, |chi_n^2|) = ((n+1)^2, C(2n+3, 3)) for SU(2).
std::pair<mpz_class, mpz_class> su2_growth_closed_form(std::uint64_t n);

/// Growth of chi_{k delta} on SU(n), i.e. type A_{n-1}.
GrowthReport weyl_delta_family_report(int n, std::int64_t k);

struct StrictGrowthWitness {
  bool holds = false;
  /// Highest weights lambda_1 + mu_i of the Cartan components used as witness.
  std::vector<Weight> witness;
  /// sum_i dim(lambda_1 + mu_i)^2, a lower bound for |chi_1 chi_2|.
  mpz_class lower_bound;
  mpz_class measure_first;
  mpz_class measure_second;
};

/// |chi_1 chi_2| > |chi_2| for nontrivial irreducible chi_1 and any nonzero chi_2,
/// witnessed by the Cartan components lambda_1 + mu_i.
StrictGrowthWitness strict_growth_witness(const Irrep& first, const VirtualCharacter& second);

/// Both directions for two nontrivial irreducibles: |chi_1 chi_2| > max(|chi_1|, |chi_2|).
StrictGrowthWitness strict_growth_check(const Irrep& h1, const Irrep& h2);

/// One row of a growth sweep.
struct SweepRow {
  std::string cartan_type;
  GrowthReport report;
};

/// All nontrivial dominant weights with every coordinate in [0, max_coord],
/// lexicographic, first coordinate slowest.
std::vector<Weight> sweep_weights(const RootSystem& rs, std::int64_t max_coord);

/// Evaluates growth_report over sweep_weights in blocks on `threads` workers and
/// hands rows to `sink` in sweep order.
void growth_sweep(const RootSystemPtr& rs, std::int64_t max_coord, unsigned threads,
                  const std::function<void(const SweepRow&)>& sink);

/// Closed-form SU(2) rows for n = 1..max_n, formatted like growth_sweep rows.
void su2_closed_form_sweep(std::int64_t max_n, const std::function<void(const SweepRow&)>& sink);

std::string sweep_csv_header();
/// Exponent printed with `digits` significant digits; empty when undefined.
std::string sweep_csv_line(const SweepRow& row, int digits);

/// Significant decimal digits corresponding to `bits` binary digits.
int digits_for_bits(int bits);
std::string format_exponent(double x, int digits);

}  // namespace repgrowth
