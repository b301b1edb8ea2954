#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/root_system.hpp"
#include "repgrowth/weight.hpp"

namespace repgrowth {

/// Irreducible representation of a compact semisimple group, named by its
/// dominant highest weight.
class Irrep {
 public:
  Irrep(RootSystemPtr rs, Weight highest);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const Weight& highest_weight() const { return highest_; }

 private:
  RootSystemPtr rs_;
  Weight highest_;
};

using WeightMultiset = std::map<Weight, mpz_class>;

/// Non-negative integer combination of irreducible characters, keyed by
/// highest weight. Zero multiplicities are never stored.
class VirtualCharacter {
 public:
  explicit VirtualCharacter(RootSystemPtr rs) : rs_(std::move(rs)) {}

  static VirtualCharacter irreducible(const Irrep& irrep);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const std::map<Weight, mpz_class>& terms() const { return terms_; }
  std::size_t num_constituents() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Multiplicity of the constituent with the given highest weight (0 if absent).
  mpz_class multiplicity(const Weight& w) const;

  /// Adds mult copies of the irreducible with highest weight w; mult may be
  /// negative while a decomposition is being accumulated.
  void add(const Weight& w, const mpz_class& mult);

  /// Total dimension sum_mu m_mu dim(mu).
  mpz_class dimension() const;

  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) { return a.terms_ == b.terms_; }

 private:
  RootSystemPtr rs_;
  std::map<Weight, mpz_class> terms_;
};

/// Weyl dimension formula.
mpz_class dimension(const RootSystem& rs, const Weight& highest);
inline mpz_class dimension(const Irrep& h) { return dimension(h.root_system(), h.highest_weight()); }

/// Multiplicities of the dominant weights of an irreducible, computed by
/// Freudenthal's recursion.
WeightMultiset dominant_multiplicities(const RootSystem& rs, const Weight& highest);

/// Full weight system: dominant multiplicities spread over Weyl orbits.
WeightMultiset weight_multiplicities(const Irrep& h);

/// All weights in the Weyl orbit of w (obtained by simple reflections).
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

/// chi_{h1} (x) chi_{h2} by the Brauer-Klimyk rule, shifting by the weights of
/// the lower-dimensional factor.
VirtualCharacter tensor_decompose(const Irrep& h1, const Irrep& h2);

/// v (x) chi_h, using the weight system of h.
VirtualCharacter tensor_with(const VirtualCharacter& v, const Irrep& h);

/// chi_h^k; k = 0 gives the trivial character.
VirtualCharacter power_decompose(const Irrep& h, unsigned k);

/// [2 lambda - k alpha_i for k = 0..a_i], each of which occurs in chi_lambda^2.
std::vector<Weight> brauer_constituent_family(const Irrep& h, int simple_index);

}  // namespace repgrowth
