#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/weight.hpp"

namespace repgrowth {

/// One simple factor of a semisimple Cartan type, e.g. {'B', 3}.
struct SimpleFactor {
  char family;
  int rank;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

class CartanType {
 public:
  explicit CartanType(std::vector<SimpleFactor> factors);

  /// Parses "A2", "b3", "A1xA1", "G2xA3" (case-insensitive, 'x' joins factors).
  static CartanType parse(std::string_view text);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int rank() const;
  std::string to_string() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  std::vector<SimpleFactor> factors_;
};

/// Outcome of moving a weight into the closed dominant chamber by simple
/// reflections.
struct ChamberReduction {
  Weight dominant;
  int sign = 1;          // (-1)^(number of reflections applied)
  bool on_wall = false;  // some coordinate of the result is zero
};

/// Cartan data for a compact semisimple type. Weights and roots are both kept in
/// fundamental-weight coordinates; the inner form is normalized so that long
/// roots of every simple factor have squared length 2.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }

  /// Cartan matrix entry <alpha_i, alpha_j> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
  const std::vector<std::vector<std::int64_t>>& cartan_matrix() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const Weight& simple_root(int i) const { return simple_roots_.at(static_cast<std::size_t>(i)); }

  /// Positive roots, ordered by height then lexicographically on simple-root coordinates.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Same roots expressed on the simple-root basis (non-negative integers).
  const std::vector<std::vector<std::int64_t>>& positive_roots_simple() const { return positive_simple_; }
  std::size_t num_positive_roots() const { return positive_roots_.size(); }

  Weight weyl_vector() const { return Weight::constant(static_cast<std::size_t>(rank_), 1); }

  /// Gram matrix of the fundamental weights, (varpi_i, varpi_j).
  const std::vector<std::vector<mpq_class>>& inner_form() const { return form_; }

  mpq_class inner(const Weight& x, const Weight& y) const;

  /// <lambda, alpha> = 2(lambda, alpha)/(alpha, alpha); alpha must be a root.
  mpq_class pairing(const Weight& lambda, const Weight& alpha) const;

  bool is_root(const Weight& w) const;

  /// (alpha_i, alpha_i)/2 for each simple root.
  const std::vector<mpq_class>& half_norms() const { return half_norms_; }

  /// Integer-scaled inner form: scaled_inner(x,y) = scale() * (x,y).
  std::int64_t scaled_inner(const Weight& x, const Weight& y) const;
  std::int64_t scale() const { return scale_; }
  /// For each positive root alpha, integer vector v with v.x = coroot_scale() * (x, alpha).
  const std::vector<std::vector<std::int64_t>>& root_functionals() const { return root_functionals_; }
  std::int64_t coroot_scale() const { return coroot_scale_; }

  /// s_i(x) = x - x_i alpha_i.
  Weight reflect(const Weight& x, int i) const;
  ChamberReduction to_dominant(Weight x) const;

  /// Height of a root-lattice element given on the fundamental-weight basis;
  /// returned as a rational since general weights need not lie in the root lattice.
  std::vector<mpq_class> simple_coordinates(const Weight& x) const;

  void check_weight(const Weight& w) const;

 private:
  void build_positive_roots();

  CartanType type_;
  int rank_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<std::int64_t>> positive_simple_;
  std::vector<mpq_class> half_norms_;
  std::vector<std::vector<mpq_class>> form_;
  std::vector<std::vector<mpq_class>> cartan_inverse_;
  std::vector<std::vector<std::int64_t>> scaled_form_;
  std::int64_t scale_ = 1;
  std::vector<std::vector<std::int64_t>> root_functionals_;
  std::int64_t coroot_scale_ = 1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(const CartanType& type);
RootSystemPtr build_root_system(std::string_view type);

}  // namespace repgrowth
