#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/cyclotomic.hpp"

namespace repgrowth {

struct ConjugacyClass {
  mpz_class size;
  std::string label;
};

/// Character values of one column rewritten over the column conductor:
/// chi(g) = sum coef * zeta_N^exponent with integral coefficients.
struct RawTerm {
  std::uint32_t exponent;
  mpz_class coef;
  std::int64_t coef64;
  bool fits64;
};

/// The same terms laid out row by row, for sweeps over one character.
struct RowTerm {
  std::uint32_t cls;
  std::uint32_t exponent;
  std::int64_t coef64;
  bool fits64;
  const mpz_class* coef;
};

struct ColumnView {
  std::uint32_t conductor;
  std::size_t group;  // index into ConductorGroup list
  std::vector<std::vector<RawTerm>> rows;  // rows[i] = terms of chi_i on this class
};

struct ConductorGroup {
  std::uint32_t conductor;
  std::shared_ptr<const ZumbroichBasis> basis;
  std::vector<std::size_t> columns;
};

/// Validated character table of a finite group. Construction checks every
/// invariant exactly and throws Error (Schema, SizeMismatch or Orthogonality)
/// on the first violation; a constructed table is immutable.
class CharacterTable {
 public:
  CharacterTable(std::string name, mpz_class order, std::vector<ConjugacyClass> classes,
                 std::vector<std::vector<Cyclotomic>> characters);
  // Row terms point into the column view.
  CharacterTable(const CharacterTable&) = delete;
  CharacterTable& operator=(const CharacterTable&) = delete;

  const std::string& name() const { return name_; }
  const mpz_class& order() const { return order_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t num_characters() const { return values_.size(); }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<std::vector<Cyclotomic>>& values() const { return values_; }
  const Cyclotomic& value(std::size_t character, std::size_t cls) const { return values_.at(character).at(cls); }
  const mpz_class& degree(std::size_t character) const { return degrees_.at(character); }
  const std::vector<mpz_class>& degrees() const { return degrees_; }

  std::size_t trivial_index() const { return trivial_; }
  /// Index of the complex-conjugate character.
  std::size_t conjugate_index(std::size_t character) const { return conjugates_.at(character); }
  std::size_t num_linear() const;
  bool is_perfect() const { return num_linear() == 1; }
  /// Perfect and every proper normal subgroup central (read off kernels).
  bool is_quasisimple() const { return quasisimple_; }

  /// First irreducible of the given degree, if any.
  std::optional<std::size_t> find_degree(const mpz_class& degree) const;

  const std::vector<ColumnView>& columns() const { return columns_; }
  const std::vector<ConductorGroup>& conductor_groups() const { return groups_; }
  const std::vector<RowTerm>& row_terms(std::size_t character) const { return row_terms_[character]; }

  /// Exact <chi_i, chi_j>.
  mpq_class inner_product(std::size_t i, std::size_t j) const;

 private:
  void validate_shape();
  void build_numeric_view();
  void validate_orthogonality();
  void derive_structure();

  std::string name_;
  mpz_class order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<mpz_class> degrees_;
  std::size_t trivial_ = 0;
  std::vector<std::size_t> conjugates_;
  bool quasisimple_ = false;
  std::vector<ColumnView> columns_;
  std::vector<ConductorGroup> groups_;
  std::vector<std::vector<RowTerm>> row_terms_;
};

using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

/// PSL_2(q), q an odd prime power >= 5, from the generic SL_2(q) table.
CharacterTablePtr build_psl2_table(std::uint64_t q);

/// Character table shared by the extraspecial groups of order p^(1+2n).
CharacterTablePtr build_extraspecial_table(std::uint64_t p, std::uint64_t n);

/// "psl2:7", "extraspecial:3:1".
CharacterTablePtr builtin_table(std::string_view name);

/// JSON ingestion and export (schema documented in the README).
CharacterTablePtr load_table(std::string_view json_text);
std::string table_to_json(const CharacterTable& table);

}  // namespace repgrowth
