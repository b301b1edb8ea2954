#include "repgrowth/character_table.hpp"

#include <map>
#include <unordered_map>

#include "inner_product.hpp"
#include "repgrowth/error.hpp"

namespace repgrowth {

namespace {

std::string row_name(std::size_t i) { return "chi_" + std::to_string(i); }

}  // namespace

CharacterTable::CharacterTable(std::string name, mpz_class order, std::vector<ConjugacyClass> classes,
                               std::vector<std::vector<Cyclotomic>> characters)
    : name_(std::move(name)), order_(std::move(order)), classes_(std::move(classes)), values_(std::move(characters)) {
  validate_shape();
  build_numeric_view();
  validate_orthogonality();
  derive_structure();
}

void CharacterTable::validate_shape() {
  if (classes_.empty()) fail(ErrorCode::Schema, "character table has no classes");
  if (order_ <= 0) fail(ErrorCode::Schema, "group order must be positive");
  if (values_.size() != classes_.size())
    fail(ErrorCode::SizeMismatch, std::to_string(values_.size()) + " characters but " +
                                      std::to_string(classes_.size()) + " classes");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i].size() != classes_.size())
      fail(ErrorCode::SizeMismatch, row_name(i) + " has " + std::to_string(values_[i].size()) + " values but there are " +
                                        std::to_string(classes_.size()) + " classes");

  mpz_class total = 0;
  for (const auto& c : classes_) {
    if (c.size <= 0) fail(ErrorCode::Schema, "class \"" + c.label + "\" has non-positive size");
    total += c.size;
  }
  if (total != order_)
    fail(ErrorCode::SizeMismatch, "class sizes sum to " + total.get_str() + ", expected |G| = " + order_.get_str());
  if (classes_[0].size != 1) fail(ErrorCode::Schema, "the first class must be the identity (size 1)");

  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (const auto& v : values_[i])
      for (const auto& [e, c] : v.coeffs())
        if (c.get_den() != 1)
          fail(ErrorCode::Schema, row_name(i) + " has a non-integral value " + v.to_string() +
                                      " (character values are algebraic integers)");
    const Cyclotomic& d = values_[i][0];
    if (!d.is_rational() || d.to_rational() <= 0)
      fail(ErrorCode::Schema, row_name(i) + " has degree " + d.to_string() + ", expected a positive integer");
    degrees_.push_back(d.to_rational().get_num());
  }

  mpz_class squares = 0;
  for (const auto& d : degrees_) squares += d * d;
  if (squares != order_)
    fail(ErrorCode::SizeMismatch, "sum of squared degrees is " + squares.get_str() + ", expected |G| = " + order_.get_str());

  bool found_trivial = false;
  for (std::size_t i = 0; i < values_.size() && !found_trivial; ++i) {
    bool all_one = true;
    for (const auto& v : values_[i])
      if (!(v == Cyclotomic(1L))) {
        all_one = false;
        break;
      }
    if (all_one) {
      trivial_ = i;
      found_trivial = true;
    }
  }
  if (!found_trivial) fail(ErrorCode::Schema, "no trivial character in table");
}

void CharacterTable::build_numeric_view() {
  std::map<std::uint32_t, std::size_t> group_of;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    std::uint32_t n = 1;
    for (const auto& row : values_) n = lcm_conductor(n, row[c].conductor());
    ColumnView col;
    col.conductor = n;
    for (const auto& row : values_) {
      const Cyclotomic& v = row[c];
      const std::uint32_t step = n / v.conductor();
      std::vector<RawTerm> terms;
      for (const auto& [e, q] : v.coeffs()) {
        RawTerm t{static_cast<std::uint32_t>((static_cast<std::uint64_t>(e) * step) % n), q.get_num(), 0, false};
        t.fits64 = t.coef.fits_slong_p();
        if (t.fits64) t.coef64 = t.coef.get_si();
        terms.push_back(std::move(t));
      }
      col.rows.push_back(std::move(terms));
    }
    auto [it, inserted] = group_of.try_emplace(n, groups_.size());
    if (inserted) groups_.push_back(ConductorGroup{n, ZumbroichBasis::get(n), {}});
    col.group = it->second;
    groups_[it->second].columns.push_back(c);
    columns_.push_back(std::move(col));
  }
  row_terms_.assign(values_.size(), {});
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (std::size_t i = 0; i < values_.size(); ++i)
      for (const auto& t : columns_[c].rows[i])
        row_terms_[i].push_back({static_cast<std::uint32_t>(c), t.exponent, t.coef64, t.fits64, &t.coef});
}

void CharacterTable::validate_orthogonality() {
  const std::size_t k = values_.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<mpz_class> unit(k, 0);
    unit[i] = 1;
    detail::with_fallback([&](auto zero) {
      using Int = decltype(zero);
      const auto wf = detail::weighted(*this, detail::combo_values<Int>(*this, unit));
      for (std::size_t j = i; j < k; ++j) {
        mpq_class ip;
        try {
          ip = detail::inner_with_character(*this, wf, j);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Domain) throw;
          fail(ErrorCode::Orthogonality, "<" + row_name(i) + ", " + row_name(j) + "> is not rational");
        }
        const mpq_class expected = (i == j) ? 1 : 0;
        if (ip != expected)
          fail(ErrorCode::Orthogonality, "<" + row_name(i) + ", " + row_name(j) + "> = " + ip.get_str() +
                                             ", expected " + expected.get_str());
      }
      return 0;
    });
  }
}

void CharacterTable::derive_structure() {
  const std::size_t k = values_.size();
  conjugates_.assign(k, k);
  auto signature = [](const std::vector<Cyclotomic>& row) {
    std::string key;
    for (const auto& v : row) key += v.to_string() + '|';
    return key;
  };
  std::unordered_map<std::string, std::size_t> by_signature;
  for (std::size_t i = 0; i < k; ++i) by_signature.emplace(signature(values_[i]), i);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Cyclotomic> conj;
    for (const auto& v : values_[i]) conj.push_back(v.conj());
    auto it = by_signature.find(signature(conj));
    if (it != by_signature.end()) {
      conjugates_[i] = it->second;
      continue;
    }
    // Same values may be written over different conductors.
    for (std::size_t j = 0; j < k && conjugates_[i] == k; ++j)
      if (values_[j] == conj) conjugates_[i] = j;
    if (conjugates_[i] == k) fail(ErrorCode::Schema, "complex conjugate of " + row_name(i) + " is missing");
  }

  std::vector<bool> central(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) central[c] = classes_[c].size == 1;
  quasisimple_ = is_perfect();
  for (std::size_t i = 0; i < k && quasisimple_; ++i) {
    if (i == trivial_) continue;
    const Cyclotomic deg(degrees_[i]);
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (!central[c] && values_[i][c] == deg) {
        quasisimple_ = false;
        break;
      }
  }
}

std::size_t CharacterTable::num_linear() const {
  std::size_t n = 0;
  for (const auto& d : degrees_)
    if (d == 1) ++n;
  return n;
}

std::optional<std::size_t> CharacterTable::find_degree(const mpz_class& degree) const {
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == degree) return i;
  return std::nullopt;
}

mpq_class CharacterTable::inner_product(std::size_t i, std::size_t j) const {
  if (i >= num_characters() || j >= num_characters()) fail(ErrorCode::InvalidArgument, "character index out of range");
  std::vector<mpz_class> unit(num_characters(), 0);
  unit[i] = 1;
  return detail::with_fallback([&](auto zero) {
    using Int = decltype(zero);
    return detail::inner_with_character(*this, detail::weighted(*this, detail::combo_values<Int>(*this, unit)), j);
  });
}

}  // namespace repgrowth
