#include "repgrowth/class_function.hpp"

#include <algorithm>

#include "inner_product.hpp"
#include "repgrowth/error.hpp"

namespace repgrowth {

namespace {

void require_table(const CharacterTablePtr& t) {
  if (!t) fail(ErrorCode::InvalidArgument, "class function needs a character table");
}

/// Multiplicities of every irreducible in the class function with the given values.
template <class Int>
std::vector<mpz_class> project(const CharacterTable& t, const detail::ClassValues<Int>& values) {
  const auto wf = detail::weighted(t, values);
  std::vector<mpz_class> mults;
  mults.reserve(t.num_characters());
  for (std::size_t g = 0; g < t.num_characters(); ++g) {
    const mpq_class m = detail::inner_with_character(t, wf, g);
    if (m.get_den() != 1 || m < 0)
      fail(ErrorCode::Internal, "multiplicity of chi_" + std::to_string(g) + " is " + m.get_str() +
                                    "; the table or the product is inconsistent");
    mults.push_back(m.get_num());
  }
  return mults;
}

}  // namespace

ClassFunctionCombo::ClassFunctionCombo(CharacterTablePtr table) : table_(std::move(table)) {
  require_table(table_);
  mults_.assign(table_->num_characters(), 0);
}

ClassFunctionCombo::ClassFunctionCombo(CharacterTablePtr table, std::vector<mpz_class> mults)
    : table_(std::move(table)), mults_(std::move(mults)) {
  require_table(table_);
  if (mults_.size() != table_->num_characters())
    fail(ErrorCode::InvalidArgument, "combo has " + std::to_string(mults_.size()) + " multiplicities, table has " +
                                         std::to_string(table_->num_characters()) + " irreducibles");
  for (const auto& m : mults_)
    if (m < 0) fail(ErrorCode::InvalidArgument, "combo multiplicities must be non-negative");
}

ClassFunctionCombo ClassFunctionCombo::irreducible(CharacterTablePtr table, std::size_t index) {
  ClassFunctionCombo c(std::move(table));
  if (index >= c.mults_.size())
    fail(ErrorCode::InvalidArgument, "character index " + std::to_string(index) + " out of range");
  c.mults_[index] = 1;
  return c;
}

ClassFunctionCombo ClassFunctionCombo::all_irreducibles(CharacterTablePtr table) {
  ClassFunctionCombo c(std::move(table));
  std::fill(c.mults_.begin(), c.mults_.end(), mpz_class(1));
  return c;
}

bool ClassFunctionCombo::is_zero() const {
  return std::all_of(mults_.begin(), mults_.end(), [](const mpz_class& m) { return m == 0; });
}

bool ClassFunctionCombo::is_trivial() const {
  for (std::size_t i = 0; i < mults_.size(); ++i)
    if ((i == table_->trivial_index()) != (mults_[i] > 0)) return false;
  return true;
}

mpz_class ClassFunctionCombo::degree() const {
  mpz_class d = 0;
  for (std::size_t i = 0; i < mults_.size(); ++i) d += mults_[i] * table_->degree(i);
  return d;
}

std::size_t ClassFunctionCombo::num_constituents() const {
  return static_cast<std::size_t>(std::count_if(mults_.begin(), mults_.end(), [](const mpz_class& m) { return m > 0; }));
}

ClassFunctionCombo& ClassFunctionCombo::operator+=(const ClassFunctionCombo& o) {
  if (table_ != o.table_) fail(ErrorCode::InvalidArgument, "cannot add class functions of different tables");
  for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] += o.mults_[i];
  return *this;
}

ClassFunctionCombo decompose_product(const CharacterTablePtr& table, const std::vector<ClassFunctionCombo>& factors) {
  require_table(table);
  if (factors.empty()) fail(ErrorCode::InvalidArgument, "product needs at least one factor");
  mpz_class expected_degree = 1;
  for (const auto& f : factors) {
    if (f.table() != table) fail(ErrorCode::InvalidArgument, "factor belongs to a different character table");
    expected_degree *= f.degree();
  }
  auto mults = detail::with_fallback([&](auto zero) {
    using Int = decltype(zero);
    auto values = detail::combo_values<Int>(*table, factors[0].mults());
    for (std::size_t i = 1; i < factors.size(); ++i)
      values = detail::multiply(values, detail::combo_values<Int>(*table, factors[i].mults()));
    return project(*table, values);
  });
  ClassFunctionCombo out(table, std::move(mults));
  if (out.degree() != expected_degree)
    fail(ErrorCode::Internal, "degree not conserved: constituents give " + out.degree().get_str() + ", product has " +
                                  expected_degree.get_str());
  return out;
}

ClassFunctionCombo power(const ClassFunctionCombo& c, unsigned k) {
  if (k == 0) return ClassFunctionCombo::irreducible(c.table(), c.table()->trivial_index());
  return decompose_product(c.table(), std::vector<ClassFunctionCombo>(k, c));
}

mpz_class plancherel_measure_finite(const ClassFunctionCombo& c) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < c.mults().size(); ++i)
    if (c.mult(i) > 0) s += c.table()->degree(i) * c.table()->degree(i);
  return s;
}

mpz_class multiplicity_sum(const ClassFunctionCombo& c) {
  mpz_class s = 0;
  for (const auto& m : c.mults()) s += m;
  return s;
}

mpz_class multiplicity_norm(const ClassFunctionCombo& c) {
  mpz_class s = 0;
  for (const auto& m : c.mults()) s += m * m;
  return s;
}

CoveringReport covering_number(const ClassFunctionCombo& c, unsigned max_n) {
  if (max_n < 1) fail(ErrorCode::InvalidArgument, "max_N must be at least 1");
  if (c.is_zero()) fail(ErrorCode::InvalidArgument, "covering number of the zero character is undefined");
  if (c.is_trivial()) fail(ErrorCode::InvalidArgument, "the trivial character never covers a nontrivial group");
  const CharacterTable& t = *c.table();
  return detail::with_fallback([&](auto zero) {
    using Int = decltype(zero);
    CoveringReport report;
    const auto base = detail::combo_values<Int>(t, c.mults());
    auto values = base;
    auto covers = [&](const std::vector<mpz_class>& mults) {
      return std::all_of(mults.begin(), mults.end(), [](const mpz_class& m) { return m > 0; });
    };
    for (unsigned n = 1; n <= max_n; ++n) {
      if (n > 1) values = detail::multiply(values, base);
      const ClassFunctionCombo step(c.table(), project(t, values));
      report.measures.push_back(plancherel_measure_finite(step));
      if (covers(step.mults())) {
        report.n = n;
        values = detail::multiply(values, base);
        report.monotone_next = covers(project(t, values));
        break;
      }
    }
    return report;
  });
}

BoundReport verify_bound1(const CharacterTablePtr& table, const std::vector<std::size_t>& factors) {
  require_table(table);
  std::vector<ClassFunctionCombo> combos;
  BoundReport r;
  r.rhs = 0;
  bool has_trivial = false;
  for (std::size_t i : factors) {
    combos.push_back(ClassFunctionCombo::irreducible(table, i));
    const mpz_class d2 = table->degree(i) * table->degree(i);
    if (d2 > r.rhs) r.rhs = d2;
    has_trivial = has_trivial || i == table->trivial_index();
  }
  r.lhs = plancherel_measure_finite(decompose_product(table, combos));
  r.holds = r.lhs >= r.rhs;
  r.strict_expected = table->is_quasisimple() && !has_trivial && factors.size() >= 2;
  r.strict_holds = r.lhs > r.rhs;
  return r;
}

std::vector<PowerPositivity> power_positivity(const CharacterTablePtr& table, unsigned k) {
  require_table(table);
  std::vector<PowerPositivity> out;
  for (std::size_t i = 0; i < table->num_characters(); ++i) {
    if (i == table->trivial_index()) continue;
    const auto p = power(ClassFunctionCombo::irreducible(table, i), k);
    for (std::size_t j = 0; j < table->num_characters(); ++j)
      if (j != table->trivial_index()) out.push_back({i, j, p.mult(j)});
  }
  return out;
}

ClassFunctionCombo random_combo(const CharacterTablePtr& table, std::mt19937_64& rng, std::size_t max_support,
                                unsigned max_mult) {
  require_table(table);
  if (max_support < 1 || max_mult < 1) fail(ErrorCode::InvalidArgument, "random combo needs support and multiplicity >= 1");
  ClassFunctionCombo c(table);
  std::vector<mpz_class> mults(table->num_characters(), 0);
  std::uniform_int_distribution<std::size_t> support(1, std::min(max_support, mults.size()));
  std::uniform_int_distribution<std::size_t> index(0, mults.size() - 1);
  std::uniform_int_distribution<unsigned> mult(1, max_mult);
  const std::size_t s = support(rng);
  for (std::size_t placed = 0; placed < s;) {
    const std::size_t i = index(rng);
    if (mults[i] != 0) continue;
    mults[i] = mult(rng);
    ++placed;
  }
  return ClassFunctionCombo(table, std::move(mults));
}

InequalityCheck check_measure_inequalities(const ClassFunctionCombo& a, const ClassFunctionCombo& b) {
  const auto& t = a.table();
  InequalityCheck r;
  const mpz_class ma = plancherel_measure_finite(a), mb = plancherel_measure_finite(b);
  r.subadditive = plancherel_measure_finite(a + b) <= ma + mb;
  const auto ab = decompose_product(t, {a, b});
  r.submultiplicative = plancherel_measure_finite(ab) <= ma * mb;
  const mpz_class sa = multiplicity_sum(decompose_product(t, {a, a}));
  const mpz_class sb = multiplicity_sum(decompose_product(t, {b, b}));
  r.cauchy_schwarz = multiplicity_norm(ab) <= sa * sb;
  return r;
}

ReducibleSearchReport reducible_factor_search(const CharacterTablePtr& table, std::size_t trials, std::uint64_t seed) {
  require_table(table);
  std::mt19937_64 rng(seed);
  ReducibleSearchReport report;
  for (; report.trials < trials; ++report.trials) {
    auto a = random_combo(table, rng);
    auto b = random_combo(table, rng);
    const mpz_class lhs = plancherel_measure_finite(decompose_product(table, {a, b}));
    if (lhs < std::max(plancherel_measure_finite(a), plancherel_measure_finite(b)))
      report.hits.emplace_back(std::move(a), std::move(b));
  }
  return report;
}

}  // namespace repgrowth
