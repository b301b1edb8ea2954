#include "repgrowth/growth.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "repgrowth/error.hpp"

namespace repgrowth {

namespace {

double log_of(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::string coords_field(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) s += ';';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

mpz_class plancherel_measure(const VirtualCharacter& v) {
  mpz_class total = 0;
  for (const auto& [w, m] : v.terms()) {
    const mpz_class d = dimension(v.root_system(), w);
    total += d * d;
  }
  return total;
}

double log_ratio(const mpz_class& a, const mpz_class& b) {
  if (a <= 0 || b <= 0) fail(ErrorCode::Domain, "logarithm of a non-positive integer");
  if (b == 1) fail(ErrorCode::Domain, "log ratio undefined: denominator is log 1");
  return log_of(a) / log_of(b);
}

GrowthReport growth_report(const Irrep& h) {
  GrowthReport r;
  r.highest = h.highest_weight();
  r.dimension = dimension(h);
  r.measure = r.dimension * r.dimension;
  const VirtualCharacter sq = power_decompose(h, 2);
  r.measure_sq = plancherel_measure(sq);
  r.constituents_sq = sq.num_constituents();
  if (r.measure > 1) r.exponent = log_ratio(r.measure_sq, r.measure);
  return r;
}

std::pair<mpz_class, mpz_class> su2_growth_closed_form(std::uint64_t n) {
  const mpz_class m = mpz_class(static_cast<unsigned long>(n)) + 1;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned long>(n) + 3, 3);
  return {m * m, binom};
}

GrowthReport weyl_delta_family_report(int n, std::int64_t k) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "SU(n) family requires n >= 2");
  if (k < 1) fail(ErrorCode::InvalidArgument, "SU(n) family requires k >= 1");
  auto rs = build_root_system(CartanType({{'A', n - 1}}));
  Irrep h(rs, Weight::constant(static_cast<std::size_t>(n - 1), k));
  GrowthReport r = growth_report(h);
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(k + 1),
                static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1) / 2);
  if (r.dimension != expected) fail(ErrorCode::Internal, "dimension of k*delta disagrees with (k+1)^{n(n-1)/2}");
  return r;
}

StrictGrowthWitness strict_growth_witness(const Irrep& first, const VirtualCharacter& second) {
  if (first.highest_weight().is_zero()) fail(ErrorCode::Domain, "strict growth needs a nontrivial first character");
  if (second.empty()) fail(ErrorCode::Domain, "strict growth needs a nonzero second character");
  if (second.num_constituents() == 1 && second.terms().begin()->first.is_zero())
    fail(ErrorCode::Domain, "strict growth needs a nontrivial second character");
  StrictGrowthWitness w;
  const RootSystem& rs = first.root_system();
  w.measure_first = dimension(first) * dimension(first);
  w.measure_second = plancherel_measure(second);
  w.lower_bound = 0;
  for (const auto& [mu, m] : second.terms()) {
    Weight top = first.highest_weight() + mu;
    const mpz_class d = dimension(rs, top);
    w.lower_bound += d * d;
    w.witness.push_back(std::move(top));
  }
  w.holds = w.lower_bound > w.measure_second;
  return w;
}

StrictGrowthWitness strict_growth_check(const Irrep& h1, const Irrep& h2) {
  if (h1.highest_weight().is_zero() || h2.highest_weight().is_zero())
    fail(ErrorCode::Domain, "strict growth requires nontrivial characters");
  StrictGrowthWitness w = strict_growth_witness(h1, VirtualCharacter::irreducible(h2));
  w.measure_second = dimension(h2) * dimension(h2);
  w.holds = w.lower_bound > w.measure_first && w.lower_bound > w.measure_second;
  return w;
}

std::vector<Weight> sweep_weights(const RootSystem& rs, std::int64_t max_coord) {
  if (max_coord < 0) fail(ErrorCode::InvalidArgument, "sweep bound must be non-negative");
  const auto r = static_cast<std::size_t>(rs.rank());
  std::vector<Weight> out;
  Weight w(r);
  for (;;) {
    if (!w.is_zero()) out.push_back(w);
    std::size_t i = r;
    while (i > 0 && w[i - 1] == max_coord) {
      w[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

void growth_sweep(const RootSystemPtr& rs, std::int64_t max_coord, unsigned threads,
                  const std::function<void(const SweepRow&)>& sink) {
  const auto weights = sweep_weights(*rs, max_coord);
  const std::string type = rs->type().to_string();
  if (threads == 0) threads = 1;
  constexpr std::size_t kBlock = 64;
  for (std::size_t start = 0; start < weights.size(); start += kBlock) {
    const std::size_t end = std::min(weights.size(), start + kBlock);
    std::vector<SweepRow> rows(end - start);
    std::atomic<std::size_t> next{start};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
      for (std::size_t i = next++; i < end; i = next++) {
        try {
          rows[i - start] = SweepRow{type, growth_report(Irrep(rs, weights[i]))};
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && t < end - start; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    for (const auto& row : rows) sink(row);
  }
}

void su2_closed_form_sweep(std::int64_t max_n, const std::function<void(const SweepRow&)>& sink) {
  for (std::int64_t n = 1; n <= max_n; ++n) {
    SweepRow row;
    row.cartan_type = "A1";
    row.report.highest = Weight{n};
    row.report.dimension = mpz_class(n) + 1;
    auto [m, msq] = su2_growth_closed_form(static_cast<std::uint64_t>(n));
    row.report.measure = m;
    row.report.measure_sq = msq;
    row.report.exponent = log_ratio(msq, m);
    row.report.constituents_sq = static_cast<std::size_t>(n + 1);
    sink(row);
  }
}

std::string sweep_csv_header() { return "cartan_type,lambda_coords,dim,measure,measure_sq,exponent,constituents_sq"; }

int digits_for_bits(int bits) { return static_cast<int>(std::ceil(bits * std::log10(2.0))); }

std::string format_exponent(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string sweep_csv_line(const SweepRow& row, int digits) {
  const auto& r = row.report;
  std::string line = row.cartan_type;
  line += ',' + coords_field(r.highest);
  line += ',' + r.dimension.get_str();
  line += ',' + r.measure.get_str();
  line += ',' + r.measure_sq.get_str();
  line += ',';
  if (r.exponent) line += format_exponent(*r.exponent, digits);
  line += ',' + std::to_string(r.constituents_sq);
  return line;
}

}  // namespace repgrowth
