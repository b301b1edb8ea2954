#include "repgrowth/weyl_char.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "repgrowth/error.hpp"

namespace repgrowth {

namespace {

void require_dominant(const RootSystem& rs, const Weight& w) {
  rs.check_weight(w);
  if (!w.is_dominant()) fail(ErrorCode::Domain, "highest weight " + w.to_string() + " is not dominant");
}

void require_same_system(const RootSystem& a, const RootSystem& b) {
  if (&a != &b && !(a.type() == b.type()))
    fail(ErrorCode::InvalidArgument,
         "root systems differ: " + a.type().to_string() + " vs " + b.type().to_string());
}

std::int64_t dot(const std::vector<std::int64_t>& v, const Weight& x) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * x[j];
  return s;
}

using Accumulator = std::unordered_map<Weight, mpz_class, WeightHash>;

// Adds sign * mult * chi_{dom(x) - delta} unless x + ... lies on a wall.
void brauer_klimyk_term(const RootSystem& rs, Weight x, const mpz_class& mult, Accumulator& acc) {
  auto red = rs.to_dominant(std::move(x));
  if (red.on_wall) return;
  for (std::size_t i = 0; i < red.dominant.rank(); ++i) red.dominant[i] -= 1;
  auto& slot = acc[red.dominant];
  if (red.sign > 0)
    slot += mult;
  else
    slot -= mult;
}

VirtualCharacter collect(const RootSystemPtr& rs, Accumulator&& acc) {
  VirtualCharacter v(rs);
  for (auto& [w, m] : acc) {
    const int s = sgn(m);
    if (s < 0) fail(ErrorCode::Internal, "negative multiplicity for " + w.to_string() + " in tensor product");
    if (s > 0) v.add(w, m);
  }
  return v;
}

}  // namespace

Irrep::Irrep(RootSystemPtr rs, Weight highest) : rs_(std::move(rs)), highest_(std::move(highest)) {
  if (!rs_) fail(ErrorCode::InvalidArgument, "null root system");
  require_dominant(*rs_, highest_);
}

VirtualCharacter VirtualCharacter::irreducible(const Irrep& irrep) {
  VirtualCharacter v(irrep.root_system_ptr());
  v.add(irrep.highest_weight(), 1);
  return v;
}

mpz_class VirtualCharacter::multiplicity(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void VirtualCharacter::add(const Weight& w, const mpz_class& mult) {
  require_dominant(*rs_, w);
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class VirtualCharacter::dimension() const {
  mpz_class total = 0;
  for (const auto& [w, m] : terms_) total += m * repgrowth::dimension(*rs_, w);
  return total;
}

mpz_class dimension(const RootSystem& rs, const Weight& highest) {
  require_dominant(rs, highest);
  const Weight shifted = highest + rs.weyl_vector();
  const Weight delta = rs.weyl_vector();
  mpz_class num = 1, den = 1;
  for (const auto& v : rs.root_functionals()) {
    num *= mpz_class(dot(v, shifted));
    den *= mpz_class(dot(v, delta));
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    fail(ErrorCode::Internal, "Weyl dimension formula produced a non-integer");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

WeightMultiset dominant_multiplicities(const RootSystem& rs, const Weight& highest) {
  require_dominant(rs, highest);
  const auto& roots = rs.positive_roots();
  std::vector<std::int64_t> heights;
  std::vector<std::int64_t> root_norms;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    std::int64_t h = 0;
    for (auto c : rs.positive_roots_simple()[a]) h += c;
    heights.push_back(h);
    root_norms.push_back(rs.scaled_inner(roots[a], roots[a]));
  }

  // Dominant weights below the highest weight, with their depth ht(lambda - mu).
  std::vector<std::pair<std::int64_t, Weight>> order;
  std::unordered_map<Weight, std::int64_t, WeightHash> depth;
  depth.emplace(highest, 0);
  order.emplace_back(0, highest);
  for (std::size_t next = 0; next < order.size(); ++next) {
    const auto [d, mu] = order[next];
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Weight lower = mu - roots[a];
      if (!lower.is_dominant()) continue;
      if (depth.emplace(lower, d + heights[a]).second) order.emplace_back(d + heights[a], lower);
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  const Weight delta = rs.weyl_vector();
  const Weight top = highest + delta;
  const std::int64_t top_norm = rs.scaled_inner(top, top);

  std::unordered_map<Weight, mpz_class, WeightHash> mult;
  mult.emplace(highest, 1);
  mpz_class num, den, term;
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& mu = order[idx].second;
    num = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const std::int64_t base = rs.scaled_inner(mu, roots[a]);
      Weight probe = mu;
      for (std::int64_t k = 1;; ++k) {
        probe += roots[a];
        auto red = rs.to_dominant(probe);
        auto it = mult.find(red.dominant);
        if (it == mult.end()) break;
        term = it->second;
        term *= mpz_class(base + k * root_norms[a]);
        num += term;
      }
    }
    num *= 2;
    const Weight shifted = mu + delta;
    den = mpz_class(top_norm - rs.scaled_inner(shifted, shifted));
    if (den <= 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
      fail(ErrorCode::Internal, "Freudenthal recursion failed at " + mu.to_string());
    mpz_class m;
    mpz_divexact(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mult.emplace(mu, std::move(m));
  }

  WeightMultiset out;
  for (auto& [w, m] : mult)
    if (m != 0) out.emplace(w, m);
  return out;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  rs.check_weight(w);
  std::unordered_set<Weight, WeightHash> seen{w};
  std::vector<Weight> orbit{w};
  for (std::size_t next = 0; next < orbit.size(); ++next) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (orbit[next][static_cast<std::size_t>(i)] == 0) continue;
      Weight r = rs.reflect(orbit[next], i);
      if (seen.insert(r).second) orbit.push_back(std::move(r));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

WeightMultiset weight_multiplicities(const Irrep& h) {
  const auto dominant = dominant_multiplicities(h.root_system(), h.highest_weight());
  WeightMultiset all;
  for (const auto& [mu, m] : dominant)
    for (auto& w : weyl_orbit(h.root_system(), mu)) all.emplace(std::move(w), m);
  return all;
}

VirtualCharacter tensor_decompose(const Irrep& h1, const Irrep& h2) {
  require_same_system(h1.root_system(), h2.root_system());
  const bool first_smaller = dimension(h1) <= dimension(h2);
  const Irrep& small = first_smaller ? h1 : h2;
  const Irrep& big = first_smaller ? h2 : h1;
  const RootSystem& rs = big.root_system();
  const Weight shift = big.highest_weight() + rs.weyl_vector();
  Accumulator acc;
  for (const auto& [nu, m] : weight_multiplicities(small)) brauer_klimyk_term(rs, shift + nu, m, acc);
  return collect(big.root_system_ptr(), std::move(acc));
}

VirtualCharacter tensor_with(const VirtualCharacter& v, const Irrep& h) {
  require_same_system(v.root_system(), h.root_system());
  const RootSystem& rs = h.root_system();
  const auto weights = weight_multiplicities(h);
  const Weight delta = rs.weyl_vector();
  Accumulator acc;
  mpz_class prod;
  for (const auto& [mu, c] : v.terms()) {
    const Weight shift = mu + delta;
    for (const auto& [nu, m] : weights) {
      prod = c * m;
      brauer_klimyk_term(rs, shift + nu, prod, acc);
    }
  }
  return collect(v.root_system_ptr(), std::move(acc));
}

VirtualCharacter power_decompose(const Irrep& h, unsigned k) {
  if (k == 0) {
    VirtualCharacter trivial(h.root_system_ptr());
    trivial.add(Weight(static_cast<std::size_t>(h.root_system().rank())), 1);
    return trivial;
  }
  VirtualCharacter v = VirtualCharacter::irreducible(h);
  if (k == 1) return v;
  if (k == 2) return tensor_decompose(h, h);
  for (unsigned step = 1; step < k; ++step) v = tensor_with(v, h);
  return v;
}

std::vector<Weight> brauer_constituent_family(const Irrep& h, int simple_index) {
  const RootSystem& rs = h.root_system();
  if (simple_index < 0 || simple_index >= rs.rank())
    fail(ErrorCode::InvalidArgument, "simple root index " + std::to_string(simple_index) + " out of range for rank " +
                                         std::to_string(rs.rank()));
  const Weight& lambda = h.highest_weight();
  const std::int64_t a = lambda[static_cast<std::size_t>(simple_index)];
  const Weight& alpha = rs.simple_root(simple_index);
  std::vector<Weight> family;
  for (std::int64_t k = 0; k <= a; ++k) {
    Weight w = 2 * lambda - k * alpha;
    if (!w.is_dominant()) fail(ErrorCode::Internal, "Brauer constituent " + w.to_string() + " is not dominant");
    family.push_back(std::move(w));
  }
  return family;
}

}  // namespace repgrowth
