#include "repgrowth/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <unordered_map>

#include "repgrowth/error.hpp"

namespace repgrowth {

namespace {

struct PrimePower {
  std::uint32_t p;
  std::uint32_t power;  // p^a
  std::uint32_t idempotent;  // = 1 mod p^a, = 0 mod n / p^a
};

std::vector<PrimePower> factor(std::uint32_t n) {
  std::vector<PrimePower> out;
  std::uint32_t m = n;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    std::uint32_t q = 1;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    out.push_back({p, q, 0});
  }
  if (m > 1) out.push_back({m, m, 0});
  for (auto& f : out) {
    const std::uint64_t cofactor = n / f.power;
    std::uint64_t inv = 1;
    for (; inv < f.power; ++inv)
      if ((cofactor % f.power) * inv % f.power == 1 % f.power) break;
    f.idempotent = static_cast<std::uint32_t>(cofactor * inv % n);
  }
  return out;
}

void check_conductor(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  if (n > kMaxConductor) fail(ErrorCode::Limit, "conductor " + std::to_string(n) + " exceeds the supported maximum");
}

}  // namespace

ZumbroichBasis::ZumbroichBasis(std::uint32_t n) : n_(n) {
  check_conductor(n);
  if (n % 4 == 2) fail(ErrorCode::Internal, "Zumbroich basis requested for conductor 2 mod 4");
  const auto primes = factor(n);
  expansions_.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    Expansion current{{0u, 1}};
    for (const auto& f : primes) {
      const std::uint32_t r = k % f.power;
      const std::uint32_t sub = f.power / f.p;
      std::vector<std::pair<std::uint32_t, int>> local;
      if (f.p == 2) {
        if (r < sub)
          local.emplace_back(r, 1);
        else
          local.emplace_back(r - sub, -1);
      } else if (r / sub != 0) {
        local.emplace_back(r, 1);
      } else {
        for (std::uint32_t t = 1; t < f.p; ++t) local.emplace_back(r + sub * t, -1);
      }
      Expansion next;
      next.reserve(current.size() * local.size());
      for (const auto& [e, s] : current)
        for (const auto& [j, t] : local)
          next.emplace_back(static_cast<std::uint32_t>((e + static_cast<std::uint64_t>(j) * f.idempotent) % n), s * t);
      current = std::move(next);
    }
    if (current.size() == 1 && current[0].first == k && current[0].second == 1) ++degree_;
    expansions_[k] = std::move(current);
  }
}

bool ZumbroichBasis::in_basis(std::uint32_t k) const {
  const auto& e = expansions_[k % n_];
  return e.size() == 1 && e[0].first == k % n_ && e[0].second == 1;
}

std::shared_ptr<const ZumbroichBasis> ZumbroichBasis::get(std::uint32_t n) {
  static std::mutex mutex;
  static std::unordered_map<std::uint32_t, std::shared_ptr<const ZumbroichBasis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const ZumbroichBasis>(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(basis)).first->second;
}

std::uint32_t lcm_conductor(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  check_conductor(l);
  return static_cast<std::uint32_t>(l);
}

Cyclotomic::Cyclotomic(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  if (c != 0) coeffs_.emplace(0u, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k) { return from_terms(n, {{k, mpq_class(1)}}); }

Cyclotomic Cyclotomic::from_terms(std::uint32_t n, const std::vector<std::pair<std::int64_t, mpq_class>>& terms) {
  check_conductor(n);
  std::vector<std::pair<std::int64_t, mpq_class>> folded;
  const std::vector<std::pair<std::int64_t, mpq_class>>* use = &terms;
  if (n % 4 == 2) {
    // zeta_{2m}^k = zeta_m^{k/2} for even k, and -zeta_m^{(k+m)/2} for odd k.
    const std::int64_t m = n / 2;
    for (const auto& [k0, c] : terms) {
      std::int64_t k = ((k0 % n) + n) % n;
      if (k % 2 == 0)
        folded.emplace_back(k / 2, c);
      else
        folded.emplace_back((k + m) / 2, -c);
    }
    n /= 2;
    use = &folded;
  }
  Cyclotomic out;
  out.n_ = n;
  auto basis = ZumbroichBasis::get(n);
  for (const auto& [k0, c0] : *use) {
    mpq_class c = c0;
    c.canonicalize();
    if (c == 0) continue;
    const auto k = static_cast<std::uint32_t>(((k0 % n) + n) % n);
    for (const auto& [e, s] : basis->expand(k)) {
      if (s > 0)
        out.coeffs_[e] += c;
      else
        out.coeffs_[e] -= c;
    }
  }
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::from_canonical(std::uint32_t n, std::map<std::uint32_t, mpq_class> coeffs) {
  check_conductor(n);
  Cyclotomic out;
  out.n_ = n;
  out.coeffs_ = std::move(coeffs);
  for (auto& [e, c] : out.coeffs_) c.canonicalize();
  out.normalize();
  return out;
}

void Cyclotomic::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
  if (coeffs_.empty()) {
    n_ = 1;
    return;
  }
  if (n_ == 1) return;
  // Rational iff proportional to the expansion of 1.
  const auto& one = ZumbroichBasis::get(n_)->expand(0);
  if (one.size() != coeffs_.size()) return;
  const auto first = coeffs_.find(one.front().first);
  if (first == coeffs_.end()) return;
  const mpq_class r = one.front().second > 0 ? first->second : mpq_class(-first->second);
  for (const auto& [e, s] : one) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) return;
    if (it->second != (s > 0 ? r : mpq_class(-r))) return;
  }
  coeffs_.clear();
  coeffs_.emplace(0u, r);
  n_ = 1;
}

mpq_class Cyclotomic::to_rational() const {
  if (n_ != 1) fail(ErrorCode::Domain, "cyclotomic value " + to_string() + " is not rational");
  return coeffs_.empty() ? mpq_class(0) : coeffs_.begin()->second;
}

std::map<std::uint32_t, mpq_class> Cyclotomic::lifted(std::uint32_t m) const {
  if (m == n_) return coeffs_;
  if (m % n_ != 0) fail(ErrorCode::Internal, "cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(m));
  const std::uint64_t step = m / n_;
  auto basis = ZumbroichBasis::get(m);
  std::map<std::uint32_t, mpq_class> out;
  for (const auto& [k, c] : coeffs_) {
    for (const auto& [e, s] : basis->expand(static_cast<std::uint32_t>(k * step % m))) {
      if (s > 0)
        out[e] += c;
      else
        out[e] -= c;
    }
  }
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  if (n_ == 1) return *this;
  std::vector<std::pair<std::int64_t, mpq_class>> terms;
  for (const auto& [k, c] : coeffs_) terms.emplace_back(-static_cast<std::int64_t>(k), c);
  return from_terms(n_, terms);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (n_ == 1 && o.n_ == 1) {
    const mpq_class s = to_rational() + o.to_rational();
    return *this = Cyclotomic(s);
  }
  const std::uint32_t l = lcm_conductor(n_, o.n_);
  auto a = lifted(l);
  for (const auto& [e, c] : o.lifted(l)) a[e] += c;
  return *this = from_canonical(l, std::move(a));
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    const mpq_class r = o.to_rational();
    if (r == 0) return *this = Cyclotomic();
    for (auto& [e, c] : coeffs_) c *= r;
    return *this;
  }
  if (n_ == 1) {
    Cyclotomic out = o;
    return *this = (out *= *this);
  }
  const std::uint32_t l = lcm_conductor(n_, o.n_);
  const auto a = lifted(l);
  const auto b = o.lifted(l);
  auto basis = ZumbroichBasis::get(l);
  std::map<std::uint32_t, mpq_class> out;
  mpq_class prod;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      prod = ca * cb;
      for (const auto& [e, s] : basis->expand((ea + eb) % l)) {
        if (s > 0)
          out[e] += prod;
        else
          out[e] -= prod;
      }
    }
  }
  return *this = from_canonical(l, std::move(out));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.coeffs_ == b.coeffs_;
  if (a.n_ == 1 || b.n_ == 1) return false;
  const std::uint32_t l = lcm_conductor(a.n_, b.n_);
  auto x = a.lifted(l);
  auto y = b.lifted(l);
  std::erase_if(x, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(y, [](const auto& kv) { return kv.second == 0; });
  return x == y;
}

std::string Cyclotomic::to_string() const {
  if (n_ == 1) return to_rational().get_str();
  std::string s;
  for (const auto& [k, c] : coeffs_) {
    std::string coef = c.get_str();
    if (!s.empty() && coef[0] != '-') s += '+';
    if (c == 1)
      coef.clear();
    else if (c == -1)
      coef = "-";
    else
      coef += '*';
    s += coef + "z" + std::to_string(n_) + "^" + std::to_string(k);
  }
  return s;
}

}  // namespace repgrowth
