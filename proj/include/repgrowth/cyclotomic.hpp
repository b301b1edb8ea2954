#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace repgrowth {

inline constexpr std::uint32_t kMaxConductor = 100000;

/// Zumbroich-style basis of Q(zeta_N): zeta_N^k is a basis element iff for every
/// prime power p^a || N the residue j = k mod p^a satisfies j < 2^(a-1) (p = 2)
/// or floor(j / p^(a-1)) != 0 (p odd). Every zeta_N^k expands into basis
/// elements with coefficients +-1.
class ZumbroichBasis {
 public:
  using Expansion = std::vector<std::pair<std::uint32_t, int>>;

  /// Shared, immutable instance for conductor n (n must not be 2 mod 4).
  static std::shared_ptr<const ZumbroichBasis> get(std::uint32_t n);

  explicit ZumbroichBasis(std::uint32_t n);

  std::uint32_t conductor() const { return n_; }
  std::uint32_t degree() const { return degree_; }
  const Expansion& expand(std::uint32_t k) const { return expansions_[k % n_]; }
  bool in_basis(std::uint32_t k) const;

 private:
  std::uint32_t n_;
  std::uint32_t degree_ = 0;
  std::vector<Expansion> expansions_;
};

/// Exact element of a cyclotomic field, held in canonical Zumbroich form.
/// Conductors congruent to 2 mod 4 are folded to N/2 and rational values are
/// always stored with conductor 1, so equal rationals compare bytewise equal.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const mpz_class& v) : Cyclotomic(mpq_class(v)) {}  // NOLINT
  Cyclotomic(const mpq_class& v);  // NOLINT

  /// zeta_n^k.
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);
  /// sum_k c_k zeta_n^k for arbitrary exponents k.
  static Cyclotomic from_terms(std::uint32_t n, const std::vector<std::pair<std::int64_t, mpq_class>>& terms);
  /// Trusted canonical coefficients (every key already a basis exponent of n).
  static Cyclotomic from_canonical(std::uint32_t n, std::map<std::uint32_t, mpq_class> coeffs);

  std::uint32_t conductor() const { return n_; }
  const std::map<std::uint32_t, mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return n_ == 1; }
  /// Throws if the value is not rational.
  mpq_class to_rational() const;

  /// Same value written over conductor m (n must divide m), canonical there.
  std::map<std::uint32_t, mpq_class> lifted(std::uint32_t m) const;

  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable, e.g. "-1/2", "z5^1+z5^4".
  std::string to_string() const;

 private:
  void normalize();

  std::uint32_t n_ = 1;
  std::map<std::uint32_t, mpq_class> coeffs_;
};

std::uint32_t lcm_conductor(std::uint32_t a, std::uint32_t b);

/// Reduces a dense vector of raw coefficients (index = exponent of zeta_N) to
/// canonical coefficients, using an arbitrary integer-like coefficient type.
template <class Int, class AddFn>
std::map<std::uint32_t, Int> reduce_dense(const ZumbroichBasis& basis, const std::vector<Int>& raw, AddFn add) {
  std::map<std::uint32_t, Int> out;
  for (std::uint32_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    for (const auto& [e, s] : basis.expand(k)) add(out[e], raw[k], s);
  }
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace repgrowth
