#include "repgrowth/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "repgrowth/error.hpp"

namespace repgrowth {

namespace {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

void check_factor(const SimpleFactor& f) {
  const int n = f.rank;
  switch (f.family) {
    case 'A':
      if (n < 1) fail(ErrorCode::InvalidArgument, "type A requires rank n >= 1");
      break;
    case 'B':
      if (n < 2) fail(ErrorCode::InvalidArgument, "type B requires rank n >= 2");
      break;
    case 'C':
      if (n < 3) fail(ErrorCode::InvalidArgument, "type C requires rank n >= 3 (C2 is B2)");
      break;
    case 'D':
      if (n < 4) fail(ErrorCode::InvalidArgument, "type D requires rank n >= 4");
      break;
    case 'E':
      if (n < 6 || n > 8) fail(ErrorCode::InvalidArgument, "type E requires rank n in {6,7,8}");
      break;
    case 'F':
      if (n != 4) fail(ErrorCode::InvalidArgument, "type F requires rank n = 4");
      break;
    case 'G':
      if (n != 2) fail(ErrorCode::InvalidArgument, "type G requires rank n = 2");
      break;
    default:
      fail(ErrorCode::InvalidArgument, std::string("unknown Cartan family '") + f.family + "'");
  }
}

// Gram matrix of the simple roots of one simple factor, Bourbaki numbering,
// long roots of squared length 2.
RationalMatrix simple_gram(const SimpleFactor& f) {
  const int n = f.rank;
  RationalMatrix b(n, std::vector<mpq_class>(n, 0));
  auto link = [&](int i, int j, mpq_class v) {
    b[i - 1][j - 1] = v;
    b[j - 1][i - 1] = v;
  };
  switch (f.family) {
    case 'A':
      for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) b[i - 1][i - 1] = 2;
      b[n - 1][n - 1] = 1;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 1; i < n; ++i) b[i - 1][i - 1] = 1;
      b[n - 1][n - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, mpq_class(-1, 2));
      link(n - 1, n, -1);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = 2;
      b[1][1] = 2;
      b[2][2] = 1;
      b[3][3] = 1;
      link(1, 2, -1);
      link(2, 3, -1);
      link(3, 4, mpq_class(-1, 2));
      break;
    case 'G':
      b[0][0] = mpq_class(2, 3);
      b[1][1] = 2;
      link(1, 2, -1);
      break;
  }
  for (auto& row : b)
    for (auto& v : row) v.canonicalize();
  return b;
}

RationalMatrix invert(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(ErrorCode::Internal, "singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const mpq_class p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::Limit, "integer does not fit in 64 bits");
  return z.get_si();
}

std::int64_t lcm_of_denominators(const std::vector<mpq_class>& values) {
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return to_int64(l);
}

}  // namespace

CartanType::CartanType(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) fail(ErrorCode::InvalidArgument, "Cartan type needs at least one factor");
  for (auto& f : factors_) {
    f.family = static_cast<char>(std::toupper(static_cast<unsigned char>(f.family)));
    check_factor(f);
  }
}

CartanType CartanType::parse(std::string_view text) {
  std::vector<SimpleFactor> factors;
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) -> void {
    fail(ErrorCode::Parse, "cannot parse Cartan type \"" + std::string(text) + "\": " + why);
  };
  if (text.empty()) bad("empty string");
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != 'x' && text[end] != 'X') ++end;
    std::string_view token = text.substr(pos, end - pos);
    if (token.size() < 2) bad("expected <family><rank> factor");
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (std::string_view("ABCDEFG").find(family) == std::string_view::npos) bad("unknown family");
    int rank = 0;
    for (char c : token.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad("rank must be a positive integer");
      rank = rank * 10 + (c - '0');
      if (rank > 1000) bad("rank too large");
    }
    factors.push_back({family, rank});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return CartanType(std::move(factors));
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string CartanType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += factors_[i].family;
    s += std::to_string(factors_[i].rank);
  }
  return s;
}

RootSystem::RootSystem(CartanType type) : type_(std::move(type)), rank_(type_.rank()) {
  const auto n = static_cast<std::size_t>(rank_);
  RationalMatrix gram(n, std::vector<mpq_class>(n, 0));
  std::size_t offset = 0;
  for (const auto& f : type_.factors()) {
    auto block = simple_gram(f);
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j) gram[offset + i][offset + j] = block[i][j];
    offset += block.size();
  }

  half_norms_.resize(n);
  for (std::size_t j = 0; j < n; ++j) half_norms_[j] = gram[j][j] / 2;

  cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  RationalMatrix cartan_q(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class a = 2 * gram[i][j] / gram[j][j];
      if (a.get_den() != 1) fail(ErrorCode::Internal, "non-integral Cartan entry");
      cartan_q[i][j] = a;
      cartan_[i][j] = to_int64(a.get_num());
    }
  }
  for (std::size_t i = 0; i < n; ++i) simple_roots_.emplace_back(cartan_[i]);

  cartan_inverse_ = invert(cartan_q);
  form_.assign(n, std::vector<mpq_class>(n, 0));
  std::vector<mpq_class> all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      form_[i][j] = cartan_inverse_[i][j] * half_norms_[j];
      all.push_back(form_[i][j]);
    }
  }
  scale_ = lcm_of_denominators(all);
  scaled_form_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class s = form_[i][j] * scale_;
      scaled_form_[i][j] = to_int64(s.get_num());
    }

  build_positive_roots();

  coroot_scale_ = lcm_of_denominators(half_norms_);
  for (const auto& c : positive_simple_) {
    std::vector<std::int64_t> v(n);
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class x = c[j] * half_norms_[j] * coroot_scale_;
      v[j] = to_int64(x.get_num());
    }
    root_functionals_.push_back(std::move(v));
  }
}

void RootSystem::build_positive_roots() {
  const auto n = static_cast<std::size_t>(rank_);
  std::set<std::vector<std::int64_t>> known;
  std::vector<std::vector<std::int64_t>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> c(n, 0);
    c[i] = 1;
    level.push_back(c);
    known.insert(c);
  }
  auto omega = [&](const std::vector<std::int64_t>& c) {
    Weight w(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) w[k] += c[j] * cartan_[j][k];
    return w;
  };
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& c : level) {
      positive_simple_.push_back(c);
      const Weight w = omega(c);
      positive_roots_.push_back(w);
      for (std::size_t i = 0; i < n; ++i) {
        // alpha_i-string through this root: q = p - <beta, alpha_i^vee>.
        std::int64_t p = 0;
        auto down = c;
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - w[i] > 0) {
          auto up = c;
          ++up[i];
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.rank() != static_cast<std::size_t>(rank_))
    fail(ErrorCode::InvalidArgument, "weight " + w.to_string() + " has " + std::to_string(w.rank()) +
                                         " coordinates but " + type_.to_string() + " has rank " +
                                         std::to_string(rank_));
}

mpq_class RootSystem::inner(const Weight& x, const Weight& y) const {
  check_weight(x);
  check_weight(y);
  mpq_class s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      s += form_[i][j] * mpz_class(x[i]) * mpz_class(y[j]);
    }
  }
  return s;
}

std::int64_t RootSystem::scaled_inner(const Weight& x, const Weight& y) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < rank_; ++j) row += scaled_form_[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

bool RootSystem::is_root(const Weight& w) const {
  if (w.rank() != static_cast<std::size_t>(rank_)) return false;
  const Weight neg = -1 * w;
  for (const auto& r : positive_roots_)
    if (r == w || r == neg) return true;
  return false;
}

mpq_class RootSystem::pairing(const Weight& lambda, const Weight& alpha) const {
  check_weight(lambda);
  if (!is_root(alpha)) fail(ErrorCode::InvalidArgument, alpha.to_string() + " is not a root of " + type_.to_string());
  return 2 * inner(lambda, alpha) / inner(alpha, alpha);
}

Weight RootSystem::reflect(const Weight& x, int i) const {
  const std::int64_t k = x[static_cast<std::size_t>(i)];
  Weight y = x;
  const auto& a = cartan_[static_cast<std::size_t>(i)];
  for (int j = 0; j < rank_; ++j) y[j] -= k * a[static_cast<std::size_t>(j)];
  return y;
}

ChamberReduction RootSystem::to_dominant(Weight x) const {
  ChamberReduction r;
  for (;;) {
    int i = 0;
    while (i < rank_ && x[i] >= 0) ++i;
    if (i == rank_) break;
    const std::int64_t k = x[i];
    const auto& a = cartan_[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank_; ++j) x[j] -= k * a[static_cast<std::size_t>(j)];
    r.sign = -r.sign;
  }
  for (int i = 0; i < rank_; ++i)
    if (x[i] == 0) r.on_wall = true;
  r.dominant = std::move(x);
  return r;
}

std::vector<mpq_class> RootSystem::simple_coordinates(const Weight& x) const {
  check_weight(x);
  std::vector<mpq_class> c(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) c[j] += mpz_class(x[i]) * cartan_inverse_[i][j];
  }
  return c;
}

RootSystemPtr build_root_system(const CartanType& type) { return std::make_shared<const RootSystem>(type); }

RootSystemPtr build_root_system(std::string_view type) { return build_root_system(CartanType::parse(type)); }

}  // namespace repgrowth
