#include "gentle/field.hpp"

#include <stdexcept>
#include <utility>

namespace gentle {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::uint64_t mod(BigInt const& x, std::uint64_t p) {
  BigInt r = x % p;
  if (r < 0) {
    r += p;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1U) {
      result = result * b % p;
    }
    b = b * b % p;
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::with_characteristic(std::uint64_t p) {
  if (p == 0) {
    return {};
  }
  if (p >= (std::uint64_t{1} << 31U) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be 0 or a prime "
                                "below 2^31, got "
                                + std::to_string(p));
  }
  return FieldSpec(p);
}

std::string FieldSpec::describe() const {
  return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

Scalar FieldSpec::normalize(Scalar const& x) const {
  if (p_ == 0) {
    return x;
  }
  std::uint64_t num = mod(numerator(x), p_);
  std::uint64_t den = mod(denominator(x), p_);
  if (den == 0) {
    throw std::domain_error("denominator vanishes in characteristic "
                            + std::to_string(p_));
  }
  return Scalar(num * pow_mod(den, p_ - 2, p_) % p_);
}

Scalar FieldSpec::add(Scalar const& x, Scalar const& y) const {
  return normalize(x + y);
}

Scalar FieldSpec::sub(Scalar const& x, Scalar const& y) const {
  return normalize(x - y);
}

Scalar FieldSpec::mul(Scalar const& x, Scalar const& y) const {
  return normalize(x * y);
}

Scalar FieldSpec::inverse(Scalar const& x) const {
  Scalar n = normalize(x);
  if (n == 0) {
    throw std::domain_error("inverse of zero");
  }
  if (p_ == 0) {
    return 1 / n;
  }
  return Scalar(pow_mod(static_cast<std::uint64_t>(numerator(n)), p_ - 2, p_));
}

std::size_t rank_over(FieldSpec const& field, IntMatrix const& m) {
  std::uint64_t const p = field.characteristic();
  if (p == 0) {
    return rank(m);
  }
  std::size_t const                       rows = m.size();
  std::size_t const                       cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::vector<std::uint64_t>> a(rows,
                                            std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = mod(m[i][j], p);
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) {
      ++piv;
    }
    if (piv == rows) {
      continue;
    }
    std::swap(a[r], a[piv]);
    std::uint64_t inv = pow_mod(a[r][c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) {
        continue;
      }
      std::uint64_t factor = a[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] + (p - factor) * a[r][j]) % p;
      }
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Scalar>> solve(FieldSpec const&           field,
                                         ScalarMatrix               a,
                                         std::vector<Scalar> const& b) {
  std::size_t const rows = a.size();
  if (b.size() != rows) {
    throw std::invalid_argument("solve: right-hand side has wrong length");
  }
  std::size_t const cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (auto& x : a[i]) {
      x = field.normalize(x);
    }
    a[i].push_back(field.normalize(b[i]));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t              r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) {
      ++piv;
    }
    if (piv == rows) {
      continue;
    }
    std::swap(a[r], a[piv]);
    Scalar inv = field.inverse(a[r][c]);
    for (std::size_t j = c; j <= cols; ++j) {
      a[r][j] = field.mul(a[r][j], inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) {
        continue;
      }
      Scalar factor = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) {
        a[i][j] = field.sub(a[i][j], field.mul(factor, a[r][j]));
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Scalar> x(cols, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) {
    x[pivot_col[i]] = a[i][cols];
  }
  return x;
}

}  // namespace gentle
