#pragma once

// Exact integer polynomials (univariate and sparse multivariate), Catalan and
// binomial numbers, and exact determinants.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moonfill/error.hpp"

namespace moonfill {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

/// Dense univariate polynomial; coefficient i multiplies q^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(std::int64_t v) { return UPoly({v}); }
  static UPoly monomial(int degree, std::int64_t v = 1) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = v;
    return UPoly(std::move(c));
  }
  /// [m]_q = 1 + q + ... + q^{m-1}
  static UPoly q_integer(int m) {
    if (m < 0) throw Error(ErrorCode::OutOfRange, "q-integer of a negative number");
    return UPoly(std::vector<std::int64_t>(static_cast<std::size_t>(m), 1));
  }

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  std::int64_t operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0; }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a[static_cast<int>(i)], b[static_cast<int>(i)]);
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(a[static_cast<int>(i)], b[static_cast<int>(i)]);
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    return UPoly(std::move(c));
  }

  /// Quotient and remainder by a divisor with leading coefficient +-1.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by the zero polynomial");
    const std::int64_t lead = b.c_.back();
    if (lead != 1 && lead != -1) throw Error(ErrorCode::NonIntegralQuotient, "divisor is not monic");
    std::vector<std::int64_t> r = a.c_;
    std::vector<std::int64_t> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      std::int64_t f = checked_mul(r[i + b.c_.size() - 1], lead);
      q[i] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = checked_sub(r[i + j], checked_mul(f, b.c_[j]));
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  /// Exact quotient; throws when the remainder is nonzero.
  friend UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::NonIntegralQuotient, "polynomial division leaves a remainder");
    return q;
  }

  std::int64_t eval(std::int64_t x) const {
    std::int64_t v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = checked_add(checked_mul(v, x), c_[i]);
    return v;
  }

  /// Coefficients of the reduction modulo q^n - 1, length n.
  std::vector<std::int64_t> mod_qn_minus_1(int n) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i % static_cast<std::size_t>(n)] = checked_add(out[i % static_cast<std::size_t>(n)], c_[i]);
    return out;
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

/// Cyclotomic polynomial Phi_m.
inline UPoly cyclotomic(int m) {
  if (m < 1) throw Error(ErrorCode::OutOfRange, "cyclotomic index must be positive");
  UPoly p = UPoly::monomial(m) - UPoly::constant(1);
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = exact_div(p, cyclotomic(d));
  return p;
}

/// Sparse multivariate polynomial in x_1, x_2, ...; exponent vectors carry no
/// trailing zeros.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  static MPoly one() {
    MPoly p;
    p.terms_[{}] = 1;
    return p;
  }

  void add_term(Exponents e, std::int64_t c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto& slot = terms_[e];
    slot = checked_add(slot, c);
    if (slot == 0) terms_.erase(e);
  }

  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t eval_at_ones() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
  }
  std::int64_t min_coefficient() const {
    std::int64_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      m = first ? c : std::min(m, c);
      first = false;
    }
    return m;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, checked_sub(0, c));
    return r;
  }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string term = mono.empty() ? std::to_string(c) : (c == 1 ? mono : c == -1 ? "-" + mono : std::to_string(c) + "*" + mono);
      if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
      else s = term;
    }
    return s;
  }

 private:
  std::map<Exponents, std::int64_t> terms_;
};

inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t v = 1;
  for (std::int64_t i = 1; i <= r; ++i) v = checked_mul(v, n - r + i) / i;  // exact at each step
  return v;
}

inline std::int64_t catalan(int m) {
  if (m < 0) throw Error(ErrorCode::OutOfRange, "Catalan index must be nonnegative");
  return binomial(2 * m, m) / (m + 1);
}

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact determinant by fraction-free-enough Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

inline std::int64_t to_int64(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1) throw Error(ErrorCode::NonIntegralQuotient, "value is not an integer");
  BigInt v = boost::multiprecision::numerator(r);
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw Error(ErrorCode::Overflow, "value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace moonfill
