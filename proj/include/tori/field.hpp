#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tori/arith.hpp"
#include "tori/error.hpp"

namespace tori {

using Elt = std::uint32_t;

/// GF(p^k), q <= 2^16. An element code is the coefficient vector of its
/// polynomial representative, read as a base-p number (constant term lowest).
/// The modulus is the first monic primitive polynomial of degree k in code
/// order, so the class x of the polynomial ring is a primitive element.
class Field {
public:
  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  explicit Field(std::uint64_t q) {
    auto pp = require_prime_power(q);
    if (q > kMaxOrder)
      throw BudgetError("field GF(" + std::to_string(q) + ") exceeds the 2^16 cap");
    p_ = static_cast<Elt>(pp.p);
    k_ = pp.k;
    q_ = static_cast<Elt>(q);
    build();
  }

  Elt p() const { return p_; }
  int k() const { return k_; }
  Elt q() const { return q_; }
  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  /// Modulus coefficients, constant term first, leading 1 included.
  const std::vector<Elt>& modulus() const { return modulus_; }
  Elt primitive_element() const { return exp_[1 % (q_ - 1)]; }

  Elt add(Elt a, Elt b) const {
    if (p_ == 2)
      return a ^ b;
    if (k_ == 1) {
      Elt s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (a == 0)
      return b;
    if (b == 0)
      return a;
    // a + b = a (1 + b/a)
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
    std::int32_t z = zech_[d];
    if (z < 0)
      return 0;
    return exp_[(la + static_cast<std::uint32_t>(z)) % (q_ - 1)];
  }
  Elt neg(Elt a) const {
    if (p_ == 2 || a == 0)
      return a;
    if (k_ == 1)
      return p_ - a;
    return exp_[(log_[a] + half_) % (q_ - 1)];
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0)
      return 0;
    std::uint32_t s = log_[a] + log_[b];
    return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  Elt inv(Elt a) const {
    if (a == 0)
      throw InternalError("inverse of zero in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::int64_t e) const {
    if (a == 0) {
      if (e < 0)
        throw InternalError("negative power of zero");
      return e == 0 ? 1 : 0;
    }
    std::int64_t m = static_cast<std::int64_t>(q_) - 1;
    std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (((e % m) + m) % m)) % m;
    return exp_[static_cast<std::size_t>(r)];
  }
  /// Discrete log base the primitive element; a != 0.
  std::uint32_t log(Elt a) const {
    if (a == 0)
      throw InternalError("log of zero");
    return log_[a];
  }
  Elt exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elt a) const {
    std::uint64_t m = q_ - 1;
    return m / std::gcd<std::uint64_t>(m, log(a));
  }

  Elt from_int(std::int64_t v) const {
    std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
    return static_cast<Elt>(r); // prime-field elements are the constant polynomials
  }

  /// g^{(q-1)/d} for the primitive g; exact order d.
  Elt element_of_order(std::uint64_t d) const {
    if (d == 0 || (q_ - 1) % d != 0)
      throw ParameterError("no element of order " + std::to_string(d) + " in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1) / d % (q_ - 1)];
  }

  /// An element of order r-1 generating the subfield GF(r), r = p^j with j | k.
  Elt subfield_generator(std::uint64_t r) const {
    auto pp = require_prime_power(r);
    if (pp.p != p_ || k_ % pp.k != 0)
      throw ParameterError("GF(" + std::to_string(r) + ") is not a subfield of GF(" + std::to_string(q_) + ")");
    return element_of_order(r - 1);
  }

  std::string str(Elt a) const {
    static const char* hex = "0123456789abcdef";
    std::string s;
    int digits = 1;
    for (Elt v = q_ - 1; v >= 16; v >>= 4)
      ++digits;
    for (int i = digits - 1; i >= 0; --i)
      s += hex[(a >> (4 * i)) & 15];
    return s;
  }

  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

private:
  void build() {
    const std::uint32_t m = q_ - 1;
    exp_.assign(m, 0);
    log_.assign(q_, 0);
    if (k_ == 1) {
      // smallest primitive root mod p; modulus x - g
      for (Elt g = 1; g < p_; ++g) {
        if (try_prime_root(g)) {
          modulus_ = {(p_ - g) % p_, 1};
          break;
        }
      }
    } else {
      // monic degree-k polynomials in code order of the low coefficients
      for (Elt low = 0; low < q_; ++low) {
        if (low % p_ == 0)
          continue; // constant term zero: x divides the modulus
        if (try_modulus(low))
          break;
      }
    }
    if (modulus_.empty())
      throw InternalError("no primitive modulus found for GF(" + std::to_string(q_) + ")");
    half_ = m / 2;
    if (p_ != 2 && k_ > 1) {
      zech_.assign(m, -1);
      for (std::uint32_t i = 0; i < m; ++i) {
        Elt v = add_digits(1, exp_[i]);
        zech_[i] = v == 0 ? -1 : static_cast<std::int32_t>(log_[v]);
      }
    }
  }

  bool try_prime_root(Elt g) {
    Elt x = 1;
    for (std::uint32_t i = 0; i < p_ - 1; ++i) {
      if (i > 0 && x == 1)
        return false;
      exp_[i] = x;
      log_[x] = i;
      x = static_cast<Elt>((static_cast<std::uint64_t>(x) * g) % p_);
    }
    return x == 1;
  }

  Elt add_digits(Elt a, Elt b) const {
    Elt r = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }

  // multiply a code by x modulo x^k + low(x); low stores the negated tail
  Elt times_x(Elt a, const std::vector<Elt>& tail_neg) const {
    std::vector<Elt> d(k_ + 1, 0);
    for (int i = 0; i < k_; ++i) {
      d[i + 1] = a % p_;
      a /= p_;
    }
    Elt top = d[k_];
    Elt r = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
      Elt v = (d[i] + top * tail_neg[i]) % p_;
      r += v * place;
      place *= p_;
    }
    return r;
  }

  bool try_modulus(Elt low) {
    std::vector<Elt> tail(k_), tail_neg(k_);
    Elt c = low;
    for (int i = 0; i < k_; ++i) {
      tail[i] = c % p_;
      tail_neg[i] = (p_ - tail[i]) % p_;
      c /= p_;
    }
    const std::uint32_t m = q_ - 1;
    std::vector<char> seen(q_, 0);
    Elt x = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (seen[x])
        return false;
      seen[x] = 1;
      exp_[i] = x;
      log_[x] = i;
      x = times_x(x, tail_neg);
    }
    if (x != 1)
      return false;
    modulus_ = tail;
    modulus_.push_back(1);
    return true;
  }

  Elt p_ = 2;
  int k_ = 1;
  Elt q_ = 2;
  std::uint32_t half_ = 0;
  std::vector<Elt> modulus_;
  std::vector<Elt> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
};

/// Shared immutable field instances.
inline std::shared_ptr<const Field> field(std::uint64_t q) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(q);
  if (it != cache.end())
    return it->second;
  auto f = std::make_shared<const Field>(q);
  cache.emplace(q, f);
  return f;
}

} // namespace tori
