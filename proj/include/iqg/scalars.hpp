#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace iqg {

// Maximum number of affine nodes (n+1) supported by the fixed-size exponent vectors.
inline constexpr int kMaxNodes = 8;

namespace scalars {

using Rational = mpq_class;

// Laurent polynomial in q with rational coefficients. Dense storage from the
// lowest nonzero exponent; the coefficient vector never has zero ends.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);
  static LaurentPoly monomial(const Rational& c, int exp);
  static LaurentPoly q_power(int exp) { return monomial(Rational(1), exp); }
  static LaurentPoly from_terms(const std::map<int, Rational>& terms);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Rational coeff(int exp) const;
  const Rational& lead() const { return c_.back(); }
  const Rational& trail() const { return c_.front(); }
  const std::vector<Rational>& dense() const { return c_; }
  std::map<int, Rational> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rational& r) const;
  LaurentPoly shifted(int k) const;
  // q -> q^d
  LaurentPoly dilated(int d) const;
  // q -> q^{-1}
  LaurentPoly inverted_variable() const;

  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const;

  std::string to_string() const;
  std::size_t hash() const;

  // Exact division in Q[q, q^-1]; throws if not divisible. Divisor must be nonzero.
  static std::pair<LaurentPoly, LaurentPoly> divmod_poly(const LaurentPoly& a, const LaurentPoly& b);
  static LaurentPoly gcd_poly(LaurentPoly a, LaurentPoly b);

 private:
  void trim();
  int low_ = 0;
  std::vector<Rational> c_;
};

// Element of Q(q): numerator/denominator coprime, denominator has lowest
// exponent 0 and leading coefficient 1.
class RationalFunc {
 public:
  RationalFunc() = default;
  RationalFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunc(const LaurentPoly& p) : num_(p) {}  // NOLINT(google-explicit-constructor)
  RationalFunc(const LaurentPoly& num, const LaurentPoly& den);
  static RationalFunc q_power(int k) { return RationalFunc(LaurentPoly::q_power(k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunc operator-() const;
  RationalFunc operator+(const RationalFunc& o) const;
  RationalFunc operator-(const RationalFunc& o) const;
  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;
  RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
  RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
  RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
  RationalFunc inverse() const;
  RationalFunc shifted(int k) const;  // times q^k

  bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunc& o) const { return !(*this == o); }
  bool operator<(const RationalFunc& o) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

// Laurent monomial in the central generators KK_0..KK_n.
struct CentralMonomial {
  std::array<int16_t, kMaxNodes> e{};

  static CentralMonomial unit(int i, int power = 1) {
    CentralMonomial m;
    m.e[i] = static_cast<int16_t>(power);
    return m;
  }
  bool is_one() const;
  CentralMonomial operator*(const CentralMonomial& o) const;
  CentralMonomial inverse() const;
  bool operator==(const CentralMonomial& o) const { return e == o.e; }
  bool operator!=(const CentralMonomial& o) const { return e != o.e; }
  bool operator<(const CentralMonomial& o) const { return e < o.e; }
  std::string to_string() const;  // "KK0^1*KK2^-1", empty for 1
  std::size_t hash() const;
};

// Arithmetic in Z/p with p = 2^61 - 1. Used for random specializations of q.
class Fp {
 public:
  static constexpr uint64_t kP = (uint64_t{1} << 61) - 1;

  Fp() = default;
  Fp(long c);  // NOLINT(google-explicit-constructor)
  static Fp raw(uint64_t v) { Fp x; x.v_ = v % kP; return x; }
  // q^k at the active specialization point (see ScopedPoint).
  static Fp q_power(int k);
  static Fp from_rational(const Rational& r);
  static Fp from(const RationalFunc& r);

  uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  Fp operator-() const { return raw(v_ == 0 ? 0 : kP - v_); }
  Fp operator+(Fp o) const { uint64_t s = v_ + o.v_; return raw(s >= kP ? s - kP : s); }
  Fp operator-(Fp o) const { return *this + (-o); }
  Fp operator*(Fp o) const;
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp pow(uint64_t e) const;
  Fp inverse() const;
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  bool operator==(Fp o) const { return v_ == o.v_; }
  bool operator!=(Fp o) const { return v_ != o.v_; }
  bool operator<(Fp o) const { return v_ < o.v_; }
  std::string to_string() const { return std::to_string(v_); }
  std::size_t hash() const { return static_cast<std::size_t>(v_); }

 private:
  uint64_t v_ = 0;
};

// Installs a value for q used by Fp::q_power / Fp::from on this thread.
class ScopedPoint {
 public:
  explicit ScopedPoint(Fp q);
  ~ScopedPoint();
  ScopedPoint(const ScopedPoint&) = delete;
  ScopedPoint& operator=(const ScopedPoint&) = delete;

 private:
  Fp saved_;
  bool had_;
};
bool has_point();

inline std::size_t hash_mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Converts an exact coefficient into field F.
template <class F>
F field_from(const RationalFunc& r);
template <>
inline RationalFunc field_from<RationalFunc>(const RationalFunc& r) { return r; }
template <>
inline Fp field_from<Fp>(const RationalFunc& r) { return Fp::from(r); }

// Finite sum over central monomials with coefficients in F (F = RationalFunc
// gives the exact ground ring; F = Fp a specialization in q only).
template <class F>
class CentralSum {
 public:
  using Term = std::pair<CentralMonomial, F>;

  CentralSum() = default;
  CentralSum(long c) { if (c != 0) terms_.emplace_back(CentralMonomial{}, F(c)); }  // NOLINT
  CentralSum(const F& r) { if (!r.is_zero()) terms_.emplace_back(CentralMonomial{}, r); }  // NOLINT
  CentralSum(const CentralMonomial& m, const F& r) { if (!r.is_zero()) terms_.emplace_back(m, r); }
  template <class G = F, class = std::enable_if_t<std::is_same_v<G, RationalFunc>>>
  CentralSum(const LaurentPoly& p) : CentralSum(RationalFunc(p)) {}  // NOLINT
  static CentralSum q_power(int k) { return CentralSum(F::q_power(k)); }
  static CentralSum kk(int i, int power = 1) { return CentralSum(CentralMonomial::unit(i, power), F(1)); }
  static CentralSum from_exact(const CentralSum<RationalFunc>& s) {
    CentralSum out;
    for (const auto& [m, r] : s.terms()) out.terms_.emplace_back(m, field_from<F>(r));
    out.drop_zeros();
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one(); }
  bool is_unit() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  CentralSum operator-() const {
    CentralSum s = *this;
    for (auto& t : s.terms_) t.second = -t.second;
    return s;
  }
  CentralSum& operator+=(const CentralSum& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
      terms_[0].second += o.terms_[0].second;
      if (terms_[0].second.is_zero()) terms_.clear();
      return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < terms_.size() || b < o.terms_.size()) {
      if (b == o.terms_.size() || (a < terms_.size() && terms_[a].first < o.terms_[b].first)) {
        out.push_back(std::move(terms_[a++]));
      } else if (a == terms_.size() || o.terms_[b].first < terms_[a].first) {
        out.push_back(o.terms_[b++]);
      } else {
        F r = terms_[a].second + o.terms_[b].second;
        if (!r.is_zero()) out.emplace_back(terms_[a].first, std::move(r));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  CentralSum& operator-=(const CentralSum& o) { return *this += -o; }
  CentralSum operator+(const CentralSum& o) const { CentralSum s = *this; s += o; return s; }
  CentralSum operator-(const CentralSum& o) const { CentralSum s = *this; s -= o; return s; }
  CentralSum operator*(const CentralSum& o) const {
    if (terms_.empty() || o.terms_.empty()) return {};
    if (terms_.size() == 1 && o.terms_.size() == 1)
      return CentralSum(terms_[0].first * o.terms_[0].first, terms_[0].second * o.terms_[0].second);
    CentralSum s;
    for (const auto& [m1, r1] : terms_)
      for (const auto& [m2, r2] : o.terms_) s += CentralSum(m1 * m2, r1 * r2);
    return s;
  }
  CentralSum& operator*=(const CentralSum& o) { return *this = *this * o; }
  CentralSum scaled(const F& f) const {
    if (f.is_zero()) return {};
    CentralSum s = *this;
    for (auto& t : s.terms_) t.second = t.second * f;
    return s;
  }
  CentralSum inverse() const {
    if (terms_.size() != 1) throw std::domain_error("inverse of a non-monomial scalar");
    return CentralSum(terms_[0].first.inverse(), terms_[0].second.inverse());
  }
  CentralSum times(const CentralMonomial& m) const {
    CentralSum s = *this;
    for (auto& t : s.terms_) t.first = t.first * m;
    return s;
  }
  // Apply a group homomorphism to the central monomials.
  template <class Fn>
  CentralSum map_central(Fn&& f) const {
    CentralSum out;
    for (const auto& [m, r] : terms_) out += CentralSum(f(m), r);
    return out;
  }

  bool operator==(const CentralSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const CentralSum& o) const { return !(*this == o); }
  bool operator<(const CentralSum& o) const { return terms_ < o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, r] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + r.to_string() + ")";
      if (!m.is_one()) s += "*" + m.to_string();
    }
    return s;
  }
  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& [m, r] : terms_) h = hash_mix(hash_mix(h, m.hash()), r.hash());
    return h;
  }

 private:
  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_zero(); }),
                 terms_.end());
  }
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

using Scalar = CentralSum<RationalFunc>;
using ScalarP = CentralSum<Fp>;

RationalFunc qint(int n, int d = 1);
RationalFunc qfactorial(int n, int d = 1);
RationalFunc qbinom(int n, int r, int d = 1);

}  // namespace scalars
}  // namespace iqg
