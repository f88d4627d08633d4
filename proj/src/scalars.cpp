#include "iqg/scalars.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace iqg::scalars {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_rational(const Rational& r) {
  // Cheap hash: low limbs of numerator and denominator.
  std::size_t h = mpz_sgn(r.get_num_mpz_t()) < 0 ? 1 : 0;
  if (mpz_size(r.get_num_mpz_t()) > 0) h = mix(h, mpz_getlimbn(r.get_num_mpz_t(), 0));
  if (mpz_size(r.get_den_mpz_t()) > 0) h = mix(h, mpz_getlimbn(r.get_den_mpz_t(), 0));
  return h;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exp;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Rational>& terms) {
  LaurentPoly p;
  if (terms.empty()) return p;
  p.low_ = terms.begin()->first;
  p.c_.assign(terms.rbegin()->first - p.low_ + 1, Rational(0));
  for (const auto& [e, c] : terms) p.c_[e - p.low_] += c;
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    low_ += static_cast<int>(k);
  }
}

bool LaurentPoly::is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }

Rational LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < low_ || exp > high()) return Rational(0);
  return c_[exp - low_];
}

std::map<int, Rational> LaurentPoly::terms() const {
  std::map<int, Rational> out;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) out.emplace(low_ + static_cast<int>(k), c_[k]);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo + 1) c_.resize(hi - lo + 1, Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[o.low_ - low_ + k] += o.c_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }
LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const { LaurentPoly p = *this; p += o; return p; }
LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { LaurentPoly p = *this; p -= o; return p; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  if (is_zero() || o.is_zero()) return p;
  p.low_ = low_ + o.low_;
  p.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) p.c_[a + b] += c_[a] * o.c_[b];
  }
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& r) const {
  if (r == 0) return {};
  LaurentPoly p = *this;
  for (auto& c : p.c_) c *= r;
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::dilated(int d) const {
  if (d == 1 || is_zero()) return *this;
  std::map<int, Rational> t;
  for (const auto& [e, c] : terms()) t.emplace(e * d, c);
  return from_terms(t);
}

LaurentPoly LaurentPoly::inverted_variable() const { return dilated(-1); }

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  if (low_ != o.low_) return low_ < o.low_;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return c_[k] < o.c_[k];
  return false;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    int e = low_ + k;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << rational_text(a);
    } else {
      if (a != 1) os << rational_text(a) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = static_cast<std::size_t>(low_) * 31 + c_.size();
  for (const auto& c : c_) h = mix(h, hash_rational(c));
  return h;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod_poly(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  // Work with ordinary polynomials: shift both to exponent 0.
  LaurentPoly r = a.shifted(-a.low());
  LaurentPoly bb = b.shifted(-b.low());
  int db = bb.high();
  std::map<int, Rational> quot;
  while (!r.is_zero() && r.high() >= db) {
    int shift = r.high() - db;
    Rational f = r.lead() / bb.lead();
    quot[shift] += f;
    r -= bb.scaled(f).shifted(shift);
  }
  return {from_terms(quot), r};
}

LaurentPoly LaurentPoly::gcd_poly(LaurentPoly a, LaurentPoly b) {
  if (!a.is_zero()) a = a.shifted(-a.low());
  if (!b.is_zero()) b = b.shifted(-b.low());
  while (!b.is_zero()) {
    LaurentPoly r = divmod_poly(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.shifted(-r.low());
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.lead());
}

// ---------------------------------------------------------------- RationalFunc

RationalFunc::RationalFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    num_ = num_.scaled(Rational(1) / den_.lead()).shifted(-den_.low());
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = LaurentPoly::gcd_poly(num_, den_);
  if (g.high() > 0) {
    int nl = num_.low();
    num_ = LaurentPoly::divmod_poly(num_, g).first.shifted(nl);
    den_ = LaurentPoly::divmod_poly(den_, g).first.shifted(den_.low());
  }
  // Denominator: lowest exponent 0, leading coefficient 1.
  int shift = den_.low();
  Rational lc = den_.lead();
  den_ = den_.shifted(-shift).scaled(Rational(1) / lc);
  num_ = num_.shifted(-shift).scaled(Rational(1) / lc);
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_one() && o.den_.is_one()) {
    RationalFunc r;
    r.num_ = num_ + o.num_;
    return r;
  }
  if (den_ == o.den_) return RationalFunc(num_ + o.num_, den_);
  LaurentPoly g = LaurentPoly::gcd_poly(den_, o.den_);
  if (g.high() == 0) return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  LaurentPoly a = LaurentPoly::divmod_poly(den_, g).first;
  LaurentPoly b = LaurentPoly::divmod_poly(o.den_, g).first;
  return RationalFunc(num_ * b + o.num_ * a, a * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (den_.is_one() && o.den_.is_one()) {
    RationalFunc r;
    r.num_ = num_ * o.num_;
    return r;
  }
  if (num_.is_monomial()) {
    RationalFunc r = o;
    r.num_ = o.num_.scaled(num_.lead()).shifted(num_.low());
    if (!den_.is_one()) return RationalFunc(r.num_, den_ * o.den_);
    return r;
  }
  if (o.num_.is_monomial()) return o * *this;
  return RationalFunc(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunc(den_, num_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const { return *this * o.inverse(); }

RationalFunc RationalFunc::shifted(int k) const {
  RationalFunc r = *this;
  r.num_ = r.num_.shifted(k);
  return r;
}

bool RationalFunc::operator<(const RationalFunc& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

std::string RationalFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::size_t RationalFunc::hash() const { return mix(num_.hash(), den_.hash()); }

// ---------------------------------------------------------------- CentralMonomial

bool CentralMonomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](int16_t x) { return x == 0; });
}

CentralMonomial CentralMonomial::operator*(const CentralMonomial& o) const {
  CentralMonomial m;
  for (int i = 0; i < kMaxNodes; ++i) m.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
  return m;
}

CentralMonomial CentralMonomial::inverse() const {
  CentralMonomial m;
  for (int i = 0; i < kMaxNodes; ++i) m.e[i] = static_cast<int16_t>(-e[i]);
  return m;
}

std::string CentralMonomial::to_string() const {
  std::string s;
  for (int i = 0; i < kMaxNodes; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "KK" + std::to_string(i) + "^" + std::to_string(e[i]);
  }
  return s;
}

std::size_t CentralMonomial::hash() const {
  std::size_t h = 0;
  for (auto x : e) h = h * 131 + static_cast<std::size_t>(x + 1000);
  return h;
}

// ---------------------------------------------------------------- Fp

namespace {
thread_local bool g_has_point = false;
thread_local Fp g_point;
thread_local std::vector<Fp> g_pos_powers;
thread_local std::vector<Fp> g_neg_powers;

uint64_t mulmod(uint64_t a, uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  uint64_t lo = static_cast<uint64_t>(z & Fp::kP);
  uint64_t hi = static_cast<uint64_t>(z >> 61);
  uint64_t s = lo + hi;
  return s >= Fp::kP ? s - Fp::kP : s;
}

Fp mpz_to_fp(const mpz_class& z) {
  // mpz_fdiv_ui returns the nonnegative remainder.
  return Fp::raw(mpz_fdiv_ui(z.get_mpz_t(), Fp::kP));
}
}  // namespace

Fp::Fp(long c) {
  long m = c % static_cast<long>(kP);
  v_ = m < 0 ? static_cast<uint64_t>(m + static_cast<long>(kP)) : static_cast<uint64_t>(m);
}

Fp Fp::operator*(Fp o) const { return raw(mulmod(v_, o.v_)); }

Fp Fp::pow(uint64_t e) const {
  Fp r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in Z/p");
  return pow(kP - 2);
}

ScopedPoint::ScopedPoint(Fp q) : saved_(g_point), had_(g_has_point) {
  if (q.is_zero()) throw std::invalid_argument("specialization point must be nonzero");
  g_point = q;
  g_has_point = true;
  g_pos_powers.assign(1, Fp(1));
  g_neg_powers.assign(1, Fp(1));
}

ScopedPoint::~ScopedPoint() {
  g_point = saved_;
  g_has_point = had_;
  g_pos_powers.assign(1, Fp(1));
  g_neg_powers.assign(1, Fp(1));
}

bool has_point() { return g_has_point; }

Fp Fp::q_power(int k) {
  if (!g_has_point) throw std::logic_error("no specialization point installed");
  std::vector<Fp>& tab = k >= 0 ? g_pos_powers : g_neg_powers;
  std::size_t m = static_cast<std::size_t>(k >= 0 ? k : -k);
  if (tab.empty()) tab.assign(1, Fp(1));
  if (m < 256) {
    Fp step = k >= 0 ? g_point : g_point.inverse();
    while (tab.size() <= m) tab.push_back(tab.back() * step);
    return tab[m];
  }
  return k >= 0 ? g_point.pow(m) : g_point.inverse().pow(m);
}

Fp Fp::from_rational(const Rational& r) {
  Fp d = mpz_to_fp(r.get_den());
  if (d.is_zero()) throw std::domain_error("denominator vanishes mod p");
  return mpz_to_fp(r.get_num()) * d.inverse();
}

Fp Fp::from(const RationalFunc& r) {
  auto eval = [](const LaurentPoly& p) {
    Fp acc;
    for (int k = p.high(); k >= p.low(); --k) acc = acc * q_power(1) + from_rational(p.coeff(k));
    return acc * q_power(p.low());
  };
  if (r.is_zero()) return {};
  Fp den = eval(r.den());
  if (den.is_zero()) throw std::domain_error("specialization hits a pole");
  return eval(r.num()) * den.inverse();
}

// ---------------------------------------------------------------- quantum numbers

RationalFunc qint(int n, int d) {
  if (d <= 0) throw std::invalid_argument("qint: d must be positive");
  // [n]_{q^d} = sum_{k=0}^{|n|-1} q^{d(|n|-1-2k)}, sign(n).
  int m = n < 0 ? -n : n;
  std::map<int, Rational> t;
  for (int k = 0; k < m; ++k) t[d * (m - 1 - 2 * k)] += 1;
  LaurentPoly p = LaurentPoly::from_terms(t);
  return RationalFunc(n < 0 ? -p : p);
}

RationalFunc qfactorial(int n, int d) {
  if (n < 0) throw std::invalid_argument("qfactorial: n must be nonnegative");
  RationalFunc r(1);
  for (int k = 1; k <= n; ++k) r = r * qint(k, d);
  return r;
}

RationalFunc qbinom(int n, int r, int d) {
  if (n < 0 || r < 0 || r > n) throw std::invalid_argument("qbinom: need 0 <= r <= n");
  return qfactorial(n, d) / (qfactorial(r, d) * qfactorial(n - r, d));
}

}  // namespace iqg::scalars
