#include "iqg/weyl.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace iqg::weyl {

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + s + "'");
}

namespace {

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
  }
  return 1;
}

}  // namespace

RootDatum RootDatum::make(Family f, int n) {
  if (n < min_rank(f) || n + 1 > 8)
    throw std::invalid_argument(std::string("unsupported rank for type ") + family_char(f) + std::to_string(n));
  RootDatum R;
  R.family_ = f;
  R.n_ = n;
  // Simple roots of the finite system in orthonormal coordinates.
  int dim = (f == Family::A) ? n + 1 : n;
  std::vector<std::vector<int>> e(n + 1, std::vector<int>(dim, 0));
  for (int i = 1; i < n; ++i) {
    e[i][i - 1] = 1;
    e[i][i] = -1;
  }
  std::vector<int> c(n + 1, 1);
  switch (f) {
    case Family::A:
      e[n][n - 1] = 1;
      e[n][n] = -1;
      break;
    case Family::B:
      e[n][n - 1] = 1;
      for (int i = 2; i <= n; ++i) c[i] = 2;
      break;
    case Family::C:
      e[n][n - 1] = 2;
      for (int i = 1; i < n; ++i) c[i] = 2;
      break;
    case Family::D:
      e[n][n - 2] = 1;
      e[n][n - 1] = 1;
      for (int i = 2; i <= n - 2; ++i) c[i] = 2;
      break;
  }
  c[0] = 1;
  std::vector<int> th(dim, 0);
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < dim; ++k) th[k] += c[i] * e[i][k];
  for (int k = 0; k < dim; ++k) e[0][k] = -th[k];
  auto dot = [&](int i, int j) {
    int s = 0;
    for (int k = 0; k < dim; ++k) s += e[i][k] * e[j][k];
    return s;
  };
  int scale = (f == Family::B) ? 2 : 1;
  R.form_.assign(n + 1, std::vector<int>(n + 1, 0));
  R.cartan_.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) R.form_[i][j] = scale * dot(i, j);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) R.cartan_[i][j] = 2 * R.form_[i][j] / R.form_[j][j];
  R.delta_ = c;

  // Fundamental group, Bourbaki VI 4.8.
  R.pi_.assign(n + 1, {});
  auto perm_from = [&](auto&& fn) {
    std::vector<int> p(n + 1);
    for (int k = 0; k <= n; ++k) p[k] = fn(k);
    return p;
  };
  switch (f) {
    case Family::A:
      for (int j = 1; j <= n; ++j) R.pi_[j] = perm_from([&](int k) { return (k + j) % (n + 1); });
      break;
    case Family::B:
      R.pi_[1] = perm_from([](int k) { return k == 0 ? 1 : (k == 1 ? 0 : k); });
      break;
    case Family::C:
      R.pi_[n] = perm_from([&](int k) { return n - k; });
      break;
    case Family::D:
      R.pi_[1] = perm_from([&](int k) {
        if (k == 0) return 1;
        if (k == 1) return 0;
        if (k == n - 1) return n;
        if (k == n) return n - 1;
        return k;
      });
      if (n % 2 == 0) {
        R.pi_[n] = perm_from([&](int k) { return n - k; });
        R.pi_[n - 1] = perm_from([&](int k) {
          if (k == 0) return n - 1;
          if (k == n - 1) return 0;
          if (k == 1) return n;
          if (k == n) return 1;
          return n - k;
        });
      } else {
        // Order four: 0 -> n -> 1 -> n-1 -> 0, and k -> n-k on the middle nodes.
        R.pi_[n] = perm_from([&](int k) {
          if (k == 0) return n;
          if (k == n) return 1;
          if (k == 1) return n - 1;
          if (k == n - 1) return 0;
          return n - k;
        });
        R.pi_[n - 1] = perm_from([&](int k) {
          if (k == 0) return n - 1;
          if (k == n - 1) return 1;
          if (k == 1) return n;
          if (k == n) return 0;
          return n - k;
        });
      }
      break;
  }

  // Positive roots by closure under simple reflections.
  std::vector<RootVec> queue;
  std::map<RootVec, bool> seen;
  for (int i = 1; i <= n; ++i) {
    RootVec r = R.simple(i);
    seen[r] = true;
    queue.push_back(r);
  }
  for (std::size_t at = 0; at < queue.size(); ++at) {
    for (int i = 1; i <= n; ++i) {
      RootVec r = act_letter(R, s(i), queue[at]);
      if (is_positive(r) && !seen.count(r)) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  }
  R.positive_ = queue;
  return R;
}

std::string RootDatum::name() const { return std::string(1, family_char(family_)) + std::to_string(n_); }

RootVec RootDatum::theta() const {
  RootVec t = delta_;
  t[0] = 0;
  return t;
}

std::vector<int> RootDatum::special_nodes() const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j)
    if (!pi_[j].empty()) out.push_back(j);
  return out;
}

const std::vector<int>& RootDatum::pi_perm(int j) const {
  if (j < 1 || j > n_ || pi_[j].empty())
    throw std::invalid_argument("no fundamental-group element pi_" + std::to_string(j) + " in " + name());
  return pi_[j];
}

RootVec RootDatum::simple(int i) const {
  RootVec r(n_ + 1, 0);
  r[i] = 1;
  return r;
}

int RootDatum::height(const RootVec& r) const {
  int h = 0;
  for (int j = 1; j <= n_; ++j) h += r[j] - r[0] * delta_[j];
  return h;
}

Letter s(int i) { return Letter{false, i}; }
Letter pi(int j) { return Letter{true, j}; }

Word seg(int k, int l) {
  Word w;
  int step = (k <= l) ? 1 : -1;
  for (int t = k;; t += step) {
    w.push_back(s(t));
    if (t == l) break;
  }
  return w;
}

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const Word& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

Word power(const Word& w, int e) {
  Word out;
  for (int t = 0; t < e; ++t) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok[0] == '[') {
      int k = 0, l = 0;
      char c1 = 0, c2 = 0, c3 = 0;
      std::istringstream t(tok);
      if (!(t >> c1 >> k >> c2 >> l >> c3) || c2 != ',' || c3 != ']')
        throw std::invalid_argument("bad segment token '" + tok + "'");
      Word sg = seg(k, l);
      w.insert(w.end(), sg.begin(), sg.end());
    } else if (tok.rfind("pi", 0) == 0) {
      std::string rest = tok.substr(2);
      w.push_back(pi(rest.empty() ? 1 : std::stoi(rest)));
    } else if (tok[0] == 's') {
      w.push_back(s(std::stoi(tok.substr(1))));
    } else {
      throw std::invalid_argument("bad word token '" + tok + "'");
    }
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += (l.is_pi ? "pi" : "s") + std::to_string(l.index);
  }
  return out;
}

int s_count(const Word& w) {
  int c = 0;
  for (const Letter& l : w) c += l.is_pi ? 0 : 1;
  return c;
}

AffineMap AffineMap::identity(int n) {
  AffineMap m;
  m.n = n;
  m.A.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.A[i * n + i] = 1;
  m.b.assign(n, 0);
  return m;
}

AffineMap AffineMap::translation(const std::vector<int64_t>& v) {
  AffineMap m = identity(static_cast<int>(v.size()));
  m.b = v;
  return m;
}

AffineMap AffineMap::operator*(const AffineMap& o) const {
  AffineMap r;
  r.n = n;
  r.A.assign(static_cast<std::size_t>(n) * n, 0);
  r.b = b;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int64_t a = A[i * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) r.A[i * n + j] += a * o.A[k * n + j];
      r.b[i] += a * o.b[k];
    }
  return r;
}

AffineMap AffineMap::inverse() const {
  // Gauss-Jordan over Q; the result must be integral.
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = static_cast<long>(A[i * n + j]);
    M[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular affine map");
    std::swap(M[piv], M[col]);
    mpq_class inv = 1 / M[col][col];
    for (auto& x : M[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      mpq_class f = M[r][col];
      for (int j = 0; j < 2 * n; ++j) M[r][j] -= f * M[col][j];
    }
  }
  AffineMap out;
  out.n = n;
  out.A.assign(static_cast<std::size_t>(n) * n, 0);
  out.b.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const mpq_class& x = M[i][n + j];
      if (x.get_den() != 1) throw std::domain_error("affine map inverse is not integral");
      out.A[i * n + j] = x.get_num().get_si();
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.b[i] -= out.A[i * n + j] * b[j];
  return out;
}

std::vector<int64_t> AffineMap::apply(const std::vector<int64_t>& x) const {
  std::vector<int64_t> y = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += A[i * n + j] * x[j];
  return y;
}

bool AffineMap::is_translation() const { return A == identity(n).A; }

std::size_t AffineMap::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (int64_t v : A) h = (h ^ static_cast<std::size_t>(v + 1000)) * 1099511628211ULL;
  for (int64_t v : b) h = (h ^ static_cast<std::size_t>(v + 1000)) * 1099511628211ULL;
  return h;
}

namespace {

AffineMap reflection_map(const RootDatum& R, int i) {
  int n = R.rank();
  AffineMap m = AffineMap::identity(n);
  if (i > 0) {
    for (int j = 1; j <= n; ++j) m.A[(j - 1) * n + (i - 1)] -= R.a(j, i);
    return m;
  }
  // s_0(x) = x - (<theta,x> - 1) theta^vee, with <alpha_j, theta^vee> = -a_{j0}.
  for (int j = 1; j <= n; ++j) {
    int tv = -R.a(j, 0);
    for (int k = 1; k <= n; ++k) m.A[(j - 1) * n + (k - 1)] -= tv * R.delta()[k];
    m.b[j - 1] = tv;
  }
  return m;
}

AffineMap pi_map(const RootDatum& R, int j) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, AffineMap> cache;
  auto key = std::make_tuple(static_cast<int>(R.family()), R.rank(), j);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  R.pi_perm(j);  // validates j
  int n = R.rank();
  std::vector<int> all, rest;
  for (int k = 1; k <= n; ++k) {
    all.push_back(k);
    if (k != j) rest.push_back(k);
  }
  std::vector<int64_t> t(n, 0);
  t[j - 1] = 1;
  AffineMap m = AffineMap::translation(t) * affine_action(R, longest_element(R, rest)) *
                affine_action(R, longest_element(R, all));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, m);
  return m;
}

}  // namespace

AffineMap letter_map(const RootDatum& R, const Letter& l) {
  if (l.index < 0 || l.index > R.rank()) throw std::invalid_argument("letter index out of range");
  return l.is_pi ? pi_map(R, l.index) : reflection_map(R, l.index);
}

AffineMap affine_action(const RootDatum& R, const Word& w) {
  AffineMap m = AffineMap::identity(R.rank());
  for (const Letter& l : w) m = m * letter_map(R, l);
  return m;
}

RootVec map_on_root(const RootDatum& R, const AffineMap& g, const RootVec& r) {
  int n = R.rank();
  const auto& c = R.delta();
  AffineMap gi = g.inverse();
  std::vector<int64_t> beta(n);
  for (int j = 1; j <= n; ++j) beta[j - 1] = r[j] - static_cast<int64_t>(r[0]) * c[j];
  std::vector<int64_t> cp(n, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) cp[j] += beta[k] * gi.A[k * n + j];
  // f(g^{-1}x) with g^{-1}x = A^{-1}x + b', where b' = -A^{-1}b.
  int64_t k = r[0];
  for (int j = 0; j < n; ++j) k += beta[j] * gi.b[j];
  RootVec out(n + 1);
  out[0] = static_cast<int>(k);
  for (int j = 1; j <= n; ++j) out[j] = static_cast<int>(cp[j - 1] + k * c[j]);
  return out;
}

RootVec act_letter(const RootDatum& R, const Letter& l, const RootVec& r) {
  int m = R.nodes();
  if (l.is_pi) {
    const auto& p = R.pi_perm(l.index);
    RootVec out(m);
    for (int k = 0; k < m; ++k) out[p[k]] = r[k];
    return out;
  }
  int i = l.index;
  int pairing = 0;
  for (int j = 0; j < m; ++j) pairing += r[j] * R.a(j, i);
  RootVec out = r;
  out[i] -= pairing;
  return out;
}

RootVec act_on_root(const RootDatum& R, const Word& w, const RootVec& r) {
  RootVec out = r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = act_letter(R, *it, out);
  return out;
}

bool is_positive(const RootVec& r) {
  bool nonzero = false;
  for (int x : r) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

std::string root_to_string(const RootVec& r) {
  std::string out;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] == 0) continue;
    if (!out.empty()) out += (r[j] > 0 ? " + " : " - ");
    else if (r[j] < 0) out += "-";
    int a = r[j] < 0 ? -r[j] : r[j];
    if (a != 1) out += std::to_string(a) + "*";
    out += "a" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

int length(const RootDatum& R, const Word& w) {
  int len = 0;
  Word prefix;
  for (const Letter& l : w) {
    if (!l.is_pi) len += is_positive(act_on_root(R, prefix, R.simple(l.index))) ? 1 : -1;
    prefix.push_back(l);
  }
  return len;
}

bool is_reduced(const RootDatum& R, const Word& w) { return length(R, w) == s_count(w); }

int alcove_length(const RootDatum& R, const AffineMap& g) {
  int n = R.rank();
  int64_t N = R.height(R.theta()) + 1;
  // N * g(p) for p = (1/N) * sum of fundamental coweights.
  std::vector<int64_t> gp(n, 0);
  for (int i = 0; i < n; ++i) {
    gp[i] = N * g.b[i];
    for (int j = 0; j < n; ++j) gp[i] += g.A[i * n + j];
  }
  int64_t total = 0;
  for (const RootVec& beta : R.finite_positive_roots()) {
    int64_t y = 0;
    for (int j = 1; j <= n; ++j) y += beta[j] * gp[j - 1];
    int64_t fl = (y >= 0) ? y / N : -((-y + N - 1) / N);
    total += fl < 0 ? -fl : fl;
  }
  return static_cast<int>(total);
}

int coefficient_sum(const RootDatum& R, int i) {
  int s = 0;
  for (const RootVec& beta : R.finite_positive_roots()) s += beta[i];
  return s;
}

Word longest_element(const RootDatum& R, const std::vector<int>& nodes) {
  Word w;
  for (;;) {
    bool grew = false;
    for (int i : nodes) {
      if (is_positive(act_on_root(R, w, R.simple(i)))) {
        w.push_back(s(i));
        grew = true;
        break;
      }
    }
    if (!grew) return w;
  }
}

namespace {

// [n-i, n-1] ... [2, i+1][1, i] (empty when i = n).
Word shift_block(int n, int i) {
  Word w;
  for (int t = n - i; t >= 1; --t) {
    Word sg = seg(t, t + i - 1);
    w.insert(w.end(), sg.begin(), sg.end());
  }
  return w;
}

// r_m = s_n [m, n-1][m-1, n-2]
Word r_word(int n, int m) { return concat({{s(n)}, seg(m, n - 1), seg(m - 1, n - 2)}); }

// r_from r_{from-2} ... down to r_to (empty if from < to).
Word r_chain(int n, int from, int to) {
  Word w;
  for (int m = from; m >= to; m -= 2) {
    Word r = r_word(n, m);
    w.insert(w.end(), r.begin(), r.end());
  }
  return w;
}

Word d_block(int n) { return concat({{s(0)}, seg(2, n - 1), seg(1, n - 2), {s(n)}}); }
Word d_odd_head(int n) { return concat({{pi(1)}, seg(1, n - 2), {s(n)}}); }
Word b_block(int n) { return concat({{s(0)}, seg(2, n), seg(1, n)}); }

void check_index(const RootDatum& R, int i) {
  if (i < 1 || i > R.rank()) throw std::out_of_range("node index out of range");
}

}  // namespace

Word fundamental_weight_word(const RootDatum& R, int i) {
  check_index(R, i);
  int n = R.rank();
  switch (R.family()) {
    case Family::A: {
      Word w;
      for (int t = n - i + 1; t >= 1; --t) {
        Word sg = seg(t, t + i - 1);
        w.insert(w.end(), sg.begin(), sg.end());
      }
      w.insert(w.begin(), pi(i));
      return w;
    }
    case Family::B:
      if (i % 2 == 1) return concat({{pi(1)}, seg(1, n), power(b_block(n), (i - 1) / 2), shift_block(n, i)});
      return concat({power(b_block(n), i / 2), shift_block(n, i)});
    case Family::C: {
      if (i == n) {
        Word w{pi(n), s(n)};
        for (int t = n - 1; t >= 1; --t) {
          Word sg = seg(t, n);
          w.insert(w.end(), sg.begin(), sg.end());
        }
        return w;
      }
      return concat({power(concat({{s(0)}, seg(1, n)}), i), shift_block(n, i)});
    }
    case Family::D: {
      if (i <= n - 2) {
        if (i % 2 == 0) return concat({power(d_block(n), i / 2), shift_block(n, i)});
        return concat({d_odd_head(n), power(d_block(n), (i - 1) / 2), shift_block(n, i)});
      }
      if (i == n - 1) {
        if (i % 2 == 0) return concat({{pi(n - 1)}, r_chain(n, n - 2, 3), {s(n)}, seg(1, n - 1)});
        return concat({{pi(n - 1), s(n - 1), s(n - 2)}, r_chain(n, n - 3, 3), {s(n)}, seg(1, n - 1)});
      }
      if (i % 2 == 0) return concat({{pi(n)}, r_chain(n, n - 2, 2), {s(n)}});
      return concat({{pi(n), s(n - 1), s(n - 2)}, r_chain(n, n - 3, 2), {s(n)}});
    }
  }
  return {};
}

Word omega_prime_word(const RootDatum& R, int i) {
  Word w = fundamental_weight_word(R, i);
  if (w.empty() || w.back().is_pi || w.back().index != i)
    throw std::logic_error("fundamental weight word does not end in s_i");
  w.pop_back();
  return w;
}

Word zeta_word(const RootDatum& R, int i) {
  check_index(R, i);
  int n = R.rank();
  switch (R.family()) {
    case Family::A:
      return {pi(i)};
    case Family::B:
      if (i % 2 == 1) return concat({{pi(1)}, seg(1, n), power(b_block(n), (i - 1) / 2)});
      return power(b_block(n), i / 2);
    case Family::C:
      if (i == n) throw std::out_of_range("zeta_i is defined for i < n in type C");
      return power(seg(0, n), i);
    case Family::D:
      if (i <= n - 2) {
        if (i % 2 == 0) return power(d_block(n), i / 2);
        return concat({d_odd_head(n), power(d_block(n), (i - 1) / 2)});
      }
      if (i == n - 1) {
        if (i % 2 == 0) return concat({{pi(n - 1)}, r_chain(n, n - 2, 3), {s(n)}});
        return concat({{pi(n - 1), s(n - 1), s(n - 2)}, r_chain(n, n - 3, 3), {s(n)}});
      }
      if (i % 2 == 0) return concat({{pi(n)}, r_chain(n, n - 2, 4), {s(n)}, seg(2, n - 1)});
      return concat({{pi(n), s(n - 1), s(n - 2)}, r_chain(n, n - 3, 4), {s(n)}, seg(2, n - 1)});
  }
  return {};
}

Word tau_word(int k, int l) {
  if (l < 1 || l > k) throw std::out_of_range("tau_l needs 1 <= l <= k");
  Word w;
  for (int t = k - l + 1; t >= 2; --t) {
    Word sg = seg(t, t + l - 1);
    w.insert(w.end(), sg.begin(), sg.end());
  }
  if (l >= 2) {
    Word sg = seg(1, l - 1);
    w.insert(w.end(), sg.begin(), sg.end());
  }
  return w;
}

int stated_length(const RootDatum& R, int i) {
  check_index(R, i);
  int n = R.rank();
  switch (R.family()) {
    case Family::A: return i * (n - i + 1);
    case Family::B: return i * (2 * n - i);
    case Family::C: return i < n ? i * (n + 1) : n * (n + 1) / 2;
    case Family::D: return i <= n - 2 ? i * (2 * n - i - 1) : n * (n - 1) / 2;
  }
  return -1;
}

WeightWordCase verify_weight_word(const RootDatum& R, int i) {
  WeightWordCase c;
  c.family = R.family();
  c.n = R.rank();
  c.i = i;
  Word w = fundamental_weight_word(R, i);
  c.word = word_to_string(w);
  c.letters = s_count(w);
  c.length = length(R, w);
  c.stated = stated_length(R, i);
  c.reduced = c.length == c.letters;
  AffineMap m = affine_action(R, w);
  c.translation_vector = m.b;
  std::vector<int64_t> e(R.rank(), 0);
  e[i - 1] = 1;
  c.translation = m == AffineMap::translation(e);
  return c;
}

namespace {

struct OrbitChecker {
  const RootDatum& R;
  std::vector<CaseResult> out;

  RootVec alpha(int k) const { return R.simple(k); }
  RootVec sum(std::initializer_list<std::pair<int, int>> terms) const {
    RootVec r(R.nodes(), 0);
    for (auto [k, c] : terms) r[k] += c;
    return r;
  }
  // alpha_0 + alpha_2 + ... + alpha_{n-2} + alpha_last
  RootVec chain0(int last) const {
    RootVec r(R.nodes(), 0);
    r[0] = 1;
    for (int j = 2; j <= R.rank() - 2; ++j) r[j] += 1;
    r[last] += 1;
    return r;
  }
  void expect(const std::string& label, const Word& w, const RootVec& arg, const RootVec& want) {
    RootVec got = act_on_root(R, w, arg);
    CaseResult c;
    c.label = R.name() + " " + label;
    c.pass = got == want;
    c.detail = "got " + root_to_string(got) + ", expected " + root_to_string(want);
    c.got = got;
    c.expected = want;
    out.push_back(c);
  }
};

}  // namespace

std::vector<CaseResult> verify_orbit_lemmas(const RootDatum& R) {
  OrbitChecker ck{R, {}};
  int n = R.rank();
  auto lbl = [](const std::string& w, int k) { return w + ".alpha_" + std::to_string(k); };
  switch (R.family()) {
    case Family::D: {
      Word X = d_block(n), Y = d_odd_head(n);
      ck.expect(lbl("X", 0), X, ck.alpha(0), ck.sum({{0, 1}, {1, 1}, {2, 2}, {3, 1}}));
      for (int j = 1; j <= n - 3; ++j) ck.expect(lbl("X", j), X, ck.alpha(j), ck.alpha(j + 2));
      ck.expect(lbl("X", n - 1), X, ck.alpha(n - 1), ck.alpha(1));
      ck.expect(lbl("X", n - 2), X, ck.alpha(n - 2), ck.chain0(n));
      {
        RootVec want = R.theta();
        for (int& x : want) x = -x;
        want[0] -= 2;
        ck.expect(lbl("X", n), X, ck.alpha(n), want);
      }
      ck.expect(lbl("Y", 0), Y, ck.alpha(0), ck.sum({{0, 1}, {1, 1}, {2, 1}}));
      for (int j = 1; j <= n - 3; ++j) ck.expect(lbl("Y", j), Y, ck.alpha(j), ck.alpha(j + 1));
      ck.expect(lbl("Y", n - 1), Y, ck.alpha(n - 1), ck.chain0(n - 1));
      ck.expect(lbl("Y", n - 2), Y, ck.alpha(n - 2), ck.alpha(n));
      {
        RootVec want = ck.chain0(n);
        for (int& x : want) x = -x;
        ck.expect(lbl("Y", n), Y, ck.alpha(n), want);
      }
      ck.expect(lbl("X^2", n - 2), power(X, 2), ck.alpha(n - 2), ck.alpha(2));
      ck.expect(lbl("YX", n - 2), concat({Y, X}), ck.alpha(n - 2), ck.alpha(1));
      for (int i = 1; i <= n - 2; ++i) {
        Word z = zeta_word(R, i);
        for (int k = 1; k <= n - 1; ++k) {
          int m = (k + i) % n;
          RootVec want;
          if (i % 2 == 0) want = (m == 0) ? ck.chain0(n) : ck.alpha(m);
          else if (m == 0) want = ck.chain0(n - 1);
          else want = (m == n - 1) ? ck.alpha(n) : ck.alpha(m);
          ck.expect(lbl("zeta_" + std::to_string(i), k), z, ck.alpha(k), want);
        }
      }
      for (int i : {n - 1, n}) {
        Word z = zeta_word(R, i);
        std::string zn = "zeta_" + std::to_string(i);
        int top = (i == n - 1) ? n - 1 : n - 2;
        for (int k = 2; k <= top; ++k) ck.expect(lbl(zn, k), z, ck.alpha(k), ck.alpha(k - 1));
        if (i == n) ck.expect(lbl(zn, n), z, ck.alpha(n), ck.alpha(n - 2));
        // The k = 1 formula is displayed for odd i only.
        if (i % 2 == 1) {
          RootVec want = act_on_root(R, concat({{pi(i)}, seg(n - 1, 2)}), ck.alpha(1));
          ck.expect(lbl(zn, 1), z, ck.alpha(1), want);
        }
      }
      break;
    }
    case Family::B: {
      RootVec t0(R.nodes(), 0);
      t0[0] = 1;
      t0[n] = 2;
      for (int j = 2; j <= n - 1; ++j) t0[j] = 1;
      for (int i = 1; i <= n; ++i) {
        Word z = zeta_word(R, i);
        for (int k = 1; k <= n - 1; ++k) {
          int m = (i + k) % n;
          ck.expect(lbl("zeta_" + std::to_string(i), k), z, ck.alpha(k), m == 0 ? t0 : ck.alpha(m));
        }
      }
      break;
    }
    case Family::C: {
      RootVec t0(R.nodes(), 1);
      for (int i = 1; i <= n - 1; ++i) {
        Word z = zeta_word(R, i);
        for (int k = 1; k <= n - 1; ++k) {
          int m = (i + k) % n;
          ck.expect(lbl("zeta_" + std::to_string(i), k), z, ck.alpha(k), m == 0 ? t0 : ck.alpha(m));
        }
      }
      break;
    }
    case Family::A:
      // pi^i rotates the simple roots.
      for (int i = 1; i <= n; ++i)
        for (int k = 0; k <= n; ++k)
          ck.expect(lbl("pi_" + std::to_string(i), k), {pi(i)}, ck.alpha(k), ck.alpha((k + i) % (n + 1)));
      break;
  }
  return ck.out;
}

}  // namespace iqg::weyl
