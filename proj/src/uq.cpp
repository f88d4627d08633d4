#include "iqg/uq.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace iqg::uq {

using alg::Kind;
using scalars::Fp;
using scalars::RationalFunc;

namespace {

std::atomic<int> g_cap{12};

template <class F>
uint64_t point_key() {
  if constexpr (std::is_same_v<F, Fp>) return Fp::q_power(1).value();
  return 0;
}

template <class F>
F field_q(int k) {
  return F::q_power(k);
}

// ------------------------------------------------------------------ triangular

template <class F>
using WordImage = std::vector<std::pair<Monomial, F>>;

template <class F>
struct TriCache {
  std::mutex mu;
  const RootDatum* R = nullptr;
  uint64_t point = 0;
  std::unordered_map<std::string, std::shared_ptr<const WordImage<F>>> words;
};

template <class F>
TriCache<F>& tri_cache() {
  static TriCache<F> c;
  return c;
}

// (F-word)(E-word)K_mu times one more letter, accumulated into out.
template <class F>
void tri_append(const RootDatum& R, const Monomial& m, const F& a, char l,
                std::unordered_map<Monomial, F, alg::MonomialHash>& out) {
  auto add = [&](Monomial&& mono, const F& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.try_emplace(std::move(mono), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  Kind t = alg::kind(l);
  if (t == Kind::B) throw std::invalid_argument("triangular_form: B letters must be embedded first");
  int j = alg::node(l);
  F coef = a;
  if (!m.k.is_zero()) {
    int e = alg::pairing(R, m.k, j);
    if (e) coef = coef * field_q<F>(t == Kind::E ? e : -e);
  }
  if (t == Kind::E) {
    add(Monomial{m.w + l, m.k}, coef);
    return;
  }
  std::size_t split = 0;
  while (split < m.w.size() && alg::kind(m.w[split]) == Kind::F) ++split;
  std::string nw = m.w.substr(0, split) + l + m.w.substr(split);
  add(Monomial{std::move(nw), m.k}, coef);
  // (K_j - K_j^{-1})/(q_j - q_j^{-1}) inserted at each E_j of the E-part.
  int d = R.d(j);
  F inv = (field_q<F>(d) - field_q<F>(-d)).inverse();
  char ej = alg::E(j);
  for (std::size_t p = split; p < m.w.size(); ++p) {
    if (m.w[p] != ej) continue;
    int pr = 0;  // (alpha_j, degree of the letters right of p)
    for (std::size_t r = p + 1; r < m.w.size(); ++r) pr += R.form(j, alg::node(m.w[r]));
    std::string w = m.w.substr(0, p) + m.w.substr(p + 1);
    add(Monomial{w, m.k + alg::k_node(R, j, 1)}, coef * inv * field_q<F>(pr));
    add(Monomial{std::move(w), m.k + alg::k_node(R, j, -1)}, -(coef * inv * field_q<F>(-pr)));
  }
}

template <class F>
std::shared_ptr<const WordImage<F>> tri_word(const RootDatum& R, const std::string& w) {
  auto& cache = tri_cache<F>();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    uint64_t pt = point_key<F>();
    if (cache.R != &R || cache.point != pt || cache.words.size() > 200000) {
      cache.words.clear();
      cache.R = &R;
      cache.point = pt;
    }
    auto it = cache.words.find(w);
    if (it != cache.words.end()) return it->second;
  }
  WordImage<F> img;
  if (w.empty()) {
    img.emplace_back(Monomial{}, F(1));
  } else {
    // Already-triangular words map to themselves.
    bool sorted = true;
    bool seen_e = false;
    for (char c : w) {
      Kind t = alg::kind(c);
      if (t == Kind::E) seen_e = true;
      else if (t == Kind::F && seen_e) sorted = false;
      else if (t == Kind::B) throw std::invalid_argument("triangular_form: B letters must be embedded first");
    }
    if (sorted) {
      img.emplace_back(Monomial{w, {}}, F(1));
    } else {
      auto prefix = tri_word<F>(R, w.substr(0, w.size() - 1));
      std::unordered_map<Monomial, F, alg::MonomialHash> acc;
      for (const auto& [m, c] : *prefix) tri_append<F>(R, m, c, w.back(), acc);
      img.assign(acc.begin(), acc.end());
    }
  }
  auto ptr = std::make_shared<const WordImage<F>>(std::move(img));
  std::lock_guard<std::mutex> lock(tri_cache<F>().mu);
  tri_cache<F>().words.emplace(w, ptr);
  return ptr;
}

// ------------------------------------------------------------------ Serre pieces

template <class F>
using SparseRow = std::vector<std::pair<int, F>>;  // ascending columns

// Graded piece of the free algebra on E_0..E_n with fixed letter counts, and an
// echelon basis of the Serre ideal inside it (pivot = largest column of a row).
template <class F>
struct Piece {
  std::vector<std::string> words;  // lexicographic
  std::unordered_map<std::string, int> index;
  std::map<int, SparseRow<F>> pivots;  // pivot column -> row with entry 1 at the pivot
  mutable std::mutex mu;
  mutable std::unordered_map<int, std::shared_ptr<const SparseRow<F>>> residues;

  // Eliminate pivots from a working vector, highest column first.
  SparseRow<F> reduce(std::map<int, F> v) const {
    SparseRow<F> out;
    while (!v.empty()) {
      auto it = std::prev(v.end());
      int col = it->first;
      F c = it->second;
      v.erase(it);
      auto pv = pivots.find(col);
      if (pv == pivots.end()) {
        out.emplace_back(col, c);
        continue;
      }
      for (const auto& [k, x] : pv->second) {
        if (k == col) continue;
        auto [jt, fresh] = v.try_emplace(k, -(c * x));
        if (!fresh) {
          jt->second -= c * x;
          if (jt->second.is_zero()) v.erase(jt);
        }
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  void insert(std::map<int, F> v) {
    SparseRow<F> r = reduce(std::move(v));
    if (r.empty()) return;
    F inv = r.back().second.inverse();
    for (auto& [k, x] : r) x = x * inv;
    pivots.emplace(r.back().first, std::move(r));
  }

  std::shared_ptr<const SparseRow<F>> residue(int col) const {
    std::lock_guard<std::mutex> lock(mu);
    auto it = residues.find(col);
    if (it != residues.end()) return it->second;
    std::map<int, F> v;
    v.emplace(col, F(1));
    auto r = std::make_shared<const SparseRow<F>>(reduce(std::move(v)));
    residues.emplace(col, r);
    return r;
  }
};

template <class F>
struct PieceCache {
  std::recursive_mutex mu;
  std::map<std::tuple<const RootDatum*, std::string, uint64_t>, std::shared_ptr<const Piece<F>>> pieces;
};

template <class F>
PieceCache<F>& piece_cache() {
  static PieceCache<F> c;
  return c;
}

std::string count_key(const std::vector<int>& m) {
  std::string s;
  for (int x : m) s += static_cast<char>(x);
  return s;
}

template <class F>
std::shared_ptr<const Piece<F>> get_piece(const RootDatum& R, const std::vector<int>& m) {
  auto& cache = piece_cache<F>();
  std::lock_guard<std::recursive_mutex> lock(cache.mu);
  auto key = std::make_tuple(&R, count_key(m), point_key<F>());
  auto it = cache.pieces.find(key);
  if (it != cache.pieces.end()) return it->second;

  auto piece = std::make_shared<Piece<F>>();
  std::string letters;
  for (int i = 0; i < R.nodes(); ++i) letters += std::string(m[i], alg::E(i));
  do {
    piece->index.emplace(letters, static_cast<int>(piece->words.size()));
    piece->words.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));

  if (piece->words.size() > 1) {
    // E_j * (ideal of degree m - e_j)
    for (int j = 0; j < R.nodes(); ++j) {
      if (m[j] == 0) continue;
      std::vector<int> sub = m;
      --sub[j];
      auto sp = get_piece<F>(R, sub);
      for (const auto& [pc, row] : sp->pivots) {
        std::map<int, F> v;
        for (const auto& [k, x] : row) v.emplace(piece->index.at(alg::E(j) + sp->words[k]), x);
        piece->insert(std::move(v));
      }
    }
    // S_ij * v
    for (int i = 0; i < R.nodes(); ++i)
      for (int j = 0; j < R.nodes(); ++j) {
        if (i == j) continue;
        int e = 1 - R.a(j, i);
        if (m[i] < e || m[j] < 1) continue;
        std::vector<int> rest = m;
        rest[i] -= e;
        rest[j] -= 1;
        auto rp = get_piece<F>(R, rest);
        std::vector<std::pair<std::string, F>> serre;
        for (int r = 0; r <= e; ++r) {
          F c = scalars::field_from<F>(scalars::qbinom(e, r, R.d(i)));
          if (r % 2) c = -c;
          serre.emplace_back(std::string(e - r, alg::E(i)) + alg::E(j) + std::string(r, alg::E(i)), c);
        }
        for (const auto& v : rp->words) {
          std::map<int, F> row;
          for (const auto& [w, c] : serre) {
            auto [jt, fresh] = row.try_emplace(piece->index.at(w + v), c);
            if (!fresh) jt->second += c;
          }
          piece->insert(std::move(row));
        }
      }
  }
  std::shared_ptr<const Piece<F>> done = piece;
  cache.pieces.emplace(key, done);
  return done;
}

template <class F>
std::vector<int> counts_of(const RootDatum& R, const std::string& w, std::size_t b, std::size_t e) {
  std::vector<int> m(R.nodes(), 0);
  for (std::size_t p = b; p < e; ++p) ++m[alg::node(w[p])];
  return m;
}

}  // namespace

int degree_cap() { return g_cap.load(); }
void set_degree_cap(int cap) { g_cap.store(cap); }

template <class F>
Element<F> triangular_form(const Element<F>& x) {
  const RootDatum* R = x.datum();
  typename Element<F>::TermMap out;
  for (const auto& [m, c] : x.terms()) {
    if (m.w.empty()) {
      Element<F>::accumulate(out, m, c);
      continue;
    }
    auto img = tri_word<F>(*R, m.w);
    for (const auto& [mono, f] : *img) Element<F>::accumulate(out, Monomial{mono.w, mono.k + m.k}, c.scaled(f));
  }
  return Element<F>::from_map(R, std::move(out));
}

template <class F>
Element<F> normal_form(const Element<F>& x) {
  const RootDatum* R = x.datum();
  if (!R) return x;
  Element<F> tri = triangular_form(x);
  typename Element<F>::TermMap out;
  int cap = degree_cap();
  for (const auto& [m, c] : tri.terms()) {
    std::size_t split = 0;
    while (split < m.w.size() && alg::kind(m.w[split]) == Kind::F) ++split;
    if (static_cast<int>(split) > cap || static_cast<int>(m.w.size() - split) > cap)
      throw DegreeCapExceeded("word length exceeds the degree cap of " + std::to_string(cap));
    // F-part as an E-word
    std::string fw = m.w.substr(0, split);
    for (char& ch : fw) ch = alg::E(alg::node(ch));
    std::string ew = m.w.substr(split);
    auto fp = get_piece<F>(*R, counts_of<F>(*R, fw, 0, fw.size()));
    auto ep = get_piece<F>(*R, counts_of<F>(*R, ew, 0, ew.size()));
    auto fr = fp->residue(fp->index.at(fw));
    auto er = ep->residue(ep->index.at(ew));
    for (const auto& [fc, fx] : *fr) {
      std::string f = fp->words[fc];
      for (char& ch : f) ch = alg::Fl(alg::node(ch));
      for (const auto& [ec, ex] : *er)
        Element<F>::accumulate(out, Monomial{f + ep->words[ec], m.k}, c.scaled(fx * ex));
    }
  }
  return Element<F>::from_map(R, std::move(out));
}

template <class F>
Element<F> serre_poly(const RootDatum* R, int i, int j, Kind sign) {
  if (i == j) throw std::invalid_argument("serre_poly: need i != j");
  if (sign == Kind::B) throw std::invalid_argument("serre_poly: sign must be E or F");
  char x = sign == Kind::E ? alg::E(i) : alg::Fl(i);
  char y = sign == Kind::E ? alg::E(j) : alg::Fl(j);
  int e = 1 - R->a(j, i);
  Element<F> out(R);
  for (int r = 0; r <= e; ++r) {
    auto c = alg::coeff<F>(scalars::qbinom(e, r, R->d(i)));
    if (r % 2) c = -c;
    out += Element<F>::monomial(R, Monomial{std::string(e - r, x) + y + std::string(r, x), {}}, c);
  }
  return out;
}

int serre_quotient_dimension(const RootDatum* R, const std::vector<int>& counts) {
  auto p = get_piece<RationalFunc>(*R, counts);
  return static_cast<int>(p->words.size() - p->pivots.size());
}

std::string Positivity::to_string() const {
  switch (mode) {
    case Plus: return "plus";
    case DiAtLeast: return "d_" + std::to_string(i) + ">=" + std::to_string(r);
    case NotI: return "neq_" + std::to_string(i);
  }
  return "?";
}

bool degree_satisfies(const RootDatum& R, const RootVec& deg, const Positivity& mode) {
  bool pos = false;
  for (int j = 1; j <= R.rank(); ++j) {
    if (mode.mode != Positivity::Plus && j == mode.i) continue;
    if (deg[j] < 0) return false;
    if (deg[j] > 0) pos = true;
  }
  if (!pos) return false;
  if (mode.mode == Positivity::DiAtLeast) return deg[mode.i] >= mode.r;
  if (mode.mode == Positivity::Plus) return true;
  return true;
}

void clear_caches() {
  {
    auto& c = piece_cache<RationalFunc>();
    std::lock_guard<std::recursive_mutex> lock(c.mu);
    c.pieces.clear();
  }
  {
    auto& c = piece_cache<Fp>();
    std::lock_guard<std::recursive_mutex> lock(c.mu);
    c.pieces.clear();
  }
  {
    auto& c = tri_cache<RationalFunc>();
    std::lock_guard<std::mutex> lock(c.mu);
    c.words.clear();
  }
  {
    auto& c = tri_cache<Fp>();
    std::lock_guard<std::mutex> lock(c.mu);
    c.words.clear();
  }
}

template Element<RationalFunc> triangular_form(const Element<RationalFunc>&);
template Element<Fp> triangular_form(const Element<Fp>&);
template Element<RationalFunc> normal_form(const Element<RationalFunc>&);
template Element<Fp> normal_form(const Element<Fp>&);
template Element<RationalFunc> serre_poly(const RootDatum*, int, int, Kind);
template Element<Fp> serre_poly(const RootDatum*, int, int, Kind);

}  // namespace iqg::uq
