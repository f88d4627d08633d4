#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iqg::weyl {

enum class Family { A, B, C, D };

char family_char(Family f);
Family parse_family(const std::string& s);

// Coefficient vector over the affine simple roots alpha_0..alpha_n.
using RootVec = std::vector<int>;

class RootDatum {
 public:
  static RootDatum make(Family f, int n);

  Family family() const { return family_; }
  int rank() const { return n_; }
  int nodes() const { return n_ + 1; }
  std::string name() const;  // e.g. "D4"

  // Affine Cartan matrix a_ij = 2(a_i,a_j)/(a_j,a_j) over I = {0..n}.
  int a(int i, int j) const { return cartan_[i][j]; }
  // Symmetric form (a_i, a_j) over I, scaled so the shortest roots have square 2.
  int form(int i, int j) const { return form_[i][j]; }
  int d(int i) const { return form_[i][i] / 2; }
  // Coefficients of delta = alpha_0 + theta over I (entry 0 is 1).
  const std::vector<int>& delta() const { return delta_; }
  RootVec theta() const;  // finite part, entry 0 is 0
  std::vector<int> special_nodes() const;  // J: nonzero i with c_i = 1
  // Permutation p of I with pi_j(alpha_k) = alpha_{p[k]} (Bourbaki tables).
  const std::vector<int>& pi_perm(int j) const;
  // Positive roots of the finite root system, as vectors over I with entry 0 = 0.
  const std::vector<RootVec>& finite_positive_roots() const { return positive_; }

  RootVec simple(int i) const;
  int height(const RootVec& r) const;  // sum over finite coordinates

 private:
  Family family_ = Family::A;
  int n_ = 0;
  std::vector<std::vector<int>> cartan_, form_;
  std::vector<int> delta_;
  std::vector<std::vector<int>> pi_;  // indexed by node label, empty if not special
  std::vector<RootVec> positive_;
};

struct Letter {
  bool is_pi = false;
  int index = 0;  // node for s-letters, special node j for pi_j
  bool operator==(const Letter& o) const { return is_pi == o.is_pi && index == o.index; }
};

using Word = std::vector<Letter>;

Letter s(int i);
Letter pi(int j);
// [k,l] = s_k s_{k+1} ... s_l, or s_k s_{k-1} ... s_l when k > l.
Word seg(int k, int l);
Word concat(std::initializer_list<Word> parts);
Word power(const Word& w, int e);
// Tokens separated by spaces: "s3", "pi1", "[2,5]".
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);
int s_count(const Word& w);

// x -> A x + b on Q^n in the fundamental-coweight basis (x_j = <alpha_j, x>).
// Every element of the extended affine Weyl group is integral in this basis.
struct AffineMap {
  int n = 0;
  std::vector<int64_t> A;  // row-major n x n
  std::vector<int64_t> b;

  static AffineMap identity(int n);
  static AffineMap translation(const std::vector<int64_t>& v);
  AffineMap operator*(const AffineMap& o) const;  // composition, o applied first
  AffineMap inverse() const;
  std::vector<int64_t> apply(const std::vector<int64_t>& x) const;
  bool is_translation() const;
  bool operator==(const AffineMap& o) const { return A == o.A && b == o.b; }
  bool operator<(const AffineMap& o) const { return A < o.A || (A == o.A && b < o.b); }
  std::size_t hash() const;
};

AffineMap letter_map(const RootDatum& R, const Letter& l);
AffineMap affine_action(const RootDatum& R, const Word& w);
// Action on affine roots induced by an affine map (roots as affine functions).
RootVec map_on_root(const RootDatum& R, const AffineMap& g, const RootVec& r);

RootVec act_letter(const RootDatum& R, const Letter& l, const RootVec& r);
// Rightmost letter acts first.
RootVec act_on_root(const RootDatum& R, const Word& w, const RootVec& r);
bool is_positive(const RootVec& r);
std::string root_to_string(const RootVec& r);

int length(const RootDatum& R, const Word& w);
bool is_reduced(const RootDatum& R, const Word& w);
// Independent length count: affine hyperplanes separating the fundamental
// alcove from its image.
int alcove_length(const RootDatum& R, const AffineMap& g);
// Sum over positive roots of the coefficient of alpha_i.
int coefficient_sum(const RootDatum& R, int i);

// Longest element of the parabolic subgroup generated by the given finite nodes.
Word longest_element(const RootDatum& R, const std::vector<int>& nodes);

Word fundamental_weight_word(const RootDatum& R, int i);
// omega_i with its trailing s_i removed.
Word omega_prime_word(const RootDatum& R, int i);
Word zeta_word(const RootDatum& R, int i);
Word tau_word(int k, int l);
// Closed-form length of omega_i: i(n-i+1) in type A, i(2n-i-1) or n(n-1)/2 in type D, i(2n-i) in B, i(n+1) or n(n+1)/2 in C.
int stated_length(const RootDatum& R, int i);

struct CaseResult {
  std::string label;
  bool pass = false;
  std::string detail;
  RootVec got, expected;
};

std::vector<CaseResult> verify_orbit_lemmas(const RootDatum& R);

struct WeightWordCase {
  Family family;
  int n = 0, i = 0;
  std::string word;
  int letters = 0;
  int length = 0;
  int stated = 0;
  bool reduced = false;
  bool translation = false;
  std::vector<int64_t> translation_vector;
  bool pass() const { return reduced && translation && length == stated; }
};

WeightWordCase verify_weight_word(const RootDatum& R, int i);

}  // namespace iqg::weyl
