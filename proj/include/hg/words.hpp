#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hg {

// Generator kinds: alpha_i / beta_i live in pi (rank 2g), x_i lives in F (rank g).
enum class GenKind : std::uint8_t { A = 0, B = 1, X = 2 };

struct Syl {
  GenKind kind;
  int idx;   // 1-based
  long exp;  // nonzero
  friend bool operator==(const Syl&, const Syl&) = default;
};

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Freely reduced word, stored as exponent runs.
class Word {
 public:
  Word() = default;
  static Word gen(GenKind k, int idx, long exp = 1);
  static Word from_syllables(const std::vector<Syl>& raw);

  bool is_identity() const { return syl_.empty(); }
  std::size_t length() const;  // sum of |exp|
  const std::vector<Syl>& syllables() const { return syl_; }
  // Expanded single letters, exponent +1 or -1 each.
  std::vector<Syl> letters() const;

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(long n) const;
  Word conj(const Word& x) const;  // ^x w = x w x^{-1}
  static Word commutator(const Word& u, const Word& v);  // u v u^{-1} v^{-1}

  bool operator==(const Word&) const = default;
  // Total order: length, then lexicographic on expanded letters.
  bool operator<(const Word& o) const;

  std::string str() const;
  static Word parse(const std::string& text);

 private:
  std::vector<Syl> syl_;
  void push_reduced(GenKind k, int idx, long exp);
};

// pi -> F: kill alpha, rename beta_j to x_j.
Word varpi(const Word& w);
bool in_A(const Word& w);
// zeta^{-1} = prod_i [beta_i^{-1}, alpha_i]
Word zeta(int genus);

// Endomorphism of pi given on the (alpha, beta) basis.
class Endo {
 public:
  Endo() = default;
  Endo(int genus, std::vector<Word> im_a, std::vector<Word> im_b);

  int genus() const { return g_; }
  const Word& image_a(int i) const { return ima_.at(i - 1); }
  const Word& image_b(int j) const { return imb_.at(j - 1); }
  bool has_inverse() const { return inv_.has_value(); }
  const Endo& inverse_endo() const;
  void set_inverse(Endo inv);

  Word apply(const Word& w) const;
  // (*this) after other: (this o other)(w) = this(other(w)).
  Endo compose(const Endo& other) const;
  bool is_identity_images() const;

  bool operator==(const Endo& o) const {
    return g_ == o.g_ && ima_ == o.ima_ && imb_ == o.imb_;
  }

 private:
  int g_ = 0;
  std::vector<Word> ima_, imb_;
  std::optional<std::vector<Endo>> inv_;  // box of size one
};

enum class PairCheck { OK, NOT_INVERTIBLE, NOT_A_PRESERVING, NOT_ZETA_FIXING };
std::string to_string(PairCheck c);
// Checks in order: invertibility, A-preservation (on the alpha's), zeta fixing.
PairCheck verify_pair_automorphism(const Endo& f);
// Same but skipping the zeta check (G-membership, used for aut_F_lift).
PairCheck verify_G_membership(const Endo& f);

// Catalog of named mapping classes (all with inverses filled in).
Endo identity_endo(int genus);
Endo twist_alpha(int genus, int i);                       // beta_i -> alpha_i beta_i
Endo twist_boundary(int genus);                           // w -> zeta w zeta^{-1}
Endo elem_d(int genus, int i, int eps, const Word& x);    // alpha_i -> x^{-1} alpha_i^eps x
Endo elem_e(int genus, int i, int j, const Word& x);      // alpha_j -> (x^{-1} alpha_i x) alpha_j
Endo phi(int genus, int i, int s, const Word& b);
Endo aut_F_lift(int genus, const std::vector<Word>& x_images,
                const std::vector<Word>& x_inverse_images);

}  // namespace hg
