#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hg/groupring.hpp"
#include "hg/words.hpp"

namespace hg {

// Error carrying a stable machine-readable code (surfaced by the CLI).
class CodedError : public std::runtime_error {
 public:
  CodedError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Basis letter ^f a_i of the module on a_1..a_g, f a word in the x's.
struct Letter {
  Word f;
  int idx = 1;
  bool operator==(const Letter&) const = default;
  // index-major, then length-lex on the F-part
  bool operator<(const Letter& o) const {
    if (idx != o.idx) return idx < o.idx;
    return f < o.f;
  }
};

using TWord = std::vector<Letter>;

// Degree-major, then letterwise; total order on tensor monomials.
struct TWordLess {
  bool operator()(const TWord& a, const TWord& b) const;
};

using TMap = std::map<TWord, Rat, TWordLess>;

bool is_lyndon(const TWord& w);
// Position of the standard factorization w = u v, v the lex-least proper suffix.
std::size_t lyndon_split(const TWord& w);
// Tensor expansion of the standard (right) bracketing of a Lyndon word.
TMap lyndon_tensor(const TWord& w);

// Free Lie element in Lyndon normal form; each key carries its standard bracketing.
class LieElt {
 public:
  LieElt() = default;
  static LieElt letter(const Word& f, int idx);
  static LieElt gen(int idx) { return letter(Word(), idx); }

  const TMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const TWord& w, const Rat& c);
  Rat coeff(const TWord& w) const;
  int min_degree() const;  // 0 when zero
  int max_degree() const;
  LieElt component(int deg) const;
  LieElt truncated(int N) const;
  bool is_integral() const;

  LieElt operator+(const LieElt& o) const;
  LieElt operator-(const LieElt& o) const;
  LieElt operator-() const;
  LieElt operator*(const Rat& c) const;
  bool operator==(const LieElt& o) const { return t_ == o.t_; }

  std::string str() const;
  static LieElt parse(const std::string& text);

 private:
  TMap t_;
};

LieElt lie_bracket(const LieElt& u, const LieElt& v);
// Diagonal action of F: f . (^h a_i) = ^{fh} a_i, extended as a Lie automorphism.
LieElt act_F(const Word& f, const LieElt& u);

// Tensor form (sum of the standard bracketings of the keys).
TMap tensor_of(const LieElt& u);
// Inverse: throws WordError when the input is not in the Lie subalgebra.
LieElt lie_from_tensor(const TMap& t);

// [zeta] = sum_i (1 - x_i^{-1}) a_i
LieElt zeta_class(int genus);

// Class of w in the m-th lower-central-series quotient of A; throws
// CodedError("W_NOT_IN_GAMMA_M") when w has a nonzero part in degree < m.
// Implemented via the standard expansion (see envelope).
LieElt class_of(const Word& w, int genus, int m, int N = 0);

// Exact decomposition over the augmentation ideal: u = sum (f - 1) . w with
// each w in the Lie algebra, computed through the tensor-monomial section
// (monomials with trivial first bead are a module basis of the tensor algebra)
// and the Dynkin map. Throws CodedError(code) when the coinvariant class of u
// is nonzero.
std::vector<std::pair<Word, LieElt>> coinvariant_decompose(const LieElt& u,
                                                           const std::string& code);

struct CoinvResult {
  LieElt representative;
  std::vector<std::pair<Word, LieElt>> parts;  // u = rep + sum (f - 1).w
};
CoinvResult coinvariant_reduce(const LieElt& u);

// Orbit-representative Lyndon basis in degree m, letters with F-part in support.
std::vector<LieElt> module_basis(int genus, int m, const std::vector<Word>& support);

// Write a homogeneous element of degree >= 2 as sum [s, t] with s a letter
// (right-normed Dynkin decomposition, exact over Q).
std::vector<std::pair<Letter, LieElt>> letter_bracket_decompose(const LieElt& u);

std::string letter_str(const Letter& l);

}  // namespace hg
