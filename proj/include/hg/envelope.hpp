#pragma once

#include <map>
#include <string>
#include <vector>

#include "hg/liefree.hpp"

namespace hg {

// Key of the twisted tensor envelope: tensor monomial over letters, times an F-word.
struct EnvKey {
  TWord v;
  Word f;
  bool operator==(const EnvKey&) const = default;
  bool operator<(const EnvKey& o) const {
    TWordLess less;
    if (less(v, o.v)) return true;
    if (less(o.v, v)) return false;
    return f < o.f;
  }
};

// Degree-truncated element of T(A^Q) (x) Q[F] with the twisted product
// (v (x) y)(v' (x) y') = v . (y . v') (x) y y'.
class EnvElt {
 public:
  explicit EnvElt(int N) : N_(N) {}
  static EnvElt one(int N) { return unit(Rat(1), N); }
  static EnvElt unit(const Rat& c, int N);
  static EnvElt group(const Word& f, int N);        // 1 (x) f
  static EnvElt from_lie(const LieElt& u, int N);   // tensor form, F-part trivial

  int truncation() const { return N_; }
  const std::map<EnvKey, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const TWord& v, const Word& f, const Rat& c);
  Rat coeff(const TWord& v, const Word& f) const;
  Rat constant() const { return coeff({}, Word()); }
  bool f_trivial() const;

  EnvElt operator+(const EnvElt& o) const;
  EnvElt operator-(const EnvElt& o) const;
  EnvElt operator-() const;
  EnvElt operator*(const Rat& c) const;
  EnvElt operator*(const EnvElt& o) const;
  bool operator==(const EnvElt& o) const { return N_ == o.N_ && t_ == o.t_; }

  std::string str() const;

 private:
  int N_;
  std::map<EnvKey, Rat> t_;
};

EnvElt env_mul(const EnvElt& u, const EnvElt& v);
EnvElt env_exp(const LieElt& u, int N);
// log of 1 + (higher); requires trivial F-part; validates the result is primitive.
LieElt env_log(const EnvElt& v);
// inverse of (unit-constant tensor) (x) f, a single shared F-word f
EnvElt env_inv(const EnvElt& v);

// Expansion of the free pair: alpha_i -> exp(ell_alpha[i]) (x) 1,
// beta_j -> exp(m_beta[j]) (x) x_j.
struct Expansion {
  int genus = 0;
  int N = 4;
  std::vector<LieElt> ell_alpha;
  std::vector<LieElt> m_beta;

  std::string str() const;
  static Expansion parse(const std::string& text);
};

Expansion theta_standard(int genus, int N);
EnvElt theta_eval(const Expansion& th, const Word& w);
LieElt ell(const Expansion& th, const Word& w);  // requires in_A(w)
bool validate_expansion(const Expansion& th);
bool is_special(const Expansion& th);
// conjugators, when requested, receives the 2g primitives v_k (in the letters
// d_1..d_2g of the free group on the unknotted loops) used by the construction
Expansion special_construct(int genus, int N, std::vector<LieElt>* conjugators = nullptr);

}  // namespace hg
