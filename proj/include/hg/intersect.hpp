#pragma once

#include <map>
#include <string>
#include <utility>

#include "hg/foxcalc.hpp"
#include "hg/liefree.hpp"

namespace hg {

// finite sum in Z[F] (x) Z[F]
class TensorPair {
 public:
  const std::map<std::pair<Word, Word>, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Word& l, const Word& r, const Rat& c);
  TensorPair operator+(const TensorPair& o) const;
  TensorPair operator-(const TensorPair& o) const;
  TensorPair operator-() const;
  TensorPair operator*(const Rat& c) const;
  bool operator==(const TensorPair& o) const { return t_ == o.t_; }
  std::string str() const;

 private:
  std::map<std::pair<Word, Word>, Rat> t_;
};

// finite sum in Z[F] (x) A_ab
class TensorA {
 public:
  const std::map<std::pair<Word, Letter>, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Word& f, const Letter& l, const Rat& c);
  TensorA operator+(const TensorA& o) const;
  TensorA operator-(const TensorA& o) const;
  TensorA operator-() const;
  TensorA operator*(const Rat& c) const;
  bool operator==(const TensorA& o) const { return t_ == o.t_; }
  std::string str() const;

 private:
  std::map<std::pair<Word, Letter>, Rat> t_;
};

// matrix of the homotopy intersection form in the (alpha, beta) basis
Mat e_matrix(int genus);

// homotopy intersection Fox pairing on Z[pi]
GR eta(const GR& x, const GR& y);
GR eta(const Word& x, const Word& y);

// <-,->: Z[F] x A_ab -> Z[F]; computed from the Fox-derivative expansion and
// cross-checked against the lift-and-project route (internal assertion)
GR pairing(const GR& x, const LieElt& a);

// Theta: Z[F] (x) A_ab -> Z[F] (x) Z[F], equivalent form of the pairing
TensorPair theta_pair(const GR& x, const LieElt& a);

// Psi: A_ab x A_ab -> Z[F] (x) A_ab by peeling conjugators
TensorA psi(const LieElt& a, const LieElt& b);
// same, peeling the second argument first (confluence witness)
TensorA psi_alt(const LieElt& a, const LieElt& b);

// route through eta and the J/J^2 decomposition; inputs are words in A
TensorA psi_oracle(const Word& a, const Word& b);

}  // namespace hg
