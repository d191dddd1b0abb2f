#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "hg/words.hpp"

namespace hg {

using Rat = mpq_class;

// Exact-coefficient group ring element over free words (Z[F], Q[F], Z[pi], ...).
class GR {
 public:
  GR() = default;
  explicit GR(const Rat& c) { add_term(Word(), c); }
  explicit GR(long c) { add_term(Word(), Rat(c)); }
  static GR of(const Word& w, const Rat& c = Rat(1)) {
    GR u;
    u.add_term(w, c);
    return u;
  }

  const std::map<Word, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Word& w, const Rat& c);
  Rat coeff(const Word& w) const;

  GR operator+(const GR& o) const;
  GR operator-(const GR& o) const;
  GR operator-() const;
  GR operator*(const GR& o) const;
  GR operator*(const Rat& c) const;
  bool operator==(const GR& o) const { return t_ == o.t_; }

  Rat augmentation() const;
  GR antipode() const;  // bar: w -> w^{-1}, linear
  bool is_integral() const;

  // Apply a word map termwise (e.g. varpi, an endo, a substitution).
  template <typename Fn>
  GR map_words(Fn&& fn) const {
    GR out;
    for (const auto& [w, c] : t_) out.add_term(fn(w), c);
    return out;
  }

  std::string str() const;
  static GR parse(const std::string& text);

 private:
  std::map<Word, Rat> t_;
};

GR varpi(const GR& u);

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), e_(rows * cols) {}
  static Mat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  GR& at(int i, int j) { return e_[i * c_ + j]; }
  const GR& at(int i, int j) const { return e_[i * c_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat dagger() const;  // conjugate transpose via antipode
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }

  template <typename Fn>
  Mat map_entries(Fn&& fn) const {
    Mat m(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(i, j) = fn(at(i, j));
    return m;
  }

  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<GR> e_;
};

}  // namespace hg
