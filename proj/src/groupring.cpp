#include "hg/groupring.hpp"

#include <sstream>

namespace hg {

void GR::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Rat GR::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Rat(0) : it->second;
}

GR GR::operator+(const GR& o) const {
  GR out = *this;
  for (const auto& [w, c] : o.t_) out.add_term(w, c);
  return out;
}

GR GR::operator-(const GR& o) const {
  GR out = *this;
  for (const auto& [w, c] : o.t_) out.add_term(w, -c);
  return out;
}

GR GR::operator-() const {
  GR out;
  for (const auto& [w, c] : t_) out.add_term(w, -c);
  return out;
}

GR GR::operator*(const GR& o) const {
  GR out;
  for (const auto& [w1, c1] : t_)
    for (const auto& [w2, c2] : o.t_) out.add_term(w1 * w2, c1 * c2);
  return out;
}

GR GR::operator*(const Rat& c) const {
  GR out;
  for (const auto& [w, k] : t_) out.add_term(w, k * c);
  return out;
}

Rat GR::augmentation() const {
  Rat s(0);
  for (const auto& [w, c] : t_) s += c;
  return s;
}

GR GR::antipode() const {
  GR out;
  for (const auto& [w, c] : t_) out.add_term(w.inverse(), c);
  return out;
}

bool GR::is_integral() const {
  for (const auto& [w, c] : t_)
    if (c.get_den() != 1) return false;
  return true;
}

std::string GR::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "- ";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (w.is_identity()) {
      os << a.get_str();
    } else {
      os << a.get_str() << '*' << w.str();
    }
  }
  return os.str();
}

GR GR::parse(const std::string& text) {
  GR out;
  std::istringstream is(text);
  std::string tok;
  int sign = 1;
  bool have_term = false;
  Rat coeff(1);
  std::string word_text;
  auto flush = [&]() {
    if (!have_term) return;
    out.add_term(Word::parse(word_text), Rat(sign) * coeff);
    have_term = false;
    coeff = 1;
    word_text.clear();
  };
  auto is_number = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
    return true;
  };
  while (is >> tok) {
    if (tok == "+") {
      flush();
      sign = 1;
      continue;
    }
    if (tok == "-") {
      flush();
      sign = -1;
      continue;
    }
    auto star = tok.find('*');
    if (star != std::string::npos) {
      flush();
      coeff = Rat(tok.substr(0, star));
      coeff.canonicalize();
      word_text = tok.substr(star + 1);
      have_term = true;
      continue;
    }
    if (is_number(tok)) {
      flush();
      coeff = Rat(tok);
      coeff.canonicalize();
      word_text.clear();
      have_term = true;
      continue;
    }
    // bare word token: starts a term (implicit coefficient 1) or extends one
    if (!have_term) {
      have_term = true;
      coeff = 1;
      word_text = tok;
    } else {
      word_text += ' ';
      word_text += tok;
    }
  }
  flush();
  if (out.is_zero() && text.find('0') == std::string::npos && text.find_first_not_of(" \t\n") != std::string::npos) {
    // e.g. "x1 - x1" is legitimately zero; nothing to do
  }
  return out;
}

GR varpi(const GR& u) {
  return u.map_words([](const Word& w) { return varpi(w); });
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GR(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw WordError("matrix dimension mismatch");
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < o.c_; ++j) {
      GR s;
      for (int k = 0; k < c_; ++k) s = s + at(i, k) * o.at(k, j);
      m.at(i, j) = s;
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw WordError("matrix dimension mismatch");
  Mat m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j) + o.at(i, j);
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw WordError("matrix dimension mismatch");
  Mat m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j) - o.at(i, j);
  return m;
}

Mat Mat::dagger() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j).antipode();
  return m;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < r_; ++i) {
    os << '[';
    for (int j = 0; j < c_; ++j) {
      os << at(i, j).str();
      if (j + 1 < c_) os << " ; ";
    }
    os << ']';
    if (i + 1 < r_) os << ' ';
  }
  os << ']';
  return os.str();
}

}  // namespace hg
