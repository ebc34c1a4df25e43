#include "wkl/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wkl {

LaurentPoly LaurentPoly::mono(HalfExp v_exp, Int coeff) {
  LaurentPoly f;
  if (coeff != 0) f.terms_.emplace_back(v_exp, std::move(coeff));
  return f;
}

const LaurentPoly& LaurentPoly::zero() {
  static const LaurentPoly z;
  return z;
}

const LaurentPoly& LaurentPoly::one() {
  static const LaurentPoly o = constant(1);
  return o;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

std::optional<HalfExp> LaurentPoly::deg() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first;
}

std::optional<HalfExp> LaurentPoly::low() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

Int LaurentPoly::coeff(HalfExp v_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v_exp,
                             [](const Term& t, HalfExp e) { return t.first < e; });
  if (it != terms_.end() && it->first == v_exp) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly g;
  g.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    g.terms_.emplace_back(-it->first, it->second);
  return g;
}

LaurentPoly LaurentPoly::shifted(HalfExp delta) const {
  LaurentPoly g = *this;
  for (auto& t : g.terms_) t.first += delta;
  return g;
}

LaurentPoly LaurentPoly::trunc_upper(HalfExp zeta) const {
  LaurentPoly g;
  for (const auto& t : terms_)
    if (t.first > zeta) g.terms_.push_back(t);
  return g;
}

LaurentPoly LaurentPoly::trunc_lower(HalfExp zeta) const {
  LaurentPoly g;
  for (const auto& t : terms_)
    if (t.first < zeta) g.terms_.push_back(t);
  return g;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly g = *this;
  for (auto& t : g.terms_) t.second = -t.second;
  return g;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  *this = *this + g;
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  *this = *this - g;
  return *this;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h;
  h.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin(), b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && a->first < b->first)) {
      h.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || b->first < a->first) {
      h.terms_.push_back(*b++);
    } else {
      Int c = a->second + b->second;
      if (c != 0) h.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return h;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
  return f + (-g);
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return LaurentPoly();
  std::map<HalfExp, Int> acc;
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) acc[a.first + b.first] += a.second * b.second;
  LaurentPoly h;
  h.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) h.terms_.emplace_back(e, std::move(c));
  return h;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    std::string power;
    if (e == 0) {
      power = "";
    } else if (e % 2 == 0) {
      int k = e / 2;
      power = (k == 1) ? "q" : "q^" + std::to_string(k);
    } else {
      power = "q^(" + std::to_string(e) + "/2)";
    }
    std::string core;
    if (power.empty())
      core = mag.str();
    else if (mag == 1)
      core = power;
    else
      core = mag.str() + "*" + power;
    if (first) {
      out << (neg ? "-" : "") << core;
      first = false;
    } else {
      out << (neg ? " - " : " + ") << core;
    }
  }
  return out.str();
}

}  // namespace wkl
