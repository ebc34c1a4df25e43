#include "wkl/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace wkl {

namespace {

int model_rank(const SystemDescriptor& d) {
  switch (d.kind) {
    case ModelKind::TypeA:
    case ModelKind::TypeB:
    case ModelKind::TypeD:
      return d.param;
    case ModelKind::Dihedral:
      return 2;
    case ModelKind::Product: {
      int r = 0;
      for (const auto& f : d.factors) r += model_rank(f);
      return r;
    }
  }
  return 0;
}

int model_data_size(const SystemDescriptor& d) {
  switch (d.kind) {
    case ModelKind::TypeA:
      return d.param + 1;
    case ModelKind::TypeB:
    case ModelKind::TypeD:
      return d.param;
    case ModelKind::Dihedral:
      return 2;
    case ModelKind::Product: {
      int n = 0;
      for (const auto& f : d.factors) n += model_data_size(f);
      return n;
    }
  }
  return 0;
}

void check_supported(const SystemDescriptor& d) {
  switch (d.kind) {
    case ModelKind::TypeA:
      if (d.param < 1 || d.param > 6)
        fail(Errc::UnsupportedModel, "type A supports rank 1..6");
      break;
    case ModelKind::TypeB:
      if (d.param < 2 || d.param > 4)
        fail(Errc::UnsupportedModel, "type B supports rank 2..4");
      break;
    case ModelKind::TypeD:
      if (d.param != 4) fail(Errc::UnsupportedModel, "type D supports rank 4 only");
      break;
    case ModelKind::Dihedral:
      if (d.param < 2 || d.param > 12)
        fail(Errc::UnsupportedModel, "dihedral bond order must be in 2..12");
      break;
    case ModelKind::Product:
      if (d.factors.empty())
        fail(Errc::UnsupportedModel, "empty product");
      for (const auto& f : d.factors) {
        if (f.kind == ModelKind::Product)
          fail(Errc::UnsupportedModel, "nested products are not supported");
        check_supported(f);
      }
      break;
  }
}

using Data = std::vector<std::int8_t>;

void identity_into(ModelKind kind, int param, std::int8_t* d) {
  switch (kind) {
    case ModelKind::TypeA:
      for (int i = 0; i <= param; ++i) d[i] = static_cast<std::int8_t>(i + 1);
      break;
    case ModelKind::TypeB:
    case ModelKind::TypeD:
      for (int i = 0; i < param; ++i) d[i] = static_cast<std::int8_t>(i + 1);
      break;
    case ModelKind::Dihedral:
      d[0] = 0;
      d[1] = 0;
      break;
    case ModelKind::Product:
      break;
  }
}

int inversions(const std::int8_t* d, int n) {
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d[i] > d[j]) ++inv;
  return inv;
}

int block_length(ModelKind kind, int param, const std::int8_t* d) {
  switch (kind) {
    case ModelKind::TypeA:
      return inversions(d, param + 1);
    case ModelKind::TypeB: {
      int n = param;
      int len = inversions(d, n);
      for (int i = 0; i < n; ++i)
        if (d[i] < 0) ++len;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (d[i] + d[j] < 0) ++len;
      return len;
    }
    case ModelKind::TypeD: {
      int n = param;
      int len = inversions(d, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (d[i] + d[j] < 0) ++len;
      return len;
    }
    case ModelKind::Dihedral: {
      int m = param;
      int k = d[0];
      if (d[1] == 0) return 2 * std::min(k, m - k);
      return std::min(2 * k + 1, 2 * (m - k) - 1);
    }
    case ModelKind::Product:
      return 0;
  }
  return 0;
}

// In-place right multiplication by the block-local generator s.
void right_mul(ModelKind kind, int param, std::int8_t* d, int s) {
  switch (kind) {
    case ModelKind::TypeA:
      std::swap(d[s], d[s + 1]);
      break;
    case ModelKind::TypeB:
      if (s == 0)
        d[0] = static_cast<std::int8_t>(-d[0]);
      else
        std::swap(d[s - 1], d[s]);
      break;
    case ModelKind::TypeD:
      if (s == 0) {
        std::int8_t a = d[0], b = d[1];
        d[0] = static_cast<std::int8_t>(-b);
        d[1] = static_cast<std::int8_t>(-a);
      } else {
        std::swap(d[s - 1], d[s]);
      }
      break;
    case ModelKind::Dihedral: {
      int m = param;
      if (s == 0) {
        d[1] ^= 1;
      } else {
        int delta = d[1] ? 1 : -1;  // (a,e)(m-1,1) = (a - (-1)^e, e^1)
        d[0] = static_cast<std::int8_t>(((d[0] + delta) % m + m) % m);
        d[1] ^= 1;
      }
      break;
    }
    case ModelKind::Product:
      break;
  }
}

// In-place left multiplication by the block-local generator s.
void left_mul(ModelKind kind, int param, std::int8_t* d, int s) {
  switch (kind) {
    case ModelKind::TypeA: {
      // swap values s+1 and s+2
      for (int i = 0; i <= param; ++i) {
        if (d[i] == s + 1)
          d[i] = static_cast<std::int8_t>(s + 2);
        else if (d[i] == s + 2)
          d[i] = static_cast<std::int8_t>(s + 1);
      }
      break;
    }
    case ModelKind::TypeB: {
      for (int i = 0; i < param; ++i) {
        int v = d[i], a = std::abs(v);
        if (s == 0) {
          if (a == 1) d[i] = static_cast<std::int8_t>(-v);
        } else {
          if (a == s)
            d[i] = static_cast<std::int8_t>(v > 0 ? s + 1 : -(s + 1));
          else if (a == s + 1)
            d[i] = static_cast<std::int8_t>(v > 0 ? s : -s);
        }
      }
      break;
    }
    case ModelKind::TypeD: {
      for (int i = 0; i < param; ++i) {
        int v = d[i], a = std::abs(v);
        if (s == 0) {
          // values 1 <-> -2
          if (a == 1)
            d[i] = static_cast<std::int8_t>(v > 0 ? -2 : 2);
          else if (a == 2)
            d[i] = static_cast<std::int8_t>(v > 0 ? -1 : 1);
        } else {
          if (a == s)
            d[i] = static_cast<std::int8_t>(v > 0 ? s + 1 : -(s + 1));
          else if (a == s + 1)
            d[i] = static_cast<std::int8_t>(v > 0 ? s : -s);
        }
      }
      break;
    }
    case ModelKind::Dihedral: {
      int m = param;
      if (s == 0) {
        d[0] = static_cast<std::int8_t>(((-d[0]) % m + m) % m);
      } else {
        d[0] = static_cast<std::int8_t>(((m - 1 - d[0]) % m + m) % m);
      }
      d[1] ^= 1;
      break;
    }
    case ModelKind::Product:
      break;
  }
}

// out = a o b (composition of maps, permutation-style models).
void compose(ModelKind kind, int param, const std::int8_t* a, const std::int8_t* b,
             std::int8_t* out) {
  switch (kind) {
    case ModelKind::TypeA:
      for (int i = 0; i <= param; ++i) out[i] = a[b[i] - 1];
      break;
    case ModelKind::TypeB:
    case ModelKind::TypeD:
      for (int i = 0; i < param; ++i) {
        int v = b[i];
        out[i] = static_cast<std::int8_t>(v > 0 ? a[v - 1] : -a[-v - 1]);
      }
      break;
    case ModelKind::Dihedral: {
      int m = param;
      int k = a[0] + (a[1] ? -b[0] : b[0]);
      out[0] = static_cast<std::int8_t>((k % m + m) % m);
      out[1] = a[1] ^ b[1];
      break;
    }
    case ModelKind::Product:
      break;
  }
}

void invert(ModelKind kind, int param, const std::int8_t* a, std::int8_t* out) {
  switch (kind) {
    case ModelKind::TypeA:
      for (int i = 0; i <= param; ++i) out[a[i] - 1] = static_cast<std::int8_t>(i + 1);
      break;
    case ModelKind::TypeB:
    case ModelKind::TypeD:
      for (int i = 0; i < param; ++i) {
        int v = a[i];
        if (v > 0)
          out[v - 1] = static_cast<std::int8_t>(i + 1);
        else
          out[-v - 1] = static_cast<std::int8_t>(-(i + 1));
      }
      break;
    case ModelKind::Dihedral: {
      int m = param;
      if (a[1] == 0) {
        out[0] = static_cast<std::int8_t>((m - a[0]) % m);
        out[1] = 0;
      } else {
        out[0] = a[0];
        out[1] = 1;
      }
      break;
    }
    case ModelKind::Product:
      break;
  }
}

}  // namespace

int SystemDescriptor::rank() const { return model_rank(*this); }

std::string SystemDescriptor::str() const {
  switch (kind) {
    case ModelKind::TypeA: return "A" + std::to_string(param);
    case ModelKind::TypeB: return "B" + std::to_string(param);
    case ModelKind::TypeD: return "D" + std::to_string(param);
    case ModelKind::Dihedral: return "I2(" + std::to_string(param) + ")";
    case ModelKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        out += factors[i].str();
      }
      return out;
    }
  }
  return "?";
}

SystemDescriptor SystemDescriptor::parse(std::string_view text) {
  auto parse_single = [](std::string_view t) -> SystemDescriptor {
    SystemDescriptor d;
    if (t.size() >= 2 && (t[0] == 'A' || t[0] == 'B' || t[0] == 'D') &&
        std::isdigit(static_cast<unsigned char>(t[1]))) {
      d.kind = t[0] == 'A' ? ModelKind::TypeA
                           : (t[0] == 'B' ? ModelKind::TypeB : ModelKind::TypeD);
      int n = 0;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
          fail(Errc::Parse, "bad model '" + std::string(t) + "'");
        n = n * 10 + (t[i] - '0');
      }
      d.param = n;
      return d;
    }
    if (t.size() >= 5 && t.substr(0, 3) == "I2(" && t.back() == ')') {
      int m = 0;
      for (std::size_t i = 3; i + 1 < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
          fail(Errc::Parse, "bad model '" + std::string(t) + "'");
        m = m * 10 + (t[i] - '0');
      }
      d.kind = ModelKind::Dihedral;
      d.param = m;
      return d;
    }
    fail(Errc::Parse, "unrecognized model '" + std::string(t) + "'");
  };

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == 'x' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  if (parts.size() == 1) return parse_single(parts[0]);
  SystemDescriptor d;
  d.kind = ModelKind::Product;
  for (auto p : parts) d.factors.push_back(parse_single(p));
  return d;
}

std::vector<int> genset_to_vector(GenSet J) {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s)
    if (J & (1u << s)) out.push_back(s);
  return out;
}

GenSet genset_from_vector(const std::vector<int>& gens) {
  GenSet J = 0;
  for (int s : gens) J |= (1u << s);
  return J;
}

CoxeterSystem::CoxeterSystem(SystemDescriptor desc, std::vector<int> weights)
    : desc_(std::move(desc)), weights_(std::move(weights)) {
  check_supported(desc_);
  std::vector<SystemDescriptor> singles;
  if (desc_.kind == ModelKind::Product)
    singles = desc_.factors;
  else
    singles = {desc_};

  int gen_off = 0, data_off = 0;
  for (const auto& f : singles) {
    Block b{f.kind, f.param, gen_off, model_rank(f), data_off, model_data_size(f)};
    blocks_.push_back(b);
    gen_off += b.gen_count;
    data_off += b.data_size;
  }
  rank_ = gen_off;
  data_size_ = data_off;

  if (static_cast<int>(weights_.size()) != rank_)
    fail(Errc::Parse, "expected " + std::to_string(rank_) + " weights, got " +
                          std::to_string(weights_.size()));
  for (int w : weights_)
    if (w < 0) fail(Errc::NegativeWeight, "generator weights must be non-negative");

  matrix_.assign(rank_, std::vector<int>(rank_, 2));
  for (int s = 0; s < rank_; ++s) matrix_[s][s] = 1;
  for (const auto& b : blocks_) {
    auto bond = [&](int i, int j, int m) {
      matrix_[b.gen_offset + i][b.gen_offset + j] = m;
      matrix_[b.gen_offset + j][b.gen_offset + i] = m;
    };
    switch (b.kind) {
      case ModelKind::TypeA:
        for (int i = 0; i + 1 < b.gen_count; ++i) bond(i, i + 1, 3);
        break;
      case ModelKind::TypeB:
        bond(0, 1, 4);
        for (int i = 1; i + 1 < b.gen_count; ++i) bond(i, i + 1, 3);
        break;
      case ModelKind::TypeD:
        bond(0, 2, 3);
        bond(1, 2, 3);
        bond(2, 3, 3);
        break;
      case ModelKind::Dihedral:
        bond(0, 1, b.param);
        break;
      case ModelKind::Product:
        break;
    }
  }

  for (int s = 0; s < rank_; ++s)
    for (int t = s + 1; t < rank_; ++t)
      if (matrix_[s][t] % 2 == 1 && weights_[s] != weights_[t])
        fail(Errc::WeightInconsistent,
             "odd bond m(s" + std::to_string(s + 1) + ",s" + std::to_string(t + 1) +
                 ")=" + std::to_string(matrix_[s][t]) +
                 " forces equal weights");
}

int CoxeterSystem::weight_gcd() const {
  int g = 0;
  for (int w : weights_) g = std::gcd(g, w);
  return g == 0 ? 1 : g;
}

unsigned long long CoxeterSystem::order() const {
  unsigned long long n = 1;
  for (const auto& b : blocks_) {
    unsigned long long f = 1;
    switch (b.kind) {
      case ModelKind::TypeA:
        for (int i = 2; i <= b.param + 1; ++i) f *= i;
        break;
      case ModelKind::TypeB:
        for (int i = 2; i <= b.param; ++i) f *= i;
        f <<= b.param;
        break;
      case ModelKind::TypeD:
        for (int i = 2; i <= b.param; ++i) f *= i;
        f <<= (b.param - 1);
        break;
      case ModelKind::Dihedral:
        f = 2ull * b.param;
        break;
      case ModelKind::Product:
        break;
    }
    n *= f;
  }
  return n;
}

int CoxeterSystem::block_of_gen(int s) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (s >= blocks_[i].gen_offset && s < blocks_[i].gen_offset + blocks_[i].gen_count)
      return static_cast<int>(i);
  fail(Errc::Parse, "generator index out of range");
}

int CoxeterSystem::recompute_length(const Data& data) const {
  int len = 0;
  for (const auto& b : blocks_) len += block_length(b.kind, b.param, data.data() + b.data_offset);
  return len;
}

Element CoxeterSystem::identity() const {
  Data d(data_size_);
  for (const auto& b : blocks_) identity_into(b.kind, b.param, d.data() + b.data_offset);
  return Element(std::move(d), 0);
}

Element CoxeterSystem::generator(int s) const {
  return apply_gen(identity(), s, Side::Right);
}

Element CoxeterSystem::apply_gen(const Element& w, int s, Side side) const {
  const Block& b = blocks_[block_of_gen(s)];
  Data d = w.data();
  int local = s - b.gen_offset;
  if (side == Side::Right)
    right_mul(b.kind, b.param, d.data() + b.data_offset, local);
  else
    left_mul(b.kind, b.param, d.data() + b.data_offset, local);
  int len = recompute_length(d);
  return Element(std::move(d), len);
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
  Data d(data_size_);
  for (const auto& blk : blocks_)
    compose(blk.kind, blk.param, a.data().data() + blk.data_offset,
            b.data().data() + blk.data_offset, d.data() + blk.data_offset);
  int len = recompute_length(d);
  return Element(std::move(d), len);
}

Element CoxeterSystem::inverse(const Element& w) const {
  Data d(data_size_);
  for (const auto& blk : blocks_)
    invert(blk.kind, blk.param, w.data().data() + blk.data_offset,
           d.data() + blk.data_offset);
  return Element(std::move(d), w.length());
}

long long CoxeterSystem::weight_of(const Element& w) const {
  long long total = 0;
  for (int s : shortlex_word(w)) total += weights_[s];
  return total;
}

bool CoxeterSystem::has_left_descent(const Element& w, int s) const {
  return apply_gen(w, s, Side::Left).length() < w.length();
}

bool CoxeterSystem::has_right_descent(const Element& w, int s) const {
  return apply_gen(w, s, Side::Right).length() < w.length();
}

GenSet CoxeterSystem::left_descents(const Element& w) const {
  GenSet out = 0;
  for (int s = 0; s < rank_; ++s)
    if (has_left_descent(w, s)) out |= (1u << s);
  return out;
}

GenSet CoxeterSystem::right_descents(const Element& w) const {
  GenSet out = 0;
  for (int s = 0; s < rank_; ++s)
    if (has_right_descent(w, s)) out |= (1u << s);
  return out;
}

bool CoxeterSystem::bruhat_leq(const Element& x, const Element& y) const {
  // Walks down a fixed reduced word of y via the lifting property.
  Element u = x, v = y;
  while (true) {
    if (u.length() > v.length()) return false;
    if (u.length() == 0) return true;
    // v.length() >= u.length() > 0 here, so v has a descent
    int s = -1;
    for (int t = 0; t < rank_; ++t)
      if (has_left_descent(v, t)) {
        s = t;
        break;
      }
    Element su = apply_gen(u, s, Side::Left);
    if (su.length() < u.length()) u = std::move(su);
    v = apply_gen(v, s, Side::Left);
  }
}

bool CoxeterSystem::is_suffix(const Element& x, const Element& y) const {
  Element z = multiply(y, inverse(x));
  return z.length() + x.length() == y.length();
}

bool CoxeterSystem::in_dj(const Element& w, GenSet J) const {
  for (int s = 0; s < rank_; ++s)
    if ((J & (1u << s)) && has_right_descent(w, s)) return false;
  return true;
}

std::vector<Element> CoxeterSystem::min_coset_reps(GenSet J) const {
  // D_J is an ideal in the left weak order, so growing by left letters
  // while staying inside it reaches every representative.
  std::set<Element> seen;
  std::vector<Element> frontier{identity()};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& w : frontier) {
      for (int s = 0; s < rank_; ++s) {
        Element u = apply_gen(w, s, Side::Left);
        if (u.length() != w.length() + 1) continue;
        if (!in_dj(u, J)) continue;
        if (seen.insert(u).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

DescentClass CoxeterSystem::classify(GenSet J, const Element& y, int s) const {
  if (!in_dj(y, J)) fail(Errc::NotInDJ, "element is not a minimum coset representative");
  Element sy = apply_gen(y, s, Side::Left);
  if (sy.length() < y.length()) return DescentClass::SD;
  return in_dj(sy, J) ? DescentClass::SA : DescentClass::WD;
}

std::vector<Element> CoxeterSystem::enumerate() const {
  return min_coset_reps(0);
}

Element CoxeterSystem::longest_element() const {
  Element w = identity();
  while (true) {
    int s = -1;
    for (int t = 0; t < rank_; ++t)
      if (!has_right_descent(w, t)) {
        s = t;
        break;
      }
    if (s < 0) return w;
    w = apply_gen(w, s, Side::Right);
  }
}

unsigned long long CoxeterSystem::parabolic_order(GenSet J) const {
  std::set<Element> seen{identity()};
  std::vector<Element> frontier{identity()};
  auto gens = genset_to_vector(J);
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& w : frontier)
      for (int s : gens) {
        Element u = apply_gen(w, s, Side::Right);
        if (u.length() == w.length() + 1 && seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

std::vector<int> CoxeterSystem::shortlex_word(const Element& w) const {
  std::vector<int> word;
  Element u = w;
  while (u.length() > 0) {
    for (int s = 0; s < rank_; ++s) {
      Element su = apply_gen(u, s, Side::Left);
      if (su.length() < u.length()) {
        word.push_back(s);
        u = std::move(su);
        break;
      }
    }
  }
  return word;
}

std::string CoxeterSystem::format(const Element& w) const {
  auto word = shortlex_word(w);
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << '.';
    out << 's' << (word[i] + 1);
  }
  return out.str();
}

Element CoxeterSystem::parse(std::string_view text) const {
  if (text == "e") return identity();
  if (text.empty()) fail(Errc::Parse, "empty element word (use \"e\" for the identity)");
  std::vector<int> word;
  auto push_token = [&](std::string_view tok) {
    if (tok.empty()) fail(Errc::Parse, "empty generator token");
    std::size_t pos = 0;
    if (tok[0] == 's') pos = 1;
    int k = 0;
    if (pos >= tok.size()) fail(Errc::Parse, "bad generator token '" + std::string(tok) + "'");
    for (std::size_t i = pos; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        fail(Errc::Parse, "bad generator token '" + std::string(tok) + "'");
      k = k * 10 + (tok[i] - '0');
    }
    if (k < 1 || k > rank_)
      fail(Errc::Parse, "generator s" + std::to_string(k) + " out of range");
    word.push_back(k - 1);
  };
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '.') {
        push_token(text.substr(start, i - start));
        start = i + 1;
      }
    }
  } else if (text[0] != 's' &&
             std::all_of(text.begin(), text.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (rank_ > 9) fail(Errc::Parse, "bare digit words need rank <= 9");
    for (char c : text) push_token(std::string_view(&c, 1));
  } else {
    push_token(text);
  }
  Element w = identity();
  for (int s : word) w = apply_gen(w, s, Side::Right);
  return w;
}

}  // namespace wkl
