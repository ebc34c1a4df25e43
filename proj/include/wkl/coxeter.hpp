#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wkl/errors.hpp"

namespace wkl {

enum class ModelKind { TypeA, TypeB, TypeD, Dihedral, Product };

/// Names a concrete finite group model: A(n), B(n), D(4), I2(m), or a
/// direct product of those.
struct SystemDescriptor {
  ModelKind kind = ModelKind::TypeA;
  int param = 1;  // rank for A/B/D, bond order m for Dihedral
  std::vector<SystemDescriptor> factors;  // Product only

  int rank() const;
  std::string str() const;

  /// Accepts "A3", "B2", "D4", "I2(6)" and products like "A1xB2".
  static SystemDescriptor parse(std::string_view text);
};

/// Group element in its canonical concrete datum: a one-line (signed)
/// permutation for types A/B/D, a (rotation, reflected) byte pair for
/// dihedral groups, the concatenation for products.  Ordered by
/// (length, datum lex) so that every container iteration is deterministic.
class Element {
 public:
  Element() = default;
  Element(std::vector<std::int8_t> data, int length)
      : data_(std::move(data)), length_(length) {}

  int length() const { return length_; }
  const std::vector<std::int8_t>& data() const { return data_; }

  bool operator==(const Element& o) const { return data_ == o.data_; }
  std::strong_ordering operator<=>(const Element& o) const {
    if (length_ != o.length_) return length_ <=> o.length_;
    return data_ <=> o.data_;
  }

 private:
  std::vector<std::int8_t> data_;
  std::int32_t length_ = 0;
};

/// Subset of the generators as a bit set (bit i = generator s_{i+1}).
using GenSet = std::uint32_t;

std::vector<int> genset_to_vector(GenSet J);
GenSet genset_from_vector(const std::vector<int>& gens);

enum class Side { Left, Right };

enum class DescentClass { SD, SA, WD, WA };

/// A finite weighted Coxeter system: one of the supported concrete models
/// together with a non-negative integer weight per generator.  Immutable
/// after construction; all member functions are pure.
class CoxeterSystem {
 public:
  CoxeterSystem(SystemDescriptor desc, std::vector<int> weights);

  int rank() const { return rank_; }
  const SystemDescriptor& descriptor() const { return desc_; }
  int coxeter_m(int s, int t) const { return matrix_[s][t]; }
  int weight(int s) const { return weights_[s]; }
  const std::vector<int>& weights() const { return weights_; }
  /// gcd of the generator weights; 1 when all weights vanish.
  int weight_gcd() const;
  unsigned long long order() const;

  Element identity() const;
  Element generator(int s) const;
  Element apply_gen(const Element& w, int s, Side side) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& w) const;

  int length(const Element& w) const { return w.length(); }
  long long weight_of(const Element& w) const;
  int epsilon(const Element& w) const { return w.length() % 2 == 0 ? 1 : -1; }

  bool has_left_descent(const Element& w, int s) const;
  bool has_right_descent(const Element& w, int s) const;
  GenSet left_descents(const Element& w) const;
  GenSet right_descents(const Element& w) const;

  bool bruhat_leq(const Element& x, const Element& y) const;
  /// Whether y = z.x with lengths adding up, i.e. x is below y in the
  /// left weak order.
  bool is_suffix(const Element& x, const Element& y) const;

  bool in_dj(const Element& w, GenSet J) const;
  /// Minimum coset representatives of W_J, sorted by (length, lex);
  /// a suffix-closed set.
  std::vector<Element> min_coset_reps(GenSet J) const;
  DescentClass classify(GenSet J, const Element& y, int s) const;

  std::vector<Element> enumerate() const;
  Element longest_element() const;
  unsigned long long parabolic_order(GenSet J) const;

  /// Lexicographically minimal reduced word, as 0-based generator indices.
  std::vector<int> shortlex_word(const Element& w) const;
  std::string format(const Element& w) const;
  Element parse(std::string_view text) const;

 private:
  struct Block {
    ModelKind kind;
    int param;
    int gen_offset;
    int gen_count;
    int data_offset;
    int data_size;
  };

  int block_of_gen(int s) const;
  int recompute_length(const std::vector<std::int8_t>& data) const;

  SystemDescriptor desc_;
  std::vector<int> weights_;
  std::vector<Block> blocks_;
  std::vector<std::vector<int>> matrix_;
  int rank_ = 0;
  int data_size_ = 0;
};

}  // namespace wkl
