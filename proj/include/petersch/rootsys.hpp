#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace petersch {

enum class Family { A, B, C, D, E, F, G };

/// A finite crystallographic type such as A3, B2 or E8.
class LieType {
 public:
  /// Throws PreconditionError if the rank is not admissible for the family.
  LieType(Family family, int rank);

  /// Parses labels of the form "E8", "b3" or "A12".
  static LieType parse(std::string_view label);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string str() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int rank_;
};

// Simple subsets are stored as bitmasks, which caps the rank.
inline constexpr int kMaxRank = 64;

/// Integer coordinates in the simple-root basis alpha_1..alpha_n.
struct Root {
  std::vector<int> coeffs;

  static Root simple(int rank, int i);  // i is 1-based

  std::size_t rank() const { return coeffs.size(); }
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;

  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;
};

std::string to_string(const Root& root);

/// Sum of coefficients of a positive root.
int height(const Root& root);

/// cartan(i, j) = <alpha_j, alpha_i^vee>, both indices 1-based, so that
/// s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
class CartanMatrix {
 public:
  explicit CartanMatrix(const LieType& type);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[(i - 1) * rank_ + (j - 1)]; }

 private:
  void link(int i, int j, int a_ij, int a_ji);

  int rank_;
  std::vector<int> entries_;
};

/// Immutable once built; safe to share between threads for reading.
class RootSystem {
 public:
  explicit RootSystem(const LieType& type);

  const LieType& type() const { return type_; }
  int rank() const { return cartan_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }

  /// Sorted by (height, coefficients).
  const std::vector<Root>& positives() const { return positives_; }

  /// Index into positives(), or -1 if the vector is not a positive root.
  int index_of(const Root& root) const;
  bool is_root(const Root& root) const;

  /// s_i(root). Throws PreconditionError when i is outside 1..rank.
  Root reflect(int i, const Root& root) const;

  void check_generator(int i) const;

 private:
  LieType type_;
  CartanMatrix cartan_;
  std::vector<Root> positives_;
  std::map<Root, int> index_;
};

RootSystem build_root_system(const LieType& type);

/// Checked height: rejects roots that are not positive.
int height(const RootSystem& rs, const Root& root);

/// Pairs (lower, upper) of positive roots with upper - lower simple,
/// ordered as positives() orders the lower and then the upper root.
std::vector<std::pair<Root, Root>> root_poset_covers(const RootSystem& rs);

/// Rank of each positive root in the cover graph: the length of the longest
/// cover chain starting at a simple root. Indexed like positives().
std::vector<int> poset_ranks(const RootSystem& rs);

Root highest_root(const RootSystem& rs);

/// Classical |Phi+| for the type, from closed-form formulas.
std::size_t expected_positive_count(const LieType& type);

}  // namespace petersch
