#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "petersch/rootsys.hpp"

namespace petersch {

/// A word in the simple reflections, letters 1-based.
struct Word {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int operator[](std::size_t pos) const { return letters[pos]; }

  Word reversed() const;
  friend Word operator+(const Word& lhs, const Word& rhs);

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Accepts "1,2,1", "1 2 1" or "" for the empty word.
Word parse_word(std::string_view text);
std::string to_string(const Word& word);

/// A subset K of the simple generators {1..rank}.
class SimpleSubset {
 public:
  SimpleSubset() = default;
  SimpleSubset(std::initializer_list<int> indices);
  explicit SimpleSubset(const std::vector<int>& indices);

  static SimpleSubset from_mask(std::uint64_t mask) {
    SimpleSubset s;
    s.mask_ = mask;
    return s;
  }
  static SimpleSubset full(int rank);
  /// "1,2,5"; empty text gives the empty set.
  static SimpleSubset parse(std::string_view text);

  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 1 && i <= kMaxRank && ((mask_ >> (i - 1)) & 1U); }
  bool empty() const { return mask_ == 0; }
  int size() const;
  std::vector<int> indices() const;
  bool is_subset_of(const SimpleSubset& other) const { return (mask_ & ~other.mask_) == 0; }

  /// Throws PreconditionError if an index exceeds the rank.
  void check_within(int rank) const;

  std::string str() const;

  friend auto operator<=>(const SimpleSubset&, const SimpleSubset&) = default;
  friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// A Weyl group element, stored as its matrix on the simple-root basis:
/// column j holds the image of alpha_j.
class Element {
 public:
  static Element identity(int rank);

  int rank() const { return rank_; }
  Root column(int j) const;  // image of alpha_j, j 1-based
  Root apply(const Root& root) const;

  /// Right multiplication by s_j.
  Element times_simple(const RootSystem& rs, int j) const;

  /// True when this * s_j is shorter than this.
  bool has_right_descent(int j) const;

  /// Number of positive roots sent to negative roots.
  int length(const RootSystem& rs) const;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;

 private:
  int rank_ = 0;
  std::vector<int> cols_;  // column-major, rank x rank
};

Element element_of(const RootSystem& rs, const Word& word);

/// s_{j_1}( s_{j_2}( ... s_{j_l}(root) ) ) for word (j_1, ..., j_l).
Root act(const RootSystem& rs, const Word& word, const Root& root);

/// r(i, w) = s_{j_1} ... s_{j_{i-1}}(alpha_{j_i}), position i 1-based.
/// Throws PreconditionError when i is out of range or the prefix up to i
/// is not reduced.
Root inversion_root(const RootSystem& rs, const Word& word, std::size_t i);

/// All inversion roots of a reduced word, in order.
std::vector<Root> inversion_roots(const RootSystem& rs, const Word& word);

bool is_reduced(const RootSystem& rs, const Word& word);

void require_reduced(const RootSystem& rs, const Word& word, std::string_view what);

/// Greedy reduced word for the longest element of the parabolic subgroup
/// W_J: keep appending the smallest length-increasing j in J.
Word longest_element_word(const RootSystem& rs, const SimpleSubset& J);

/// Positive roots supported on J (all coefficients outside J are zero).
std::vector<Root> positives_supported_on(const RootSystem& rs, const SimpleSubset& J);

inline constexpr std::size_t kReducedWordLimit = 1'000'000;

/// Every reduced word of the element represented by word, sorted
/// lexicographically. Rejects non-reduced input and elements with more than
/// `limit` reduced words.
std::vector<Word> reduced_words(const RootSystem& rs, const Word& word,
                                std::size_t limit = kReducedWordLimit);

/// One reduced word per group element, in shortlex order (breadth-first by
/// right multiplication). Rejects groups larger than `limit`.
std::vector<Word> element_words(const RootSystem& rs, std::size_t limit = 100'000);

}  // namespace petersch
