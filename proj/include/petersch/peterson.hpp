#pragma once

#include <map>
#include <vector>

#include "petersch/billey.hpp"
#include "petersch/rootsys.hpp"
#include "petersch/weyl.hpp"

namespace petersch {

// Fixed points of the Peterson variety are indexed by subsets J of the simple
// generators, with representative w_J (the parabolic longest element).
// Classes p_{v_K} are indexed by subsets K, v_K the Coxeter element of K.

/// Indices of K in increasing order. Rejects the empty set.
Word coxeter_word(const SimpleSubset& K);

/// p_{s_i}(w_J).
LocalizationValue monk_eval(const RootSystem& rs, int i, const SimpleSubset& J);

/// p_{s_i} at the element represented by the reduced word w.
LocalizationValue monk_eval_on(const RootSystem& rs, int i, const Word& w);

/// p_{v_K}(w_K).
LocalizationValue giambelli_eval(const RootSystem& rs, const SimpleSubset& K);

/// p_{v_K} at the element represented by the reduced word w.
LocalizationValue giambelli_eval_on(const RootSystem& rs, const SimpleSubset& K, const Word& w);

/// prod_{i in K} p_{s_i}(w_K) / p_{v_K}(w_K), reduced.
Rational giambelli_ratio(const RootSystem& rs, const SimpleSubset& K);

/// Throws PreconditionError unless `seed` is a reduced word of the same
/// element as `canonical`.
void require_same_element(const RootSystem& rs, const Word& seed, const Word& canonical);

/// Values p_{v_{K'}}(w_J), K' the class index and J the fixed point. The
/// empty K' stands for the unit class.
class EvaluationTable {
 public:
  /// Every pair (K', J) of subsets of the simple generators. 4^rank
  /// evaluations, so intended for small ranks.
  static EvaluationTable build(const RootSystem& rs);

  const LocalizationValue& at(const SimpleSubset& cls, const SimpleSubset& point) const;
  std::size_t size() const { return entries_.size(); }

  /// Checks vanishing off K' subset J and nonvanishing on the diagonal.
  void check_triangular() const;

 private:
  std::map<std::pair<SimpleSubset, SimpleSubset>, LocalizationValue> entries_;
};

/// Single class evaluation p_{v_{K'}}(w_J); cls may be empty.
LocalizationValue class_eval(const RootSystem& rs, const SimpleSubset& cls, const Word& fixed_point_word);

struct StructureConstant {
  Rational coeff;
  int t_exponent = 0;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

using MonkExpansion = std::map<SimpleSubset, StructureConstant>;

/// Coefficients c_{K'} with p_{s_i} p_{v_K} = sum c_{K'} t^{1+|K|-|K'|} p_{v_{K'}}
/// at every fixed point, from the inclusion-triangular system. Zero
/// coefficients are omitted.
MonkExpansion monk_structure_constants(const RootSystem& rs, int i, const SimpleSubset& K);

/// For each fixed point J, LHS - RHS of the Monk expansion divided by
/// t^{1+|K|}, recomputed from fresh evaluations. All zero when the expansion
/// is right.
std::map<SimpleSubset, Rational> monk_residuals(const RootSystem& rs, int i, const SimpleSubset& K,
                                                 const MonkExpansion& expansion);

}  // namespace petersch
