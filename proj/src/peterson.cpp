#include "petersch/peterson.hpp"

#include "petersch/errors.hpp"

namespace petersch {

namespace {

std::vector<SimpleSubset> all_subsets(int rank) {
  std::vector<SimpleSubset> out;
  const std::uint64_t count = std::uint64_t{1} << rank;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(SimpleSubset::from_mask(mask));
  return out;
}

void check_small_rank(const RootSystem& rs) {
  if (rs.rank() > 16) {
    throw PreconditionError("fixed-point enumeration over 2^" + std::to_string(rs.rank()) +
                            " subsets is not supported");
  }
}

Word class_word(const SimpleSubset& cls) { return Word{cls.indices()}; }

}  // namespace

Word coxeter_word(const SimpleSubset& K) {
  if (K.empty()) throw PreconditionError("Coxeter element of the empty set requested");
  return class_word(K);
}

LocalizationValue monk_eval_on(const RootSystem& rs, int i, const Word& w) {
  rs.check_generator(i);
  const std::vector<int> heights = inversion_heights(rs, w);
  LocalizationValue out{0, 1};
  for (std::size_t p = 0; p < w.length(); ++p) {
    if (w[p] == i) out.coeff += heights[p];
  }
  return out;
}

LocalizationValue monk_eval(const RootSystem& rs, int i, const SimpleSubset& J) {
  return monk_eval_on(rs, i, longest_element_word(rs, J));
}

LocalizationValue giambelli_eval_on(const RootSystem& rs, const SimpleSubset& K, const Word& w) {
  return billey_eval_dp(rs, coxeter_word(K), w);
}

LocalizationValue giambelli_eval(const RootSystem& rs, const SimpleSubset& K) {
  K.check_within(rs.rank());
  return giambelli_eval_on(rs, K, longest_element_word(rs, K));
}

Rational giambelli_ratio(const RootSystem& rs, const SimpleSubset& K) {
  const LocalizationValue denominator = giambelli_eval(rs, K);
  if (denominator.is_zero()) {
    throw InvariantError("p_{v_K}(w_K) vanished for K = " + K.str() + " in " + rs.type().str());
  }
  const Word wk = longest_element_word(rs, K);
  BigInt numerator = 1;
  for (int i : K.indices()) numerator *= monk_eval_on(rs, i, wk).coeff;
  return Rational(numerator, denominator.coeff);
}

void require_same_element(const RootSystem& rs, const Word& seed, const Word& canonical) {
  require_reduced(rs, seed, "seed word");
  if (element_of(rs, seed) != element_of(rs, canonical)) {
    throw PreconditionError("seed word " + to_string(seed) + " does not represent the same element as " +
                            to_string(canonical));
  }
}

LocalizationValue class_eval(const RootSystem& rs, const SimpleSubset& cls, const Word& fixed_point_word) {
  return billey_eval_dp(rs, class_word(cls), fixed_point_word);
}

EvaluationTable EvaluationTable::build(const RootSystem& rs) {
  check_small_rank(rs);
  EvaluationTable table;
  const auto subsets = all_subsets(rs.rank());
  for (const SimpleSubset& point : subsets) {
    const Word wj = longest_element_word(rs, point);
    for (const SimpleSubset& cls : subsets) table.entries_.emplace(std::pair(cls, point), class_eval(rs, cls, wj));
  }
  return table;
}

const LocalizationValue& EvaluationTable::at(const SimpleSubset& cls, const SimpleSubset& point) const {
  auto it = entries_.find({cls, point});
  if (it == entries_.end()) {
    throw PreconditionError("no evaluation stored for class " + cls.str() + " at fixed point " + point.str());
  }
  return it->second;
}

void EvaluationTable::check_triangular() const {
  for (const auto& [key, value] : entries_) {
    const auto& [cls, point] = key;
    if (!cls.is_subset_of(point) && !value.is_zero()) {
      throw InvariantError("p_{v_K'}(w_J) nonzero with K' = " + cls.str() + " not inside J = " + point.str());
    }
    if (cls == point && value.coeff <= 0) {
      throw InvariantError("diagonal evaluation vanished at " + cls.str());
    }
  }
}

MonkExpansion monk_structure_constants(const RootSystem& rs, int i, const SimpleSubset& K) {
  rs.check_generator(i);
  K.check_within(rs.rank());
  check_small_rank(rs);

  // Subsets in order of increasing mask visit every J after all of its subsets.
  const auto subsets = all_subsets(rs.rank());
  std::map<SimpleSubset, Rational> solved;
  for (const SimpleSubset& point : subsets) {
    const Word wj = longest_element_word(rs, point);
    const LocalizationValue lhs_class = class_eval(rs, K, wj);
    Rational residual = Rational(monk_eval_on(rs, i, wj).coeff * lhs_class.coeff);
    for (const auto& [cls, c] : solved) {
      if (c != 0 && cls.is_subset_of(point) && cls != point) residual -= c * Rational(class_eval(rs, cls, wj).coeff);
    }
    const LocalizationValue diagonal = class_eval(rs, point, wj);
    if (diagonal.is_zero()) {
      throw InvariantError("diagonal evaluation vanished at " + point.str() + " in " + rs.type().str());
    }
    solved[point] = residual / Rational(diagonal.coeff);
  }

  MonkExpansion out;
  for (const auto& [cls, c] : solved) {
    if (c != 0) out.emplace(cls, StructureConstant{c, 1 + K.size() - cls.size()});
  }
  const auto residuals = monk_residuals(rs, i, K, out);
  for (const auto& [point, r] : residuals) {
    if (r != 0) {
      throw InvariantError("Monk expansion leaves residual " + r.str() + " at fixed point " + point.str());
    }
  }
  return out;
}

std::map<SimpleSubset, Rational> monk_residuals(const RootSystem& rs, int i, const SimpleSubset& K,
                                                 const MonkExpansion& expansion) {
  check_small_rank(rs);
  std::map<SimpleSubset, Rational> out;
  for (const SimpleSubset& point : all_subsets(rs.rank())) {
    const Word wj = longest_element_word(rs, point);
    const LocalizationValue a = monk_eval_on(rs, i, wj);
    const LocalizationValue b = class_eval(rs, K, wj);
    const int lhs_degree = a.degree + b.degree;
    Rational residual = Rational(a.coeff * b.coeff);
    for (const auto& [cls, constant] : expansion) {
      const LocalizationValue e = class_eval(rs, cls, wj);
      if (constant.t_exponent + e.degree != lhs_degree) {
        throw InvariantError("degree mismatch in Monk expansion term " + cls.str());
      }
      residual -= constant.coeff * Rational(e.coeff);
    }
    out.emplace(point, residual);
  }
  return out;
}

}  // namespace petersch
