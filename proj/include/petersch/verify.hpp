#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "petersch/rootsys.hpp"
#include "petersch/weyl.hpp"

namespace petersch {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite. quick: every type of rank <= 3 plus E6.
/// full: adds rank 4 and 5 types, A8, E7 and E8.
std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream* progress = nullptr);

/// Bruhat order on a small Weyl group, computed as the transitive closure of
/// u < u t (t a reflection, l(u t) > l(u)). Independent of subword
/// evaluation, so it serves as the support oracle.
class BruhatOracle {
 public:
  explicit BruhatOracle(const RootSystem& rs);

  const std::vector<Word>& words() const { return words_; }
  std::size_t index_of(const Element& x) const;
  /// v <= w for elements given by index into words().
  bool leq(std::size_t v, std::size_t w) const { return below_[w][v]; }

 private:
  std::vector<Word> words_;
  std::vector<Element> elements_;
  std::vector<std::vector<bool>> below_;  // below_[w][v]: v <= w
};

/// Checks that must hold in every type: counts, grading, reflections,
/// longest words and inversion sets, Monk sum identity.
std::vector<CheckResult> check_type_invariants(const RootSystem& rs);

/// Exhaustive word-level checks over the whole group (small groups only):
/// DP vs backtracking for all pairs, word independence, Bruhat support.
std::vector<CheckResult> check_group_exhaustive(const RootSystem& rs);

/// Fixed-point identities: Giambelli product vs ratio, Monk expansion residuals.
std::vector<CheckResult> check_peterson_identities(const RootSystem& rs, bool all_structure_constants);

}  // namespace petersch
