#include "petersch/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "petersch/errors.hpp"

namespace petersch {

namespace {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

void check_rank(Family family, int rank) {
  const std::string name(1, family_letter(family));
  auto fail = [&](const std::string& rule) {
    throw PreconditionError("invalid Lie type " + name + std::to_string(rank) + ": " + rule);
  };
  if (rank < 1) fail("rank must be positive");
  if (rank > kMaxRank) fail("rank exceeds the supported maximum " + std::to_string(kMaxRank));
  switch (family) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail("type " + name + " requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) fail("type D requires rank >= 3");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("type E requires rank 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) fail("type F requires rank 4");
      break;
    case Family::G:
      if (rank != 2) fail("type G requires rank 2");
      break;
  }
}

// Bourbaki-numbered Dynkin diagram edges: (i, j, <alpha_j, alpha_i^vee>, <alpha_i, alpha_j^vee>).
struct Edge {
  int i, j, a_ij, a_ji;
};

std::vector<Edge> dynkin_edges(const LieType& type) {
  const int n = type.rank();
  std::vector<Edge> edges;
  auto chain = [&](int last) {
    for (int i = 1; i < last; ++i) edges.push_back({i, i + 1, -1, -1});
  };
  switch (type.family()) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      // alpha_n short
      chain(n - 1);
      edges.push_back({n - 1, n, -1, -2});
      break;
    case Family::C:
      // alpha_n long
      chain(n - 1);
      edges.push_back({n - 1, n, -2, -1});
      break;
    case Family::D:
      chain(n - 1);
      edges.push_back({n - 2, n, -1, -1});
      break;
    case Family::E:
      edges.push_back({1, 3, -1, -1});
      for (int i = 3; i < n; ++i) edges.push_back({i, i + 1, -1, -1});
      edges.push_back({2, 4, -1, -1});
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edges.push_back({1, 2, -1, -1});
      edges.push_back({2, 3, -1, -2});
      edges.push_back({3, 4, -1, -1});
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      edges.push_back({1, 2, -3, -1});
      break;
  }
  return edges;
}

}  // namespace

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  check_rank(family, rank);
}

LieType LieType::parse(std::string_view label) {
  if (label.size() < 2) {
    throw PreconditionError("invalid Lie type label '" + std::string(label) +
                            "': expected a family letter A-G followed by a rank");
  }
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (letter < 'A' || letter > 'G') {
    throw PreconditionError("invalid Lie type label '" + std::string(label) +
                            "': family must be one of A, B, C, D, E, F, G");
  }
  int rank = 0;
  const auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw PreconditionError("invalid Lie type label '" + std::string(label) +
                            "': rank must be a decimal integer");
  }
  return LieType(static_cast<Family>(letter - 'A'), rank);
}

std::string LieType::str() const { return family_letter(family_) + std::to_string(rank_); }

Root Root::simple(int rank, int i) {
  Root r{std::vector<int>(rank, 0)};
  r.coeffs[i - 1] = 1;
  return r;
}

bool Root::is_positive() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c != 0; });
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

std::string to_string(const Root& root) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < root.coeffs.size(); ++k) {
    if (k) os << ',';
    os << root.coeffs[k];
  }
  os << ')';
  return os.str();
}

int height(const Root& root) { return std::accumulate(root.coeffs.begin(), root.coeffs.end(), 0); }

int height(const RootSystem& rs, const Root& root) {
  if (!root.is_positive() || !rs.is_root(root)) {
    throw PreconditionError("height is defined for positive roots only, got " + to_string(root));
  }
  return height(root);
}

CartanMatrix::CartanMatrix(const LieType& type)
    : rank_(type.rank()), entries_(static_cast<std::size_t>(rank_) * rank_, 0) {
  for (int i = 1; i <= rank_; ++i) entries_[(i - 1) * rank_ + (i - 1)] = 2;
  for (const Edge& e : dynkin_edges(type)) link(e.i, e.j, e.a_ij, e.a_ji);
}

void CartanMatrix::link(int i, int j, int a_ij, int a_ji) {
  entries_[(i - 1) * rank_ + (j - 1)] = a_ij;
  entries_[(j - 1) * rank_ + (i - 1)] = a_ji;
}

RootSystem::RootSystem(const LieType& type) : type_(type), cartan_(type) {
  const int n = rank();
  std::set<Root> seen;
  std::deque<Root> frontier;
  for (int i = 1; i <= n; ++i) {
    Root a = Root::simple(n, i);
    seen.insert(a);
    frontier.push_back(std::move(a));
  }
  // Reflection closure: apply every simple reflection, keep positive images.
  while (!frontier.empty()) {
    Root beta = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i <= n; ++i) {
      Root image = reflect(i, beta);
      if (image.is_positive() && seen.insert(image).second) frontier.push_back(std::move(image));
    }
  }
  positives_.assign(seen.begin(), seen.end());
  std::stable_sort(positives_.begin(), positives_.end(), [](const Root& a, const Root& b) {
    return height(a) < height(b);
  });
  for (int k = 0; k < static_cast<int>(positives_.size()); ++k) index_.emplace(positives_[k], k);
}

int RootSystem::index_of(const Root& root) const {
  auto it = index_.find(root);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& root) const {
  if (root.rank() != static_cast<std::size_t>(rank())) return false;
  return index_of(root) >= 0 || index_of(-root) >= 0;
}

void RootSystem::check_generator(int i) const {
  if (i < 1 || i > rank()) {
    throw PreconditionError("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(rank()) + " for type " + type_.str());
  }
}

Root RootSystem::reflect(int i, const Root& root) const {
  check_generator(i);
  if (root.rank() != static_cast<std::size_t>(rank())) {
    throw PreconditionError("root " + to_string(root) + " has wrong dimension for type " + type_.str());
  }
  int pairing = 0;
  for (int j = 1; j <= rank(); ++j) pairing += cartan_(i, j) * root.coeffs[j - 1];
  Root image = root;
  image.coeffs[i - 1] -= pairing;
  return image;
}

RootSystem build_root_system(const LieType& type) { return RootSystem(type); }

std::vector<std::pair<Root, Root>> root_poset_covers(const RootSystem& rs) {
  std::vector<std::pair<Root, Root>> covers;
  for (const Root& lower : rs.positives()) {
    for (int i = 1; i <= rs.rank(); ++i) {
      Root upper = lower;
      ++upper.coeffs[i - 1];
      if (rs.index_of(upper) >= 0) covers.emplace_back(lower, std::move(upper));
    }
  }
  std::sort(covers.begin(), covers.end(), [&](const auto& a, const auto& b) {
    return std::pair(rs.index_of(a.first), rs.index_of(a.second)) <
           std::pair(rs.index_of(b.first), rs.index_of(b.second));
  });
  return covers;
}

std::vector<int> poset_ranks(const RootSystem& rs) {
  const auto& pos = rs.positives();
  std::vector<std::vector<int>> below(pos.size());
  for (const auto& [lower, upper] : root_poset_covers(rs)) {
    below[rs.index_of(upper)].push_back(rs.index_of(lower));
  }
  // Longest path from a minimal element; memoized over a DAG.
  std::vector<int> rank(pos.size(), -1);
  auto visit = [&](auto&& self, int k) -> int {
    if (rank[k] >= 0) return rank[k];
    int best = 0;
    for (int l : below[k]) best = std::max(best, self(self, l) + 1);
    return rank[k] = best;
  };
  for (int k = 0; k < static_cast<int>(pos.size()); ++k) visit(visit, k);
  return rank;
}

Root highest_root(const RootSystem& rs) {
  const auto& pos = rs.positives();
  const int top = height(pos.back());
  if (pos.size() > 1 && height(pos[pos.size() - 2]) == top) {
    throw InvariantError("highest root of " + rs.type().str() + " is not unique");
  }
  return pos.back();
}

std::size_t expected_positive_count(const LieType& type) {
  const std::size_t n = static_cast<std::size_t>(type.rank());
  switch (type.family()) {
    case Family::A:
      return n * (n + 1) / 2;
    case Family::B:
    case Family::C:
      return n * n;
    case Family::D:
      return n * (n - 1);
    case Family::E:
      return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F:
      return 24;
    case Family::G:
      return 6;
  }
  return 0;
}

}  // namespace petersch
