#include "petersch/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "petersch/errors.hpp"

namespace petersch {

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) {
      ++pos;
    }
    if (pos == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw PreconditionError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && text[pos] != ',' && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw PreconditionError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    }
  }
  return out;
}

void check_letters(const RootSystem& rs, const Word& word) {
  for (int j : word.letters) rs.check_generator(j);
}

}  // namespace

Word Word::reversed() const { return Word{{letters.rbegin(), letters.rend()}}; }

Word operator+(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

Word parse_word(std::string_view text) { return Word{parse_int_list(text, "word")}; }

std::string to_string(const Word& word) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < word.length(); ++k) {
    if (k) os << ',';
    os << word[k];
  }
  os << ')';
  return os.str();
}

SimpleSubset::SimpleSubset(std::initializer_list<int> indices)
    : SimpleSubset(std::vector<int>(indices)) {}

SimpleSubset::SimpleSubset(const std::vector<int>& indices) {
  for (int i : indices) {
    if (i < 1 || i > kMaxRank) {
      throw PreconditionError("simple index " + std::to_string(i) + " is not a valid generator");
    }
    mask_ |= std::uint64_t{1} << (i - 1);
  }
}

SimpleSubset SimpleSubset::full(int rank) {
  return from_mask(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
}

SimpleSubset SimpleSubset::parse(std::string_view text) {
  return SimpleSubset(parse_int_list(text, "subset"));
}

int SimpleSubset::size() const { return std::popcount(mask_); }

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxRank; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

void SimpleSubset::check_within(int rank) const {
  if (!is_subset_of(full(rank))) {
    throw PreconditionError("subset " + str() + " has indices outside 1.." + std::to_string(rank));
  }
}

std::string SimpleSubset::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Element Element::identity(int rank) {
  Element e;
  e.rank_ = rank;
  e.cols_.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int j = 0; j < rank; ++j) e.cols_[j * rank + j] = 1;
  return e;
}

Root Element::column(int j) const {
  const auto first = cols_.begin() + (j - 1) * rank_;
  return Root{{first, first + rank_}};
}

Root Element::apply(const Root& root) const {
  Root out{std::vector<int>(rank_, 0)};
  for (int j = 0; j < rank_; ++j) {
    const int c = root.coeffs[j];
    if (c == 0) continue;
    for (int k = 0; k < rank_; ++k) out.coeffs[k] += c * cols_[j * rank_ + k];
  }
  return out;
}

Element Element::times_simple(const RootSystem& rs, int j) const {
  // (w s_j)(alpha_k) = w(alpha_k) - cartan(j, k) w(alpha_j)
  Element out = *this;
  const auto& a = rs.cartan();
  for (int k = 1; k <= rank_; ++k) {
    const int c = a(j, k);
    if (c == 0) continue;
    for (int r = 0; r < rank_; ++r) {
      out.cols_[(k - 1) * rank_ + r] -= c * cols_[(j - 1) * rank_ + r];
    }
  }
  return out;
}

bool Element::has_right_descent(int j) const {
  const auto first = cols_.begin() + (j - 1) * rank_;
  return std::any_of(first, first + rank_, [](int c) { return c < 0; });
}

int Element::length(const RootSystem& rs) const {
  int count = 0;
  for (const Root& beta : rs.positives()) {
    if (apply(beta).is_negative()) ++count;
  }
  return count;
}

Element element_of(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  Element w = Element::identity(rs.rank());
  for (int j : word.letters) w = w.times_simple(rs, j);
  return w;
}

Root act(const RootSystem& rs, const Word& word, const Root& root) {
  check_letters(rs, word);
  Root out = root;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) out = rs.reflect(*it, out);
  return out;
}

Root inversion_root(const RootSystem& rs, const Word& word, std::size_t i) {
  if (i < 1 || i > word.length()) {
    throw PreconditionError("position " + std::to_string(i) + " outside 1.." +
                            std::to_string(word.length()) + " of word " + to_string(word));
  }
  check_letters(rs, word);
  Element prefix = Element::identity(rs.rank());
  for (std::size_t k = 0; k + 1 < i; ++k) {
    if (prefix.has_right_descent(word[k])) {
      throw PreconditionError("word " + to_string(word) + " is not reduced (position " +
                              std::to_string(k + 1) + ")");
    }
    prefix = prefix.times_simple(rs, word[k]);
  }
  Root r = prefix.column(word[i - 1]);
  if (!r.is_positive()) {
    throw PreconditionError("word " + to_string(word) + " is not reduced: r(" + std::to_string(i) +
                            ") = " + to_string(r) + " is negative");
  }
  return r;
}

std::vector<Root> inversion_roots(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  std::vector<Root> out;
  out.reserve(word.length());
  Element prefix = Element::identity(rs.rank());
  for (std::size_t k = 0; k < word.length(); ++k) {
    Root r = prefix.column(word[k]);
    if (!r.is_positive()) {
      throw PreconditionError("word " + to_string(word) + " is not reduced: r(" + std::to_string(k + 1) +
                              ") = " + to_string(r) + " is negative");
    }
    out.push_back(std::move(r));
    prefix = prefix.times_simple(rs, word[k]);
  }
  return out;
}

bool is_reduced(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  Element prefix = Element::identity(rs.rank());
  for (int j : word.letters) {
    if (prefix.has_right_descent(j)) return false;
    prefix = prefix.times_simple(rs, j);
  }
  return true;
}

void require_reduced(const RootSystem& rs, const Word& word, std::string_view what) {
  if (!is_reduced(rs, word)) {
    throw PreconditionError(std::string(what) + " " + to_string(word) + " is not a reduced word in " +
                            rs.type().str());
  }
}

Word longest_element_word(const RootSystem& rs, const SimpleSubset& J) {
  J.check_within(rs.rank());
  const std::vector<int> gens = J.indices();
  Word word;
  Element w = Element::identity(rs.rank());
  for (;;) {
    auto next = std::find_if(gens.begin(), gens.end(), [&](int j) { return !w.has_right_descent(j); });
    if (next == gens.end()) break;
    word.letters.push_back(*next);
    w = w.times_simple(rs, *next);
  }
  return word;
}

std::vector<Root> positives_supported_on(const RootSystem& rs, const SimpleSubset& J) {
  std::vector<Root> out;
  for (const Root& beta : rs.positives()) {
    bool inside = true;
    for (int k = 1; k <= rs.rank(); ++k) {
      if (beta.coeffs[k - 1] != 0 && !J.contains(k)) inside = false;
    }
    if (inside) out.push_back(beta);
  }
  return out;
}

std::vector<Word> reduced_words(const RootSystem& rs, const Word& word, std::size_t limit) {
  require_reduced(rs, word, "word");
  const std::size_t len = word.length();
  std::vector<Word> found;
  std::vector<int> suffix;  // letters peeled off the right end, last letter first
  suffix.reserve(len);

  auto peel = [&](auto&& self, const Element& w) -> void {
    if (suffix.size() == len) {
      found.push_back(Word{{suffix.rbegin(), suffix.rend()}});
      if (found.size() > limit) {
        throw PreconditionError("element " + to_string(word) + " has more than " + std::to_string(limit) +
                                " reduced words");
      }
      return;
    }
    for (int j = 1; j <= rs.rank(); ++j) {
      if (!w.has_right_descent(j)) continue;
      suffix.push_back(j);
      self(self, w.times_simple(rs, j));
      suffix.pop_back();
    }
  };
  peel(peel, element_of(rs, word));
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Word> element_words(const RootSystem& rs, std::size_t limit) {
  std::vector<Word> words{Word{}};
  std::vector<Element> layer{Element::identity(rs.rank())};
  std::set<Element> seen(layer.begin(), layer.end());
  std::vector<Word> layer_words{Word{}};
  while (!layer.empty()) {
    std::vector<Element> next;
    std::vector<Word> next_words;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      for (int j = 1; j <= rs.rank(); ++j) {
        if (layer[k].has_right_descent(j)) continue;
        Element x = layer[k].times_simple(rs, j);
        if (!seen.insert(x).second) continue;
        if (seen.size() > limit) {
          throw PreconditionError("Weyl group of " + rs.type().str() + " has more than " +
                                  std::to_string(limit) + " elements");
        }
        Word u = layer_words[k];
        u.letters.push_back(j);
        next.push_back(std::move(x));
        next_words.push_back(std::move(u));
      }
    }
    std::sort(next_words.begin(), next_words.end());
    words.insert(words.end(), next_words.begin(), next_words.end());
    layer = std::move(next);
    layer_words = std::move(next_words);
  }
  return words;
}

}  // namespace petersch
