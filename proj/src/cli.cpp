#include "petersch/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "petersch/billey.hpp"
#include "petersch/errors.hpp"
#include "petersch/peterson.hpp"
#include "petersch/rootsys.hpp"
#include "petersch/verify.hpp"
#include "petersch/weyl.hpp"

namespace petersch {

namespace {

using nlohmann::json;

// Thrown for malformed but syntactically accepted arguments (bad type label,
// unparsable list). Maps to the usage exit status.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::string subset;
  int generator = 0;
  std::string oracle;
  std::optional<std::size_t> window;
  std::string format = "text";
  std::string seed_word;
  std::string level = "quick";
  bool no_timings = false;
  bool skip_oracle = false;
};

// Timings are emitted as decimal strings so that JSON output never carries floats.
class Stopwatch {
 public:
  template <typename F>
  auto time(const std::string& stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(stage, start);
    } else {
      auto result = f();
      record(stage, start);
      return result;
    }
  }
  const json& stages() const { return stages_; }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    stages_[stage] = os.str();
  }
  json stages_ = json::object();
};

json root_json(const Root& r) { return r.coeffs; }
json word_json(const Word& w) { return w.letters; }
json rational_json(const Rational& q) {
  return {{"numerator", numerator(q).str()}, {"denominator", denominator(q).str()}};
}

RootSystem load_type(const Options& opt) {
  if (opt.type.empty()) throw UsageError("--type is required");
  try {
    return RootSystem(LieType::parse(opt.type));
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

SimpleSubset load_subset(const Options& opt, const RootSystem& rs) {
  if (opt.subset.empty()) return SimpleSubset::full(rs.rank());
  SimpleSubset s;
  try {
    s = SimpleSubset::parse(opt.subset);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  s.check_within(rs.rank());
  return s;
}

// The reduced word used for the fixed point w_J: the canonical greedy word,
// or --seed-word after checking it represents the same element.
Word fixed_point_word(const Options& opt, const RootSystem& rs, const SimpleSubset& J) {
  Word canonical = longest_element_word(rs, J);
  if (opt.seed_word.empty()) return canonical;
  Word seed;
  try {
    seed = parse_word(opt.seed_word);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  require_same_element(rs, seed, canonical);
  return seed;
}

json subset_json(const SimpleSubset& s) { return s.indices(); }

json cmd_roots(const Options& opt) {
  const RootSystem rs = load_type(opt);
  json roots = json::array();
  for (const Root& r : rs.positives()) roots.push_back({{"coeffs", root_json(r)}, {"height", height(r)}});
  return {{"type", rs.type().str()},
          {"count", rs.positives().size()},
          {"positive_roots", roots},
          {"highest_root", root_json(highest_root(rs))}};
}

json cmd_poset(const Options& opt) {
  const RootSystem rs = load_type(opt);
  json covers = json::array();
  for (const auto& [lo, hi] : root_poset_covers(rs)) {
    int simple = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      if (hi.coeffs[i] != lo.coeffs[i]) simple = i + 1;
    }
    covers.push_back({{"lower", root_json(lo)}, {"upper", root_json(hi)}, {"simple", simple}});
  }
  return {{"type", rs.type().str()}, {"cover_count", covers.size()}, {"covers", covers}};
}

json cmd_longest(const Options& opt) {
  const RootSystem rs = load_type(opt);
  const SimpleSubset J = load_subset(opt, rs);
  const Word w = longest_element_word(rs, J);
  return {{"type", rs.type().str()}, {"subset", subset_json(J)}, {"word", word_json(w)}, {"length", w.length()}};
}

json last_occurrences(const Word& w, int rank) {
  json out = json::object();
  for (int j = 1; j <= rank; ++j) {
    for (std::size_t p = w.length(); p > 0; --p) {
      if (w[p - 1] == j) {
        out[std::to_string(j)] = p;
        break;
      }
    }
  }
  return out;
}

json cmd_lists(const Options& opt) {
  const RootSystem rs = load_type(opt);
  const SimpleSubset K = load_subset(opt, rs);
  const Word w = fixed_point_word(opt, rs, K);
  return {{"type", rs.type().str()},
          {"subset", subset_json(K)},
          {"longest_word", word_json(w)},
          {"inversion_heights", inversion_heights(rs, w)},
          {"last_occurrence", last_occurrences(w, rs.rank())}};
}

json cmd_monk(const Options& opt) {
  const RootSystem rs = load_type(opt);
  const SimpleSubset J = load_subset(opt, rs);
  const Word w = fixed_point_word(opt, rs, J);
  std::vector<int> gens;
  if (opt.generator != 0) {
    rs.check_generator(opt.generator);
    gens.push_back(opt.generator);
  } else {
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(i);
  }
  json monk = json::object();
  BigInt total = 0;
  for (int i : gens) {
    const LocalizationValue v = monk_eval_on(rs, i, w);
    monk[std::to_string(i)] = v.coeff.str();
    total += v.coeff;
  }
  return {{"type", rs.type().str()}, {"fixed_point", subset_json(J)}, {"degree", 1},
          {"monk", monk}, {"total", total.str()}};
}

json oracle_json(const RootSystem& rs, const Options& opt, const Word& v, const Word& w, const BigInt& dp_value,
                 std::ostream& err, Stopwatch* watch) {
  const OracleMode mode = opt.oracle == "subsets" ? OracleMode::subsets : OracleMode::backtrack;
  const std::size_t window =
      opt.window ? *opt.window : std::max(earliest_sound_window(rs, v, w), std::min(v.length(), w.length()));
  const BigInt candidates = subset_scan_cost(window, v.length());
  const bool large_e = rs.type().family() == Family::E && rs.rank() >= 7;
  if (mode == OracleMode::subsets && (large_e || candidates > 10'000'000)) {
    err << "warning: the subset scan visits " << candidates.str() << " index subsets of positions 1.." << window
        << "; this can take a very long time\n";
  }
  auto run = [&] { return billey_eval_bruteforce(rs, v, w, window, mode); };
  const LocalizationValue oracle = watch ? watch->time("oracle_" + opt.oracle, run) : run();
  if (oracle.coeff != dp_value) {
    throw InvariantError("oracle value " + oracle.coeff.str() + " disagrees with DP value " + dp_value.str());
  }
  return {{"method", opt.oracle},
          {"window", window},
          {"value", oracle.coeff.str()},
          {"agrees", true},
          {"subset_scan_candidates", candidates.str()}};
}

json cmd_giambelli(const Options& opt, std::ostream& err) {
  const RootSystem rs = load_type(opt);
  const SimpleSubset K = load_subset(opt, rs);
  if (K.empty()) throw PreconditionError("Giambelli evaluation needs a nonempty subset");
  const Word w = fixed_point_word(opt, rs, K);
  const Word v = coxeter_word(K);
  const LocalizationValue value = giambelli_eval_on(rs, K, w);
  BigInt product = 1;
  for (int i : K.indices()) product *= monk_eval_on(rs, i, w).coeff;
  json reduced = json::array();
  for (const Word& u : reduced_words(rs, v)) reduced.push_back(word_json(u));
  json out = {{"type", rs.type().str()},
              {"subset", subset_json(K)},
              {"coxeter_word", word_json(v)},
              {"reduced_words", reduced},
              {"reduced_word_count", reduced.size()},
              {"giambelli", value.coeff.str()},
              {"degree", value.degree},
              {"monk_product", product.str()},
              {"ratio", rational_json(Rational(product, value.coeff))}};
  if (!opt.oracle.empty()) {
    out["oracle"] = oracle_json(rs, opt, v, w, value.coeff, err, nullptr);
  } else if (opt.window) {
    throw UsageError("--window requires --oracle");
  }
  return out;
}

std::string term_string(const SimpleSubset& cls, const StructureConstant& c) {
  std::string s = c.coeff == 1 ? "" : c.coeff.str() + "*";
  if (c.t_exponent == 1) s += "t*";
  if (c.t_exponent > 1) s += "t^" + std::to_string(c.t_exponent) + "*";
  return s + (cls.empty() ? std::string("1") : "p_v" + cls.str());
}

json cmd_constants(const Options& opt) {
  const RootSystem rs = load_type(opt);
  if (opt.generator == 0) throw UsageError("constants requires -i");
  rs.check_generator(opt.generator);
  if (opt.subset.empty()) throw UsageError("constants requires --subset");
  const SimpleSubset K = load_subset(opt, rs);
  const MonkExpansion expansion = monk_structure_constants(rs, opt.generator, K);

  json terms = json::array();
  std::string rhs;
  for (const auto& [cls, c] : expansion) {
    terms.push_back({{"class", subset_json(cls)}, {"coeff", rational_json(c.coeff)}, {"t_exponent", c.t_exponent}});
    rhs += (rhs.empty() ? "" : " + ") + term_string(cls, c);
  }
  bool exact = true;
  for (const auto& [point, r] : monk_residuals(rs, opt.generator, K, expansion)) exact = exact && r == 0;
  const std::string lhs = "p_s" + std::to_string(opt.generator) + (K.empty() ? "" : "*p_v" + K.str());
  return {{"type", rs.type().str()},
          {"generator", opt.generator},
          {"subset", subset_json(K)},
          {"terms", terms},
          {"equation", lhs + " = " + (rhs.empty() ? "0" : rhs)},
          {"residual_zero", exact}};
}

json cmd_report(const Options& opt, std::ostream& err) {
  Stopwatch watch;
  const RootSystem rs = watch.time("roots", [&] { return load_type(opt); });
  const SimpleSubset K = SimpleSubset::full(rs.rank());
  const Word w = watch.time("longest_word", [&] { return fixed_point_word(opt, rs, K); });
  const std::vector<int> heights = watch.time("lists", [&] { return inversion_heights(rs, w); });

  json monk = json::object();
  BigInt product = 1;
  watch.time("monk", [&] {
    for (int i = 1; i <= rs.rank(); ++i) {
      const BigInt c = monk_eval_on(rs, i, w).coeff;
      monk[std::to_string(i)] = c.str();
      product *= c;
    }
  });
  const Word v = coxeter_word(K);
  const LocalizationValue g = watch.time("giambelli_dp", [&] { return giambelli_eval_on(rs, K, w); });
  const std::size_t vk_words = reduced_words(rs, v).size();

  long long height_sum = 0;
  for (const Root& beta : rs.positives()) height_sum += height(beta);

  json out = {{"type_label", rs.type().str()},
              {"longest_word", word_json(w)},
              {"inversion_heights", heights},
              {"monk", monk},
              {"height_sum", height_sum},
              {"giambelli", g.coeff.str()},
              {"giambelli_degree", g.degree},
              {"ratio", rational_json(Rational(product, g.coeff))},
              {"reduced_word_count_vk", vk_words},
              {"last_occurrence", last_occurrences(w, rs.rank())}};
  if (!opt.skip_oracle) {
    Options oracle_opt = opt;
    if (oracle_opt.oracle.empty()) oracle_opt.oracle = "backtrack";
    out["oracle"] = oracle_json(rs, oracle_opt, v, w, g.coeff, err, &watch);
  }
  if (!opt.no_timings) out["timings"] = watch.stages();
  return out;
}

json cmd_verify(const Options& opt, bool& all_passed) {
  if (opt.level != "quick" && opt.level != "full") throw UsageError("--level must be quick or full");
  const auto results = run_verification(opt.level == "full" ? VerifyLevel::full : VerifyLevel::quick);
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    passed += r.passed ? 1 : 0;
  }
  all_passed = passed == results.size();
  return {{"level", opt.level}, {"passed", passed}, {"failed", results.size() - passed}, {"checks", checks}};
}

// ---- rendering ----

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool all_scalars(const json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const json& x) { return x.is_primitive(); });
}

std::string inline_text(const json& j, bool nested = false) {
  if (j.is_primitive()) return scalar_text(j);
  std::string s;
  if (j.is_array()) {
    s = "[";
    for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + inline_text(j[k], true);
    return s + "]";
  }
  for (const auto& [key, val] : j.items()) s += (s.empty() ? "" : " ") + key + "=" + inline_text(val, true);
  return nested ? "{" + s + "}" : s;
}

void render_text(const json& doc, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, val] : doc.items()) {
    if (val.is_object()) {
      out << indent << key << ":\n";
      render_text(val, out, indent + "  ");
    } else if (val.is_array() && !all_scalars(val)) {
      out << indent << key << ":\n";
      for (const auto& item : val) out << indent << "  - " << inline_text(item) << '\n';
    } else {
      out << indent << key << ": " << inline_text(val) << '\n';
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

bool numeric_keys(const json& obj) {
  for (const auto& [key, val] : obj.items()) {
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) return false;
  }
  return true;
}

void flatten_csv(const std::string& quantity, const std::string& index, const json& val, std::ostream& out) {
  auto row = [&](const std::string& q, const std::string& i, const std::string& v) {
    out << csv_field(q) << ',' << csv_field(i) << ',' << csv_field(v) << '\n';
  };
  auto join_index = [&](const std::string& extra) { return index.empty() ? extra : index + "." + extra; };
  if (val.is_primitive()) {
    row(quantity, index, scalar_text(val));
  } else if (val.is_array()) {
    for (std::size_t k = 0; k < val.size(); ++k) {
      const json& item = val[k];
      if (item.is_array() && all_scalars(item)) {
        std::string joined;
        for (std::size_t m = 0; m < item.size(); ++m) joined += (m ? " " : "") + scalar_text(item[m]);
        row(quantity, join_index(std::to_string(k + 1)), joined);
      } else {
        flatten_csv(quantity, join_index(std::to_string(k + 1)), item, out);
      }
    }
  } else if (numeric_keys(val)) {
    for (const auto& [key, item] : val.items()) flatten_csv(quantity, join_index(key), item, out);
  } else {
    for (const auto& [key, item] : val.items()) flatten_csv(quantity.empty() ? key : quantity + "." + key, index, item, out);
  }
}

void emit(const json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << "quantity,index,value\n";
    flatten_csv("", "", doc, out);
  } else {
    render_text(doc, out);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Peterson Schubert calculus on root systems: heights, reduced words, localization sums"};
  app.name("petersch");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed-word", opt.seed_word, "Alternative reduced word (comma list) for the longest element");
  app.add_flag("--no-timings", opt.no_timings, "Omit wall-clock timings from report output");

  auto add_type = [&](CLI::App* sub) { sub->add_option("--type", opt.type, "Lie type such as E8, B3, G2")->required(); };
  auto add_subset = [&](CLI::App* sub) { sub->add_option("--subset", opt.subset, "1-based comma list of simple indices"); };

  auto* roots = app.add_subcommand("roots", "Positive roots with heights");
  add_type(roots);
  auto* poset = app.add_subcommand("poset", "Cover relations of the root poset");
  add_type(poset);
  auto* longest = app.add_subcommand("longest", "Greedy reduced word of the (parabolic) longest element");
  add_type(longest);
  add_subset(longest);
  auto* lists = app.add_subcommand("lists", "Longest word and its inversion heights");
  add_type(lists);
  add_subset(lists);
  auto* monk = app.add_subcommand("monk", "Evaluations p_{s_i}(w_J)");
  add_type(monk);
  add_subset(monk);
  monk->add_option("-i", opt.generator, "Single generator");
  auto* giambelli = app.add_subcommand("giambelli", "Evaluation p_{v_K}(w_K) and the Giambelli ratio");
  add_type(giambelli);
  add_subset(giambelli);
  giambelli->add_option("--oracle", opt.oracle, "Cross-check with an enumeration oracle")
      ->check(CLI::IsMember({"backtrack", "subsets"}));
  giambelli->add_option("--window", opt.window, "Restrict the oracle to positions 1..N");
  auto* constants = app.add_subcommand("constants", "Monk structure constants for p_{s_i} p_{v_K}");
  add_type(constants);
  add_subset(constants);
  constants->add_option("-i", opt.generator, "Generator")->required();
  auto* report = app.add_subcommand("report", "Full pipeline for one type");
  add_type(report);
  report->add_flag("--skip-oracle", opt.skip_oracle, "Do not run the backtracking cross-check");
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--level", opt.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    json doc;
    int status = kExitOk;
    if (*roots) doc = cmd_roots(opt);
    else if (*poset) doc = cmd_poset(opt);
    else if (*longest) doc = cmd_longest(opt);
    else if (*lists) doc = cmd_lists(opt);
    else if (*monk) doc = cmd_monk(opt);
    else if (*giambelli) doc = cmd_giambelli(opt, err);
    else if (*constants) doc = cmd_constants(opt);
    else if (*report) doc = cmd_report(opt, err);
    else if (*verify) {
      bool ok = false;
      doc = cmd_verify(opt, ok);
      if (!ok) status = kExitInternal;
      if (opt.format == "text") {
        for (const auto& c : doc["checks"]) {
          out << (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>();
          if (!c["detail"].get<std::string>().empty()) out << ": " << c["detail"].get<std::string>();
          out << '\n';
        }
        out << doc["passed"] << " passed, " << doc["failed"] << " failed\n";
        return status;
      }
    }
    emit(doc, opt.format, out);
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "rejected: " << e.what() << '\n';
    return kExitRejected;
  } catch (const InvariantError& e) {
    err << "internal invariant failure: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace petersch
