// Command-line front end for the cycperm library.
//
//   cycperm stat    --kind Des --perm 4,2,1,8,5,9,6
//   cycperm shuffle --left 2,5 --right 7,3 [--cyclic] [--stat des]
//   cycperm verify  --stat cPk --max 6
//   cycperm lifting --cstat cDes --stat Des --cond a --max 6
//   cycperm avoid   --n 4 [--patterns 1,2,3 ...] [--poly]
//
// Exit codes: 0 success or hypothesis holds, 1 counterexample or violation,
// 2 usage error.

#include <chrono>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cycperm/bijections.hpp"
#include "cycperm/compatibility.hpp"
#include "cycperm/json_io.hpp"
#include "cycperm/patterns.hpp"
#include "cycperm/shuffles.hpp"
#include "cycperm/statistics.hpp"
#include "cycperm/text.hpp"

using namespace cycperm;

namespace {

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Statistic statistic_arg(const std::string &text) {
  auto id = parse_statistic(text);
  if (!id)
    throw UsageError("unknown statistic '" + text + "'");
  return *id;
}

class Stopwatch {
public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

struct Options {
  std::string format = "json";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  bool json() const { return format == "json"; }
};

void emit(const Json &doc) { std::cout << doc.dump() << '\n'; }

int run_stat(const Options &opt, const std::string &kind_text,
             const std::string &perm_text, bool cyclic) {
  Stopwatch clock;
  Statistic kind = statistic_arg(kind_text);
  Word w = parse_word(perm_text);
  StatValue value;
  Json echoed;
  if (cyclic) {
    if (!is_cyclic(kind))
      throw UsageError(std::string(name(kind)) +
                       " is a linear statistic; drop --cyclic");
    if (w.empty())
      throw UsageError("a cyclic permutation needs at least one entry");
    Cycle c(w);
    value = cyclic_stat(kind, c);
    echoed = to_json(c);
  } else {
    echoed = to_json(w);
    switch (kind) {
    case Statistic::cDes:
    case Statistic::cdes:
    case Statistic::cPk:
    case Statistic::cpk: {
      if (w.empty())
        throw UsageError("cyclic statistics need a nonempty word");
      bool descents = kind == Statistic::cDes || kind == Statistic::cdes;
      IndexSet s = descents ? cdes_set_linear(w) : cpk_set_linear(w);
      bool as_set = kind == Statistic::cDes || kind == Statistic::cPk;
      value = as_set ? StatValue(s)
                     : StatValue(static_cast<std::int64_t>(s.size()));
      break;
    }
    case Statistic::cbru:
      throw UsageError("cbru is defined on cyclic permutations; add --cyclic");
    default:
      value = linear_stat(kind, w);
    }
  }
  if (opt.json())
    emit(envelope("stat",
                  Json{{"kind", std::string(name(kind))},
                       {"perm", echoed},
                       {"cyclic", cyclic}},
                  to_json(value), clock.elapsed_ms()));
  else
    std::cout << to_text(value) << '\n';
  return kOk;
}

int run_shuffle(const Options &opt, const std::string &left_text,
                const std::string &right_text, bool cyclic,
                const std::string &stat_text) {
  Stopwatch clock;
  Word left = parse_word(left_text);
  Word right = parse_word(right_text);
  std::optional<Statistic> stat;
  if (!stat_text.empty()) {
    stat = statistic_arg(stat_text);
    if (is_cyclic(*stat) != cyclic)
      throw UsageError(std::string(name(*stat)) + " is a " +
                       (is_cyclic(*stat) ? "cyclic" : "linear") +
                       " statistic; shuffle is " +
                       (cyclic ? "cyclic" : "linear"));
  }
  Json inputs{{"cyclic", cyclic}};
  if (stat)
    inputs["stat"] = std::string(name(*stat));
  Json result = Json::array();
  std::vector<std::string> lines;
  if (cyclic) {
    if (left.empty() || right.empty())
      throw UsageError("cyclic shuffle operands must be nonempty");
    Cycle p(left), s(right);
    inputs["left"] = to_json(p);
    inputs["right"] = to_json(s);
    auto set = cyclic_shuffles(p, s);
    if (stat) {
      Distribution d = distribution(*stat, set);
      result = to_json(d);
      lines.push_back(to_text(d));
    } else {
      for (const Cycle &c : set) {
        result.push_back(to_json(c));
        lines.push_back(to_text(c));
      }
    }
  } else {
    inputs["left"] = to_json(left);
    inputs["right"] = to_json(right);
    auto set = linear_shuffles(left, right);
    if (stat) {
      Distribution d = distribution(*stat, set);
      result = to_json(d);
      lines.push_back(to_text(d));
    } else {
      for (const Word &w : set) {
        result.push_back(to_json(w));
        lines.push_back(to_text(w));
      }
    }
  }
  if (opt.json())
    emit(envelope("shuffle", std::move(inputs), std::move(result),
                  clock.elapsed_ms()));
  else
    for (const std::string &line : lines)
      std::cout << line << '\n';
  return kOk;
}

Reduction reduction_arg(const std::string &text) {
  if (text == "both")
    return Reduction::both;
  if (text == "fix-sigma")
    return Reduction::fix_sigma;
  if (text == "fix-pi")
    return Reduction::fix_pi;
  if (text == "quadruple")
    return Reduction::quadruple;
  throw UsageError("unknown reduction '" + text + "'");
}

int run_verify(const Options &opt, const std::string &stat_text, int max_total,
               const std::string &reduction_text) {
  Stopwatch clock;
  Statistic stat = statistic_arg(stat_text);
  if (max_total < 2)
    throw UsageError("--max must be at least 2");
  EngineOptions engine;
  engine.jobs = opt.jobs;
  engine.reduction = reduction_arg(reduction_text);
  CompatReport report = check_compat(stat, max_total, engine);
  if (opt.json()) {
    emit(envelope("verify",
                  Json{{"stat", std::string(name(stat))},
                       {"max", max_total},
                       {"reduction", reduction_text}},
                  report, clock.elapsed_ms()));
  } else {
    std::cout << name(stat) << " (" << to_string(report.mode)
              << ", m+n <= " << max_total << "): " << to_string(report.verdict)
              << " after " << report.pairs_checked << " comparisons\n";
    if (report.counterexample) {
      const Counterexample &ce = *report.counterexample;
      bool cyc = report.mode == Mode::cyclic;
      auto show = [cyc](const Word &w) {
        return cyc ? to_text(Cycle(w)) : to_text(w);
      };
      std::cout << "  " << show(ce.pi) << " sh " << show(ce.sigma) << " -> "
                << to_text(ce.left) << '\n'
                << "  " << show(ce.pi_prime) << " sh " << show(ce.sigma_prime)
                << " -> " << to_text(ce.right) << '\n';
    }
  }
  return report.verdict == Verdict::compatible ? kOk : kFound;
}

int run_lifting(const Options &opt, const std::string &cstat_text,
                const std::string &lstat_text, const std::string &cond,
                int bound) {
  Stopwatch clock;
  Statistic cid = statistic_arg(cstat_text);
  Statistic lid = statistic_arg(lstat_text);
  if (!is_cyclic(cid) || is_cyclic(lid))
    throw UsageError("--cstat must be cyclic and --stat linear");
  if (cond != "a" && cond != "b")
    throw UsageError("--cond must be a or b");
  LiftingReport report = cond == "a" ? check_lifting_a(cid, lid, bound)
                                     : check_lifting_b(cid, lid, bound);
  if (opt.json()) {
    emit(envelope("lifting",
                  Json{{"cstat", std::string(name(cid))},
                       {"stat", std::string(name(lid))},
                       {"cond", cond},
                       {"max", bound}},
                  report, clock.elapsed_ms()));
  } else {
    std::cout << "(" << cond << ") " << name(cid) << "/" << name(lid)
              << " up to " << bound << ": " << to_string(report.verdict)
              << '\n';
    if (report.violation) {
      const LiftingViolation &v = *report.violation;
      std::cout << "  " << to_text(v.first) << " -> "
                << to_text(v.first_image) << '\n'
                << "  " << to_text(v.second) << " -> "
                << to_text(v.second_image) << '\n';
    }
  }
  return report.verdict == LiftingVerdict::holds ? kOk : kFound;
}

int run_avoid(const Options &opt, int n,
              const std::vector<std::string> &pattern_texts, bool poly) {
  Stopwatch clock;
  if (n < 1)
    throw UsageError("--n must be at least 1");
  std::vector<Cycle> cycles;
  for (const std::string &text : pattern_texts) {
    Word w = parse_word(text);
    if (w.empty())
      throw UsageError("empty pattern");
    cycles.emplace_back(w);
  }
  PatternSet patterns(std::move(cycles));
  Json listed = Json::array();
  for (const Cycle &p : patterns)
    listed.push_back(to_json(p));
  Json inputs{{"n", n}, {"patterns", std::move(listed)}, {"poly", poly}};
  Json result;
  std::string line;
  if (poly) {
    QPoly d = avoidance_poly(n, patterns);
    result = to_json(d);
    line = to_text(d);
  } else {
    auto count = static_cast<std::int64_t>(avoiders(n, patterns).size());
    result = count;
    line = std::to_string(count);
  }
  if (opt.json())
    emit(envelope("avoid", std::move(inputs), std::move(result),
                  clock.elapsed_ms()));
  else
    std::cout << line << '\n';
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cyclic and linear permutation statistics, shuffles and "
               "shuffle-compatibility verification"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for verification")
      ->check(CLI::PositiveNumber);

  std::string kind, perm;
  bool cyclic = false;
  auto *stat = app.add_subcommand("stat", "Evaluate a statistic");
  stat->add_option("--kind", kind, "Statistic name")->required();
  stat->add_option("--perm", perm, "Permutation, e.g. 4,2,1,8 or 4218")
      ->required();
  stat->add_flag("--cyclic", cyclic, "Treat --perm as a cyclic permutation");

  std::string left, right, shuffle_stat;
  auto *shuffle = app.add_subcommand("shuffle", "List a shuffle set");
  shuffle->add_option("--left", left)->required();
  shuffle->add_option("--right", right)->required();
  shuffle->add_flag("--cyclic", cyclic, "Cyclic shuffle");
  shuffle->add_option("--stat", shuffle_stat,
                      "Print this statistic's distribution instead");

  std::string verify_stat, reduction = "both";
  int max_total = 7;
  auto *verify = app.add_subcommand("verify", "Check shuffle compatibility");
  verify->add_option("--stat", verify_stat)->required();
  verify->add_option("--max", max_total, "Largest m+n")->capture_default_str();
  verify->add_option("--reduction", reduction,
                     "both, fix-sigma, fix-pi or quadruple")
      ->capture_default_str();

  std::string cstat, lstat, cond;
  int lift_bound = 6;
  auto *lifting =
      app.add_subcommand("lifting", "Check a lifting-lemma hypothesis");
  lifting->add_option("--cstat", cstat)->required();
  lifting->add_option("--stat", lstat)->required();
  lifting->add_option("--cond", cond)->required();
  lifting->add_option("--max", lift_bound, "Largest length")->capture_default_str();

  int avoid_n = 0;
  std::vector<std::string> patterns;
  bool poly = false;
  auto *avoid = app.add_subcommand("avoid", "Count pattern-avoiding cycles");
  avoid->add_option("--n", avoid_n)->required();
  avoid->add_option("--patterns", patterns, "Standardized cyclic patterns");
  avoid->add_flag("--poly", poly, "Print the cdes generating polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*stat)
      return run_stat(opt, kind, perm, cyclic);
    if (*shuffle)
      return run_shuffle(opt, left, right, cyclic, shuffle_stat);
    if (*verify)
      return run_verify(opt, verify_stat, max_total, reduction);
    if (*lifting)
      return run_lifting(opt, cstat, lstat, cond, lift_bound);
    if (*avoid)
      return run_avoid(opt, avoid_n, patterns, poly);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
