#include "cycperm/json_io.hpp"

#include <string>

namespace cycperm {

Json to_json(const Word &w) { return Json(w.entries()); }

Json to_json(const Cycle &c) { return to_json(c.canonical()); }

Json to_json(const IndexSet &s) { return Json(s.positions()); }

Json to_json(const StatValue &v) {
  if (v.is_count())
    return Json(v.count());
  if (v.is_positions())
    return to_json(v.positions());
  Json out = Json::array();
  for (const IndexSet &s : v.multiset())
    out.push_back(to_json(s));
  return out;
}

Json to_json(const Distribution &d) {
  Json out = Json::array();
  for (const StatValue &v : d.values())
    out.push_back(to_json(v));
  return out;
}

Json to_json(const QPoly &p) { return Json(p.coefficients()); }

namespace {

template <class Bijection> Json bijection_json(const Bijection &b) {
  Json pairs = Json::array();
  for (const auto &[src, dst] : b.pairs)
    pairs.push_back(Json::array({to_json(src), to_json(dst)}));
  auto kind = [](PermKind k) {
    return k == PermKind::linear ? "linear" : "cyclic";
  };
  return Json{{"source_kind", kind(Bijection::source_kind)},
              {"target_kind", kind(Bijection::target_kind)},
              {"pairs", std::move(pairs)}};
}

} // namespace

Json to_json(const WordBijection &b) { return bijection_json(b); }
Json to_json(const CycleBijection &b) { return bijection_json(b); }

std::string_view to_string(Verdict v) {
  return v == Verdict::compatible ? "compatible" : "counterexample";
}

std::string_view to_string(LiftingVerdict v) {
  return v == LiftingVerdict::holds ? "holds" : "violation";
}

std::string_view to_string(Mode m) {
  return m == Mode::linear ? "linear" : "cyclic";
}

std::string_view to_string(LiftingCondition c) {
  return c == LiftingCondition::a ? "a" : "b";
}

Json report_body(const CompatReport &r) {
  return Json{{"statistic", std::string(name(r.statistic))},
              {"mode", std::string(to_string(r.mode))},
              {"max_total_length", r.max_total_length},
              {"pairs_checked", r.pairs_checked}};
}

Json report_body(const LiftingReport &r) {
  return Json{{"cyclic_statistic", std::string(name(r.cyclic_statistic))},
              {"linear_statistic", std::string(name(r.linear_statistic))},
              {"condition", std::string(to_string(r.condition))},
              {"bound", r.bound},
              {"pairs_checked", r.pairs_checked}};
}

Json counterexample_json(const Counterexample &c) {
  return Json{{"pi", to_json(c.pi)},
              {"pi_prime", to_json(c.pi_prime)},
              {"sigma", to_json(c.sigma)},
              {"sigma_prime", to_json(c.sigma_prime)},
              {"left", to_json(c.left)},
              {"right", to_json(c.right)}};
}

Json violation_json(const LiftingViolation &v) {
  return Json{{"first", to_json(v.first)},
              {"second", to_json(v.second)},
              {"agreed", to_json(v.agreed)},
              {"first_image", to_json(v.first_image)},
              {"second_image", to_json(v.second_image)}};
}

Json envelope(std::string_view command, Json inputs, Json result,
              std::int64_t elapsed_ms) {
  return Json{{"command", std::string(command)},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"elapsed_ms", elapsed_ms}};
}

Json envelope(std::string_view command, Json inputs, const CompatReport &r,
              std::int64_t elapsed_ms) {
  Json out = envelope(command, std::move(inputs), report_body(r), elapsed_ms);
  out["verdict"] = std::string(to_string(r.verdict));
  if (r.counterexample)
    out["counterexample"] = counterexample_json(*r.counterexample);
  return out;
}

Json envelope(std::string_view command, Json inputs, const LiftingReport &r,
              std::int64_t elapsed_ms) {
  Json out = envelope(command, std::move(inputs), report_body(r), elapsed_ms);
  out["verdict"] = std::string(to_string(r.verdict));
  if (r.violation)
    out["counterexample"] = violation_json(*r.violation);
  return out;
}

} // namespace cycperm
