#include "cycperm/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace cycperm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Entry parse_entry(std::string_view token) {
  std::string_view t = trim(token);
  Entry value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError("not a positive integer: '" + std::string(token) + "'",
                     std::string(token));
  if (value <= 0)
    throw ParseError("entries must be positive: '" + std::string(token) + "'",
                     std::string(token));
  return value;
}

template <class Items, class Render>
std::string with_multiplicity(const Items &items, Render render) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k)
      out += ", ";
    out += render(items[k].first);
    if (items[k].second > 1)
      out += "^" + std::to_string(items[k].second);
  }
  return out;
}

} // namespace

Word parse_word(std::string_view text) {
  std::string_view body = trim(text);
  std::vector<Entry> entries;
  std::vector<std::string> tokens;
  if (body.empty())
    return Word();
  if (body.find(',') == std::string_view::npos) {
    for (char ch : body)
      tokens.emplace_back(1, ch);
  } else {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      tokens.emplace_back(body.substr(start, comma - start));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
  }
  std::set<Entry> seen;
  for (const std::string &token : tokens) {
    Entry e = parse_entry(token);
    if (!seen.insert(e).second)
      throw ParseError("repeated entry: '" + token + "'", token);
    entries.push_back(e);
  }
  return Word(std::move(entries));
}

std::string to_text(const Word &w) {
  if (w.empty())
    return "()";
  bool digits = std::all_of(w.begin(), w.end(), [](Entry e) { return e < 10; });
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k && !digits)
      out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

std::string to_text(const Cycle &c) { return "[" + to_text(c.canonical()) + "]"; }

std::string to_text(const IndexSet &s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first)
      out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string to_text(const StatValue &v) {
  if (v.is_count())
    return std::to_string(v.count());
  if (v.is_positions())
    return to_text(v.positions());
  std::vector<std::pair<IndexSet, std::size_t>> runs;
  for (const IndexSet &s : v.multiset()) {
    if (!runs.empty() && runs.back().first == s)
      ++runs.back().second;
    else
      runs.emplace_back(s, 1);
  }
  if (runs.empty())
    return "{{}}";
  return "{{ " +
         with_multiplicity(runs,
                           [](const IndexSet &s) { return to_text(s); }) +
         " }}";
}

std::string to_text(const Distribution &d) {
  auto runs = d.multiplicities();
  bool nested = std::any_of(runs.begin(), runs.end(), [](const auto &r) {
    return r.first.is_multiset();
  });
  std::string body =
      with_multiplicity(runs, [](const StatValue &v) { return to_text(v); });
  return nested ? "{{ " + body + " }}" : "{{" + body + "}}";
}

std::string to_text(const QPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  const auto &c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0)
      continue;
    std::int64_t mag = c[k] < 0 ? -c[k] : c[k];
    if (out.empty())
      out += c[k] < 0 ? "-" : "";
    else
      out += c[k] < 0 ? " - " : " + ";
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1)
      out += std::to_string(mag);
    out += "q";
    if (k > 1)
      out += "^" + std::to_string(k);
  }
  return out;
}

} // namespace cycperm
