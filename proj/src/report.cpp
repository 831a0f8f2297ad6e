#include "unitwreath/report.hpp"

#include <iomanip>
#include <sstream>

namespace unitwreath {

namespace {

const char* status_name(Check::Status s) {
  switch (s) {
    case Check::Status::passed: return "pass";
    case Check::Status::failed: return "FAIL";
    case Check::Status::skipped: return "skipped";
  }
  return "?";
}

Json words(const FiniteGroup& g, const std::vector<GroupElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(g.format(x));
  return out;
}

}  // namespace

Json to_json(const FiniteGroup& g, const HypothesisReport& r) {
  Json j;
  j["group"] = g.name();
  j["order"] = r.group_order;
  j["nonabelian"] = r.nonabelian;
  j["derived_order"] = r.derived_order;
  j["derived_cyclic"] = r.derived_cyclic;
  j["center_order"] = r.center_order;
  j["candidates_z"] = words(g, r.candidates_z);
  j["pass"] = r.pass;
  if (r.pass)
    j["reason"] = nullptr;
  else
    j["reason"] = std::string(to_string(r.failure));
  return j;
}

std::string to_text(const FiniteGroup& g, const HypothesisReport& r) {
  std::ostringstream out;
  out << "group " << g.name() << " (order " << r.group_order << ")\n"
      << "  non-abelian:         " << (r.nonabelian ? "yes" : "no") << '\n'
      << "  |G'|:                " << r.derived_order << (r.derived_cyclic ? " (cyclic)" : " (not cyclic)") << '\n'
      << "  |Z(G)|:              " << r.center_order << '\n'
      << "  z candidates:        ";
  if (r.candidates_z.empty()) out << "none";
  for (std::size_t i = 0; i < r.candidates_z.size(); ++i) out << (i ? ", " : "") << g.format(r.candidates_z[i]);
  out << "\n  hypotheses:          " << (r.pass ? "PASS" : "FAIL (" + std::string(to_string(r.failure)) + ")")
      << '\n';
  return out.str();
}

Json to_json(const FiniteGroup& g, const SectionReport& r) {
  const auto& w = r.witness;
  Json j;
  j["group"] = r.group_name;
  j["order"] = r.group_order;
  j["witness"] = {{"a", g.format(w.a)},
                  {"b", g.format(w.b)},
                  {"z", g.format(w.z)},
                  {"commutator", g.format(g.commutator(w.b, w.a))}};
  j["s"] = w.s;
  j["k"] = w.k;
  Json orbit = Json::array();
  for (const auto& u : r.orbit) {
    Json support = Json::array();
    u.support().for_each_set([&](std::size_t i) { support.push_back(i); });
    orbit.push_back({{"unit", u.format()}, {"support", support}});
  }
  j["orbit"] = orbit;
  j["orders"] = {{"base", r.base_order},
                 {"ambient", r.ambient_order},
                 {"kernel", r.kernel_order},
                 {"quotient", r.quotient_order}};
  Json checks = Json::object();
  for (const auto& c : r.checks)
    if (c.status != Check::Status::skipped) checks[c.name] = c.status == Check::Status::passed;
  j["checks"] = checks;
  j["verdict"] = r.verdict ? "pass" : "fail";
  return j;
}

std::string to_text(const FiniteGroup& g, const SectionReport& r) {
  const auto& w = r.witness;
  const std::size_t m = std::size_t{1} << w.s;
  std::ostringstream out;
  out << "group " << r.group_name << " (order " << r.group_order << ")\n"
      << "G' = <(b,a)> with (b,a) = " << g.format(g.commutator(w.b, w.a)) << ", |G'| = 2^" << w.s << '\n'
      << "a = " << g.format(w.a) << " (order 2^" << w.k << "), b = " << g.format(w.b) << ", z = " << g.format(w.z)
      << '\n'
      << "h = 1 + b(1 + z) = " << (r.orbit.empty() ? "?" : r.orbit.front().format()) << '\n';
  for (std::size_t i = 1; i < r.orbit.size(); ++i)
    out << "h^(a^" << i << ") = 1 + b(b,a^" << i << ")(1 + z) = " << r.orbit[i].format() << "   [(b,a^" << i
        << ") = " << g.format(g.commutator(w.b, g.power(w.a, i))) << "]\n";
  out << "h^(a^" << m << ") = h\n"
      << "X = <h> x ... x <h^(a^" << (m - 1) << ")>, |X| = " << r.base_order << '\n'
      << "|<X, a>| = " << r.ambient_order << ", |<a^" << m << ">| = " << r.kernel_order
      << ", |<X, a> / <a^" << m << ">| = " << r.quotient_order << '\n'
      << "checks:\n";
  for (const auto& c : r.checks) {
    out << "  " << std::left << std::setw(34) << c.name << status_name(c.status);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << "verdict: " << (r.verdict ? "PASS" : "FAIL") << " (C2 wr C_" << m
      << (r.verdict ? " is a section of V(KG))" : " not established)") << '\n';
  return out.str();
}

Json to_json(const Census& c) {
  Json j;
  Json orders = Json::array();
  for (const auto& t : c.tallies) {
    Json entries = Json::array();
    for (const auto& e : c.entries) {
      if (e.order != t.order) continue;
      Json item{{"name", e.name}, {"pass", e.hypothesis.pass}};
      if (e.hypothesis.pass)
        item["s"] = *e.s;
      else
        item["reason"] = std::string(to_string(e.hypothesis.failure));
      entries.push_back(item);
    }
    orders.push_back({{"order", t.order}, {"total", t.total}, {"passing", t.passing}, {"entries", entries}});
  }
  j["orders"] = orders;
  Json errors = Json::array();
  for (const auto& e : c.errors) errors.push_back({{"file", e.path.string()}, {"error", e.message}});
  j["errors"] = errors;
  return j;
}

std::string to_text(const Census& c) {
  std::ostringstream out;
  for (const auto& e : c.entries) {
    out << std::left << std::setw(20) << e.name << std::right << std::setw(6) << e.order << "  ";
    if (e.hypothesis.pass)
      out << "pass  s=" << *e.s;
    else
      out << "fail  " << to_string(e.hypothesis.failure);
    out << '\n';
  }
  out << "\norder  total  passing\n";
  for (const auto& t : c.tallies)
    out << std::setw(5) << t.order << std::setw(7) << t.total << std::setw(9) << t.passing << '\n';
  for (const auto& e : c.errors) out << "error: " << e.path.string() << ": " << e.message << '\n';
  return out.str();
}

Json to_json(const AggregateVerdict& v) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : v.entries) {
    Json item{{"name", e.name}, {"verdict", e.verdict ? "pass" : "fail"}};
    if (e.report) {
      item["s"] = e.report->witness.s;
      item["quotient_order"] = e.report->quotient_order;
    }
    if (!e.error.empty()) item["error"] = e.error;
    entries.push_back(item);
  }
  j["entries"] = entries;
  Json errors = Json::array();
  for (const auto& e : v.errors) errors.push_back({{"file", e.path.string()}, {"error", e.message}});
  j["errors"] = errors;
  j["skipped"] = v.skipped;
  j["vacuous"] = v.vacuous;
  j["verdict"] = v.pass ? "pass" : "fail";
  return j;
}

std::string to_text(const AggregateVerdict& v) {
  std::ostringstream out;
  for (const auto& e : v.entries) {
    out << std::left << std::setw(20) << e.name << (e.verdict ? "PASS" : "FAIL");
    if (e.report) out << "  s=" << e.report->witness.s << "  |Q|=" << e.report->quotient_order;
    if (!e.error.empty()) out << "  " << e.error;
    out << '\n';
  }
  for (const auto& e : v.errors) out << "error: " << e.path.string() << ": " << e.message << '\n';
  if (v.vacuous) out << "warning: no group meets the hypotheses; verdict is vacuous\n";
  out << v.entries.size() << " verified, " << v.skipped << " skipped (hypotheses fail), verdict "
      << (v.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

Json to_json(const WreathModel& w) {
  Json j;
  j["s"] = w.s();
  j["width"] = w.width();
  j["order"] = w.order();
  Json base = Json::array();
  for (std::size_t i = 0; i < w.width(); ++i) base.push_back(w.base_generator(i));
  j["generators"] = {{"base", base}, {"top", w.top_generator()}};
  const auto t = w.table();
  Json rows = Json::array();
  for (std::size_t x = 0; x < t.order(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < t.order(); ++y) row.push_back(t(x, y));
    rows.push_back(std::move(row));
  }
  j["table"] = rows;
  return j;
}

}  // namespace unitwreath
