#include "unitwreath/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "unitwreath/errors.hpp"

namespace unitwreath {

namespace fs = std::filesystem;

std::vector<fs::path> corpus_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (fs::is_regular_file(dir)) return {dir};
  if (!fs::is_directory(dir)) throw Error("not a corpus directory: " + dir.string());
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pc2") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

Census scan(const fs::path& dir, std::optional<std::size_t> order_filter) {
  Census census;
  std::map<std::size_t, OrderTally> tallies;
  for (const auto& path : corpus_files(dir)) {
    try {
      const FiniteGroup g = load_file(path);
      if (order_filter && g.order() != *order_filter) continue;
      CatalogEntry e{g.name(), path, g.order(), check_hypotheses(g), std::nullopt};
      if (e.hypothesis.pass) e.s = std::countr_zero(e.hypothesis.derived_order);
      auto& t = tallies[e.order];
      t.order = e.order;
      ++t.total;
      t.passing += e.hypothesis.pass;
      census.entries.push_back(std::move(e));
    } catch (const Error& err) {
      census.errors.push_back({path, err.what()});
    }
  }
  std::sort(census.entries.begin(), census.entries.end(),
            [](const auto& x, const auto& y) { return std::tie(x.name, x.path) < std::tie(y.name, y.path); });
  for (const auto& [order, t] : tallies) census.tallies.push_back(t);
  return census;
}

AggregateVerdict verify_all(const fs::path& dir, std::optional<std::size_t> order_filter, VerifyMode mode,
                            const SectionOptions& options) {
  AggregateVerdict agg;
  for (const auto& path : corpus_files(dir)) {
    std::optional<FiniteGroup> g;
    try {
      g.emplace(load_file(path));
    } catch (const Error& err) {
      agg.errors.push_back({path, err.what()});
      if (mode == VerifyMode::first_failure) break;
      continue;
    }
    if (order_filter && g->order() != *order_filter) continue;
    if (!check_hypotheses(*g).pass) {
      ++agg.skipped;
      continue;
    }
    VerifyEntry e{g->name(), path, false, {}, std::nullopt};
    try {
      e.report = run_construction(*g, options);
      e.verdict = e.report->verdict;
    } catch (const Error& err) {
      e.error = err.what();
    }
    const bool failed = !e.verdict;
    agg.entries.push_back(std::move(e));
    if (failed && mode == VerifyMode::first_failure) break;
  }
  std::sort(agg.entries.begin(), agg.entries.end(),
            [](const auto& x, const auto& y) { return std::tie(x.name, x.path) < std::tie(y.name, y.path); });
  agg.vacuous = agg.entries.empty() && agg.errors.empty();
  agg.pass = agg.errors.empty() &&
             std::all_of(agg.entries.begin(), agg.entries.end(), [](const auto& e) { return e.verdict; });
  return agg;
}

}  // namespace unitwreath
