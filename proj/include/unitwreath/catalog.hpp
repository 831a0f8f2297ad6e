#pragma once

// Bundled corpora of pc presentations and the census of groups meeting the
// hypotheses.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "unitwreath/construct.hpp"

namespace unitwreath {

struct CatalogEntry {
  std::string name;
  std::filesystem::path path;
  std::size_t order = 0;
  HypothesisReport hypothesis;
  std::optional<int> s;  // log2 |G'| for passing entries
};

struct FileError {
  std::filesystem::path path;
  std::string message;
};

struct OrderTally {
  std::size_t order = 0;
  std::size_t total = 0;
  std::size_t passing = 0;
};

struct Census {
  std::vector<CatalogEntry> entries;  // sorted by name, then path
  std::vector<OrderTally> tallies;    // sorted by order
  std::vector<FileError> errors;      // excluded from the tallies
};

// All *.pc2 files below dir, sorted. A regular file is returned as is.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

Census scan(const std::filesystem::path& dir, std::optional<std::size_t> order_filter = std::nullopt);

enum class VerifyMode { collect_all, first_failure };

struct VerifyEntry {
  std::string name;
  std::filesystem::path path;
  bool verdict = false;
  std::string error;
  std::optional<SectionReport> report;
};

struct AggregateVerdict {
  std::vector<VerifyEntry> entries;  // hypothesis-passing groups only
  std::vector<FileError> errors;
  std::size_t skipped = 0;           // groups failing the hypotheses
  bool vacuous = false;              // nothing to verify
  bool pass = false;
};

AggregateVerdict verify_all(const std::filesystem::path& dir, std::optional<std::size_t> order_filter = std::nullopt,
                            VerifyMode mode = VerifyMode::collect_all, const SectionOptions& options = {});

}  // namespace unitwreath
