// Regenerates corpus/o8, corpus/o16 and corpus/o32.
//
// Every group of order 2^n has a central subgroup of order 2 with quotient of
// order 2^(n-1), so all of them arise by appending a central generator f_n to
// a presentation of each group of order 2^(n-1): each power and conjugation
// relation optionally gains a trailing f_n. Consistent candidates are reduced
// to isomorphism classes with the exact backtracking search from the oracle.
// The class counts 1, 2, 5, 14, 51 are asserted.
//
// Orders 8 and 16 are written from hand-made, readable presentations; each
// must match exactly one generated class. Order 32 uses the generated
// presentations, numbered in discovery order.
//
// usage: gen_corpus <corpus-dir>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "unitwreath/errors.hpp"
#include "unitwreath/oracle.hpp"
#include "unitwreath/pcgroup.hpp"

namespace fs = std::filesystem;
using namespace unitwreath;

namespace {

struct Named {
  const char* file;
  const char* text;
};

const Named kOrder8[] = {
    {"C8", "group C8\ngens a b c\npow a = b\npow b = c\n"},
    {"C4xC2", "group C4xC2\ngens a c e\npow a = c\n"},
    {"C2xC2xC2", "group C2xC2xC2\ngens a b c\n"},
    {"D8", "group D8\ngens a c b\npow a = c\nconj b a = b c\n"},
    {"Q8", "group Q8\ngens a b c\npow a = c\npow b = c\nconj b a = b c\n"},
};

const Named kOrder16[] = {
    {"C16", "group C16\ngens a b c d\npow a = b\npow b = c\npow c = d\n"},
    {"C8xC2", "group C8xC2\ngens a b c e\npow a = b\npow b = c\n"},
    {"C4xC4", "group C4xC4\ngens a b c d\npow a = b\npow c = d\n"},
    {"C4xC2xC2", "group C4xC2xC2\ngens a b c d\npow a = b\n"},
    {"C2xC2xC2xC2", "group C2xC2xC2xC2\ngens a b c d\n"},
    {"D8xC2", "group D8xC2\ngens a c b z\npow a = c\nconj b a = b c\n"},
    {"Q8xC2", "group Q8xC2\ngens a b c z\npow a = c\npow b = c\nconj b a = b c\n"},
    // x^y = x^-1 with x, y of order 4
    {"C4sdC4", "group C4sdC4\ngens y x u v\npow y = u\npow x = v\nconj x y = x v\n"},
    // a^c = a b with a of order 4 and b, c involutions
    {"C2xC2sdC4", "group C2xC2sdC4\ngens c a u b\npow a = u\nconj a c = a b\n"},
    // central product C4 o D8
    {"C4oD8", "group C4oD8\ngens x y i m\npow i = m\nconj y x = y m\n"},
    // modular group: r^f = r^5
    {"M16", "group M16\ngens f r r2 r4\npow r = r2\npow r2 = r4\nconj r f = r r4\n"},
    {"D16", "group D16\ngens f r r2 r4\npow r = r2\npow r2 = r4\nconj r f = r r2 r4\nconj r2 f = r2 r4\n"},
    {"SD16", "group SD16\ngens f r r2 r4\npow r = r2\npow r2 = r4\nconj r f = r r2\nconj r2 f = r2 r4\n"},
    {"Q16",
     "group Q16\ngens f r r2 r4\npow f = r4\npow r = r2\npow r2 = r4\nconj r f = r r2 r4\nconj r2 f = r2 r4\n"},
};

using Key = std::tuple<std::vector<std::uint32_t>, std::size_t, std::size_t, bool>;

Key invariants(const FiniteGroup& g) {
  const auto& t = *g.cayley();
  std::vector<std::uint32_t> orders;
  for (std::size_t x = 0; x < t.order(); ++x) orders.push_back(t.element_order(x));
  std::sort(orders.begin(), orders.end());
  return {orders, center(g).size(), derived_subgroup(g).size(), t.is_abelian()};
}

struct Catalog {
  std::vector<FiniteGroup> groups;
  std::map<Key, std::vector<std::size_t>> buckets;

  // Index of the class of g, adding it when new.
  std::size_t classify(FiniteGroup g, bool& added) {
    const Key key = invariants(g);
    auto& bucket = buckets[key];
    for (auto idx : bucket)
      if (isomorphic(*groups[idx].cayley(), *g.cayley())) {
        added = false;
        return idx;
      }
    bucket.push_back(groups.size());
    groups.push_back(std::move(g));
    added = true;
    return groups.size() - 1;
  }
};

PcPresentation extend(const PcPresentation& parent, std::uint64_t mask, const std::string& name) {
  const int n = parent.size();
  std::vector<std::string> gens = parent.generators;
  gens.push_back("f" + std::to_string(n + 1));
  PcPresentation p = PcPresentation::free_relations(name, gens);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    p.powers[i] = parent.powers[i];
    if (mask >> bit++ & 1u) p.powers[i].push_back(n);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      p.conjugates[i][j] = parent.conjugates[i][j];
      if (mask >> bit++ & 1u) p.conjugates[i][j].push_back(n);
    }
  return p;
}

std::vector<FiniteGroup> next_level(const std::vector<FiniteGroup>& parents, int n) {
  Catalog cat;
  for (const auto& parent : parents) {
    const int pn = parent.generator_count();
    const int bits = pn + pn * (pn - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      PcPresentation p = extend(parent.presentation(), mask, "candidate");
      try {
        bool added = false;
        cat.classify(FiniteGroup(std::move(p)), added);
      } catch (const InconsistencyError&) {
      }
    }
  }
  std::cerr << "order " << (1u << n) << ": " << cat.groups.size() << " classes\n";
  return std::move(cat.groups);
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus <corpus-dir>\n";
    return 2;
  }
  const fs::path root = argv[1];
  const std::size_t expected[] = {1, 1, 2, 5, 14, 51};

  std::vector<FiniteGroup> level;
  level.emplace_back(PcPresentation::free_relations("trivial", {}));
  std::vector<std::vector<FiniteGroup>> levels{level};
  for (int n = 1; n <= 5; ++n) {
    level = next_level(level, n);
    if (level.size() != expected[n]) {
      std::cerr << "expected " << expected[n] << " classes of order " << (1u << n) << "\n";
      return 1;
    }
    levels.push_back(level);
  }

  auto write_named = [&](const char* dir, std::span<const Named> named, const std::vector<FiniteGroup>& classes) {
    fs::create_directories(root / dir);
    std::vector<int> hits(classes.size(), 0);
    for (const auto& [file, text] : named) {
      const FiniteGroup g = load(text);
      std::optional<std::size_t> match;
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (isomorphic(*g.cayley(), *classes[i].cayley())) {
          if (match) throw Error(std::string(file) + " matches two classes");
          match = i;
        }
      if (!match) throw Error(std::string(file) + " matches no class");
      ++hits[*match];
      write(root / dir / (std::string(file) + ".pc2"), text);
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
      throw Error(std::string("hand-made presentations in ") + dir + " do not cover every class exactly once");
  };
  write_named("o8", kOrder8, levels[3]);
  write_named("o16", kOrder16, levels[4]);

  fs::create_directories(root / "o32");
  for (std::size_t i = 0; i < levels[5].size(); ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "32_%02zu", i + 1);
    PcPresentation p = levels[5][i].presentation();
    p.name = name;
    write(root / "o32" / (std::string(name) + ".pc2"), to_text(p));
  }
  std::cerr << "corpus written to " << root << "\n";
  return 0;
}
