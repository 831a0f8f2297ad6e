#include "unitwreath/pcgroup.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "unitwreath/errors.hpp"

namespace unitwreath {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || s == "1" || s == "=") return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string join_word(const PcPresentation& pres, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += pres.generators[static_cast<std::size_t>(w[k])];
  }
  return out;
}

}  // namespace

PcPresentation PcPresentation::free_relations(std::string name, std::vector<std::string> generators) {
  PcPresentation p;
  p.name = std::move(name);
  p.generators = std::move(generators);
  const auto n = p.generators.size();
  p.powers.assign(n, Word{});
  p.conjugates.assign(n, std::vector<Word>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.conjugates[i][j] = Word{static_cast<int>(j)};
  return p;
}

PcPresentation parse_presentation(std::string_view text) {
  std::optional<std::string> name;
  std::optional<PcPresentation> pres;
  std::unordered_map<std::string, int> index;
  std::vector<bool> seen_pow;
  std::vector<std::vector<bool>> seen_conj;

  auto lookup = [&](const std::string& tok, int line) {
    auto it = index.find(tok);
    if (it == index.end()) throw ParseError(line, "unknown generator '" + tok + "'");
    return it->second;
  };
  auto parse_word = [&](const std::vector<std::string>& toks, std::size_t from, int line) {
    Word w;
    if (from >= toks.size()) throw ParseError(line, "missing word after '='");
    if (toks.size() - from == 1 && toks[from] == "1") return w;
    for (std::size_t k = from; k < toks.size(); ++k) {
      if (toks[k] == "1") throw ParseError(line, "'1' may only appear as the whole word");
      w.push_back(lookup(toks[k], line));
    }
    return w;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    if (kw == "group") {
      if (toks.size() != 2) throw ParseError(line, "expected 'group <name>'");
      if (name) throw ParseError(line, "duplicate 'group' line");
      name = toks[1];
    } else if (kw == "gens") {
      if (!name) throw ParseError(line, "'gens' before 'group'");
      if (pres) throw ParseError(line, "duplicate 'gens' line");
      std::vector<std::string> gens(toks.begin() + 1, toks.end());
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!valid_name(gens[k])) throw ParseError(line, "invalid generator name '" + gens[k] + "'");
        if (!index.emplace(gens[k], static_cast<int>(k)).second)
          throw ParseError(line, "duplicate generator '" + gens[k] + "'");
      }
      pres = PcPresentation::free_relations(*name, std::move(gens));
      seen_pow.assign(pres->generators.size(), false);
      seen_conj.assign(pres->generators.size(), std::vector<bool>(pres->generators.size(), false));
    } else if (kw == "pow") {
      if (!pres) throw ParseError(line, "relation before 'gens'");
      if (toks.size() < 4 || toks[2] != "=") throw ParseError(line, "expected 'pow <g> = <word>'");
      const int i = lookup(toks[1], line);
      if (seen_pow[i]) throw ParseError(line, "duplicate power relation for '" + toks[1] + "'");
      seen_pow[i] = true;
      pres->powers[i] = parse_word(toks, 3, line);
    } else if (kw == "conj") {
      if (!pres) throw ParseError(line, "relation before 'gens'");
      if (toks.size() < 5 || toks[3] != "=") throw ParseError(line, "expected 'conj <gj> <gi> = <word>'");
      const int j = lookup(toks[1], line);
      const int i = lookup(toks[2], line);
      if (i >= j)
        throw ConstraintError("line " + std::to_string(line) + ": conj " + toks[1] + " " + toks[2] +
                              " requires the conjugating generator to come first in 'gens'");
      if (seen_conj[i][j]) throw ParseError(line, "duplicate conjugation relation");
      seen_conj[i][j] = true;
      pres->conjugates[i][j] = parse_word(toks, 4, line);
    } else {
      throw ParseError(line, "unknown keyword '" + kw + "'");
    }
  }
  if (!name) throw ParseError(line, "missing 'group' line");
  if (!pres) throw ParseError(line, "missing 'gens' line");
  check_constraints(*pres);
  return *std::move(pres);
}

void check_constraints(const PcPresentation& pres) {
  const int n = pres.size();
  auto in_range = [&](int x) { return x >= 0 && x < n; };
  for (int i = 0; i < n; ++i) {
    for (int x : pres.powers[i]) {
      if (!in_range(x) || x <= i)
        throw ConstraintError("power word of '" + pres.generators[i] +
                              "' must use only later generators");
    }
    for (int j = i + 1; j < n; ++j) {
      const Word& w = pres.conjugates[i][j];
      const std::string rel = pres.generators[j] + "^" + pres.generators[i];
      if (w.empty()) throw ConstraintError("conjugation word for " + rel + " is empty");
      for (int x : w)
        if (!in_range(x) || x <= i)
          throw ConstraintError("conjugation word for " + rel + " must use only generators after '" +
                                pres.generators[i] + "'");
    }
  }
}

std::string to_text(const PcPresentation& pres) {
  std::ostringstream out;
  out << "group " << pres.name << "\ngens";
  for (const auto& g : pres.generators) out << ' ' << g;
  out << '\n';
  const int n = pres.size();
  for (int i = 0; i < n; ++i)
    if (!pres.powers[i].empty()) out << "pow " << pres.generators[i] << " = " << join_word(pres, pres.powers[i]) << '\n';
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pres.conjugates[i][j] != Word{j})
        out << "conj " << pres.generators[j] << ' ' << pres.generators[i] << " = "
            << join_word(pres, pres.conjugates[i][j]) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

std::uint32_t CayleyTable::element_order(std::size_t x) const {
  std::uint32_t ord = 1;
  std::size_t y = x;
  while (y != 0) {
    y = (*this)(y, x);
    ++ord;
    if (ord > order_) return 0;
  }
  return ord;
}

std::uint32_t CayleyTable::inverse(std::size_t x) const {
  for (std::size_t y = 0; y < order_; ++y)
    if ((*this)(x, y) == 0) return static_cast<std::uint32_t>(y);
  return 0;
}

bool CayleyTable::is_abelian() const {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if ((*this)(x, y) != (*this)(y, x)) return false;
  return true;
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(PcPresentation pres) : pres_(std::move(pres)), n_(pres_.size()) {
  if (n_ > kMaxGenerators)
    throw ConstraintError("presentation has " + std::to_string(n_) + " generators; at most " +
                          std::to_string(kMaxGenerators) + " are supported");
  if (pres_.powers.size() != static_cast<std::size_t>(n_) ||
      pres_.conjugates.size() != static_cast<std::size_t>(n_))
    throw ConstraintError("relation tables do not match the generator count");
  check_constraints(pres_);
  auto table = validated_table();
  if (order() <= kCayleyLimit) cayley_.emplace(order(), std::move(table));
}

void FiniteGroup::collect_generator(std::uint32_t& bits, int j) const {
  // x = P g_j^e T with T over g_{j+1..n}; T g_j = g_j T^{g_j}.
  const std::uint32_t mask = std::uint32_t{1} << (n_ - 1 - j);
  const std::uint32_t tail = bits & (mask - 1);
  bits &= ~(mask - 1);
  if (bits & mask) {
    bits &= ~mask;
    for (int l : pres_.powers[j]) collect_generator(bits, l);
  } else {
    bits |= mask;
  }
  for (int k = j + 1; k < n_; ++k) {
    if (tail & (std::uint32_t{1} << (n_ - 1 - k))) {
      for (int l : pres_.conjugates[j][k]) collect_generator(bits, l);
    }
  }
}

GroupElement FiniteGroup::collect(GroupElement x, GroupElement y) const {
  std::uint32_t bits = x.bits;
  for (int i = 0; i < n_; ++i)
    if (y.bits & (std::uint32_t{1} << (n_ - 1 - i))) collect_generator(bits, i);
  return {bits};
}

GroupElement FiniteGroup::evaluate(const Word& word) const {
  std::uint32_t bits = 0;
  for (int l : word) collect_generator(bits, l);
  return {bits};
}

std::vector<std::uint32_t> FiniteGroup::validated_table() const {
  const std::size_t order = this->order();
  std::vector<std::uint32_t> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      table[x * order + y] = collect(element(x), element(y)).bits;

  for (int i = 0; i < n_; ++i) {
    const std::size_t g = generator(i).bits;
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        const auto left = table[table[x * order + y] * order + g];
        const auto right = table[x * order + table[y * order + g]];
        if (left != right) {
          throw InconsistencyError("presentation '" + pres_.name +
                                   "' is inconsistent: collection is not associative on (" +
                                   format(element(x)) + ")(" + format(element(y)) + ")(" +
                                   pres_.generators[i] + "), so the realized group has order below 2^" +
                                   std::to_string(n_));
        }
      }
    }
  }
  for (std::size_t x = 0; x < order; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < order && !found; ++y) found = table[x * order + y] == 0;
    if (!found)
      throw InconsistencyError("presentation '" + pres_.name + "' is inconsistent: " + format(element(x)) +
                               " has no inverse under collection");
  }
  return table;
}

std::vector<int> FiniteGroup::exponents(GroupElement x) const {
  std::vector<int> e(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) e[i] = (x.bits >> (n_ - 1 - i)) & 1u;
  return e;
}

std::vector<GroupElement> FiniteGroup::elements() const {
  std::vector<GroupElement> out(order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = element(i);
  return out;
}

GroupElement FiniteGroup::multiply(GroupElement x, GroupElement y) const {
  if (cayley_) return {(*cayley_)(x.bits, y.bits)};
  return collect(x, y);
}

GroupElement FiniteGroup::power(GroupElement x, std::uint64_t e) const {
  GroupElement result = identity();
  GroupElement base = x;
  while (e) {
    if (e & 1u) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FiniteGroup::element_order(GroupElement x) const {
  std::uint32_t ord = 1;
  while (x != identity()) {
    x = multiply(x, x);
    ord *= 2;
  }
  return ord;
}

GroupElement FiniteGroup::inverse(GroupElement x) const {
  return power(x, element_order(x) - 1);
}

GroupElement FiniteGroup::conjugate(GroupElement x, GroupElement g) const {
  return multiply(multiply(inverse(g), x), g);
}

GroupElement FiniteGroup::commutator(GroupElement x, GroupElement y) const {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (multiply(generator(i), generator(j)) != multiply(generator(j), generator(i))) return false;
  return true;
}

std::string FiniteGroup::format(GroupElement x) const {
  if (x == identity()) return "1";
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (x.bits & (std::uint32_t{1} << (n_ - 1 - i))) {
      if (!out.empty()) out += "·";
      out += pres_.generators[i];
    }
  }
  return out;
}

std::optional<GroupElement> FiniteGroup::parse_word(std::string_view text) const {
  std::string normalized;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text.compare(k, 2, "·") == 0) {
      normalized += ' ';
      ++k;
    } else if (text[k] == '*' || text[k] == '.') {
      normalized += ' ';
    } else {
      normalized += text[k];
    }
  }
  Word w;
  for (const auto& tok : split_ws(normalized)) {
    if (tok == "1") continue;
    auto it = std::find(pres_.generators.begin(), pres_.generators.end(), tok);
    if (it == pres_.generators.end()) return std::nullopt;
    w.push_back(static_cast<int>(it - pres_.generators.begin()));
  }
  return evaluate(w);
}

FiniteGroup load(std::string_view text) { return FiniteGroup(parse_presentation(text)); }

FiniteGroup load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(GroupElement x) const {
  return std::binary_search(elements.begin(), elements.end(), x.bits);
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const GroupElement> gens) {
  std::vector<bool> seen(g.order(), false);
  std::deque<GroupElement> queue{g.identity()};
  seen[0] = true;
  Subgroup out;
  while (!queue.empty()) {
    const GroupElement x = queue.front();
    queue.pop_front();
    out.elements.push_back(x.bits);
    for (const auto& s : gens) {
      const GroupElement y = g.multiply(s, x);
      if (!seen[y.bits]) {
        seen[y.bits] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.gens.assign(gens.begin(), gens.end());
  return out;
}

namespace {

// Greedy generating set for a known subgroup, scanning in canonical order.
std::vector<GroupElement> greedy_generators(const FiniteGroup& g, const std::vector<std::uint32_t>& elements) {
  std::vector<GroupElement> gens;
  Subgroup current = subgroup_closure(g, gens);
  for (auto idx : elements) {
    if (current.size() == elements.size()) break;
    const GroupElement x = g.element(idx);
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = subgroup_closure(g, gens);
  }
  return gens;
}

}  // namespace

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<GroupElement> gens;
  const int n = g.generator_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto c = g.commutator(g.generator(i), g.generator(j));
      if (c != g.identity() && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
  Subgroup s = subgroup_closure(g, gens);
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t k = 0; k < gens.size() && !grown; ++k)
      for (int i = 0; i < n && !grown; ++i) {
        const auto c = g.conjugate(gens[k], g.generator(i));
        if (!s.contains(c)) {
          gens.push_back(c);
          s = subgroup_closure(g, gens);
          grown = true;
        }
      }
  }
  s.gens = greedy_generators(g, s.elements);
  return s;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup s;
  for (const auto& x : g.elements()) {
    bool central = true;
    for (int i = 0; i < g.generator_count() && central; ++i)
      central = g.multiply(x, g.generator(i)) == g.multiply(g.generator(i), x);
    if (central) s.elements.push_back(x.bits);
  }
  s.gens = greedy_generators(g, s.elements);
  return s;
}

std::optional<GroupElement> cyclic_generator(const FiniteGroup& g, const Subgroup& s) {
  for (auto idx : s.elements)
    if (g.element_order(g.element(idx)) == s.size()) return g.element(idx);
  return std::nullopt;
}

}  // namespace unitwreath
