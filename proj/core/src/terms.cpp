#include "ecta/terms.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "ecta/egraph.hpp"

namespace ecta {

SymbolId SymbolTable::intern(const std::string& name, uint32_t arity) {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) {
    if (symbols_[it->second].arity != arity) {
      throw std::runtime_error("symbol '" + name + "' reused with arity " +
                               std::to_string(arity) + " (was " +
                               std::to_string(symbols_[it->second].arity) + ")");
    }
    return it->second;
  }
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back(Symbol{name, arity});
  by_name_.emplace(name, id);
  return id;
}

std::optional<SymbolId> SymbolTable::lookup(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

size_t TermStore::KeyHash::operator()(const Key& k) const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(k.sym);
  for (TermId c : k.children) mix(c);
  return static_cast<size_t>(h);
}

TermId TermStore::mk(SymbolId s, std::span<const TermId> children) {
  if (children.size() != syms_[s].arity) {
    throw std::runtime_error("term for '" + syms_[s].name + "' given " +
                             std::to_string(children.size()) + " children, arity is " +
                             std::to_string(syms_[s].arity));
  }
  Key key{s, std::vector<TermId>(children.begin(), children.end())};
  auto it = interned_.find(key);
  if (it != interned_.end()) return it->second;

  uint32_t depth = 1;
  uint64_t size = 1;
  for (TermId c : children) {
    depth = std::max(depth, terms_[c].depth + 1);
    size += terms_[c].size;
  }
  Rec rec;
  rec.sym = s;
  rec.depth = depth;
  rec.size = size;
  rec.child_begin = static_cast<uint32_t>(child_pool_.size());
  rec.child_count = static_cast<uint32_t>(children.size());
  child_pool_.insert(child_pool_.end(), children.begin(), children.end());
  TermId id = static_cast<TermId>(terms_.size());
  terms_.push_back(rec);
  interned_.emplace(std::move(key), id);
  return id;
}

std::span<const TermId> TermStore::children(TermId t) const {
  const Rec& r = terms_[t];
  return std::span<const TermId>(child_pool_.data() + r.child_begin, r.child_count);
}

std::optional<TermId> subterm_at(const TermStore& ts, TermId t, const Path& p) {
  TermId cur = t;
  for (uint32_t idx : p) {
    auto kids = ts.children(cur);
    if (idx >= kids.size()) return std::nullopt;
    cur = kids[idx];
  }
  return cur;
}

std::pair<bool, std::optional<TermId>> pec_satisfied(const TermStore& ts, const Pec& c,
                                                     TermId t) {
  std::optional<TermId> witness;
  for (const Path& p : c.paths) {
    auto sub = subterm_at(ts, t, p);
    if (!sub) return {false, std::nullopt};
    if (!witness) {
      witness = sub;
    } else if (*witness != *sub) {
      return {false, std::nullopt};
    }
  }
  return {true, witness};
}

bool pcs_satisfied(const TermStore& ts, const Pcs& c, TermId t) {
  for (const Pec& pec : c.classes) {
    if (!pec_satisfied(ts, pec, t).first) return false;
  }
  return true;
}

std::string term_to_string(const TermStore& ts, TermId t) {
  const Symbol& sym = ts.symbols()[ts.symbol(t)];
  std::string out = sym.name;
  auto kids = ts.children(t);
  if (!kids.empty()) {
    out += '(';
    for (size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ',';
      out += term_to_string(ts, kids[i]);
    }
    out += ')';
  }
  return out;
}

namespace {

struct TermParser {
  TermStore& ts;
  const std::string& text;
  size_t pos = 0;
  bool failed = false;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::optional<TermId> parse() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '+' || text[pos] == '-' ||
                                 text[pos] == '*' || text[pos] == '\'')) {
      ++pos;
    }
    if (pos == start) return std::nullopt;
    std::string name = text.substr(start, pos - start);
    std::vector<TermId> kids;
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
      } else {
        while (true) {
          auto kid = parse();
          if (!kid) return std::nullopt;
          kids.push_back(*kid);
          skip_ws();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
          }
          return std::nullopt;
        }
      }
    }
    auto existing = ts.symbols().lookup(name);
    if (existing && ts.symbols()[*existing].arity != kids.size()) return std::nullopt;
    SymbolId sym = ts.symbols().intern(name, static_cast<uint32_t>(kids.size()));
    return ts.mk(sym, kids);
  }
};

}  // namespace

std::optional<TermId> term_parse(TermStore& ts, const std::string& text) {
  TermParser p{ts, text};
  auto t = p.parse();
  if (!t) return std::nullopt;
  p.skip_ws();
  if (p.pos != text.size()) return std::nullopt;
  return t;
}

std::optional<TermId> pcs_witness_term(TermStore& ts, const Pcs& c) {
  PathEGraph eg(c);
  if (!eg.consistent()) return std::nullopt;

  // One term per equivalence class, built over the frozen class graph.
  // Consistency means the graph is acyclic, so plain recursion terminates.
  std::vector<std::optional<TermId>> memo(eg.class_count());
  std::function<TermId(uint32_t)> build = [&](uint32_t cls) -> TermId {
    if (memo[cls]) return *memo[cls];
    const auto& kids = eg.class_children(cls);
    TermId result;
    if (kids.empty()) {
      result = ts.mk(ts.symbols().intern("z", 0), {});
    } else {
      uint32_t arity = kids.rbegin()->first + 1;
      TermId filler = ts.mk(ts.symbols().intern("z", 0), {});
      std::vector<TermId> children(arity, filler);
      for (const auto& [idx, child_cls] : kids) children[idx] = build(child_cls);
      SymbolId sym = ts.symbols().intern("w" + std::to_string(arity), arity);
      result = ts.mk(sym, children);
    }
    memo[cls] = result;
    return result;
  };
  auto [root_cls, rest] = eg.resolve(Path{});
  (void)rest;
  return build(root_cls);
}

}  // namespace ecta
