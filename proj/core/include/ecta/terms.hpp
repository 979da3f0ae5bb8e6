#pragma once

// Ranked symbols and interned ground terms, plus constraint satisfaction
// checks on terms. Terms are the objects automata denote; interning keeps
// the brute-force denotation oracle cheap to compare against.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecta/paths.hpp"

namespace ecta {

using SymbolId = uint32_t;
using TermId = uint32_t;

struct Symbol {
  std::string name;
  uint32_t arity;
};

class SymbolTable {
 public:
  // Interns a symbol; faults if the name exists with a different arity.
  SymbolId intern(const std::string& name, uint32_t arity);
  std::optional<SymbolId> lookup(const std::string& name) const;
  const Symbol& operator[](SymbolId s) const { return symbols_[s]; }
  size_t size() const { return symbols_.size(); }

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> by_name_;
};

class TermStore {
 public:
  explicit TermStore(SymbolTable& syms) : syms_(syms) {}

  TermId mk(SymbolId s, std::span<const TermId> children);
  TermId mk(SymbolId s, std::initializer_list<TermId> children) {
    return mk(s, std::span<const TermId>(children.begin(), children.size()));
  }

  SymbolId symbol(TermId t) const { return terms_[t].sym; }
  std::span<const TermId> children(TermId t) const;
  const SymbolTable& symbols() const { return syms_; }
  SymbolTable& symbols() { return syms_; }

  uint32_t depth(TermId t) const { return terms_[t].depth; }  // leaf = 1
  uint64_t size(TermId t) const { return terms_[t].size; }    // node count

 private:
  struct Rec {
    SymbolId sym;
    uint32_t depth;
    uint64_t size;
    uint32_t child_begin, child_count;
  };
  struct Key {
    SymbolId sym;
    std::vector<TermId> children;
    bool operator==(const Key& o) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };
  SymbolTable& syms_;
  std::vector<Rec> terms_;
  std::vector<TermId> child_pool_;
  std::unordered_map<Key, TermId, KeyHash> interned_;
};

// Subterm of t at path p; nullopt when an index is out of bounds.
std::optional<TermId> subterm_at(const TermStore& ts, TermId t, const Path& p);

// True iff all paths of c resolve in t to one identical subterm; the
// witness subterm is returned alongside.
std::pair<bool, std::optional<TermId>> pec_satisfied(const TermStore& ts, const Pec& c, TermId t);

bool pcs_satisfied(const TermStore& ts, const Pcs& c, TermId t);

std::string term_to_string(const TermStore& ts, TermId t);
// Parses "sym(child,child)" notation; nullary symbols may omit "()".
std::optional<TermId> term_parse(TermStore& ts, const std::string& text);

// Test support: builds a term satisfying a consistent PCS (nullopt when the
// PCS is inconsistent). Fabricates fresh symbols "w<arity>" and leaf "z".
std::optional<TermId> pcs_witness_term(TermStore& ts, const Pcs& c);

}  // namespace ecta
