#pragma once

// Paths into terms, path equivalence classes (PECs), and path constraint
// sets (PCSs): the constraint vocabulary attached to automaton transitions.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ecta {

// A path is a sequence of child indices; the empty path addresses the root.
using Path = std::vector<uint32_t>;

inline Path path_root() { return {}; }

std::string path_to_string(const Path& p);
// Parses "0.1.2" or "e"/"" for the root path. Returns nullopt on junk.
std::optional<Path> path_parse(const std::string& s);

// True iff a is a (non-strict) prefix of b.
bool path_is_prefix(const Path& a, const Path& b);

// A set of paths constrained to address one identical subterm.
// Canonical form: sorted lexicographically, duplicates removed.
struct Pec {
  std::vector<Path> paths;

  Pec() = default;
  explicit Pec(std::vector<Path> ps);

  bool operator==(const Pec& o) const { return paths == o.paths; }
  bool operator<(const Pec& o) const { return paths < o.paths; }
  bool empty() const { return paths.empty(); }
  size_t size() const { return paths.size(); }
  bool contains(const Path& p) const;
};

// No path in the class is a proper prefix of another.
bool pec_prefix_free(const Pec& c);

std::string pec_to_string(const Pec& c);

// A set of disjoint PECs. Canonical form: each class canonical, classes
// sorted (lexicographically by their path lists, i.e. by smallest member).
struct Pcs {
  std::vector<Pec> classes;

  bool operator==(const Pcs& o) const { return classes == o.classes; }
  bool operator<(const Pcs& o) const { return classes < o.classes; }
  bool empty() const { return classes.empty(); }
  size_t size() const { return classes.size(); }
};

// Merges classes that share a path (transitively) until all are disjoint.
Pcs pcs_normalize(std::vector<Pec> classes);

std::string pcs_to_string(const Pcs& c);
// Parses "{0.0=1.0; 0=1}"; empty set is "{}".
std::optional<Pcs> pcs_parse(const std::string& s);

size_t path_hash(const Path& p);

struct PathHasher {
  size_t operator()(const Path& p) const { return path_hash(p); }
};

}  // namespace ecta
