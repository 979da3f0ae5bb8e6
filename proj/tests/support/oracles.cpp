#include "support/oracles.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

namespace testsupport {

std::set<uint32_t> truth_table_models(const ecta::Cnf& cnf) {
  if (cnf.num_vars > 20) throw std::runtime_error("truth table limited to 20 variables");
  std::set<uint32_t> out;
  for (uint32_t mask = 0;; ++mask) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      bool sat = false;
      for (int lit : clause) {
        uint32_t v = static_cast<uint32_t>(lit < 0 ? -lit : lit) - 1;
        bool val = (mask >> v) & 1;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(mask);
    if (mask + 1 == (uint32_t{1} << cnf.num_vars)) break;
  }
  return out;
}

std::set<uint32_t> expand_models(const std::vector<ecta::SatModel>& models,
                                 uint32_t num_vars) {
  std::set<uint32_t> out;
  for (const ecta::SatModel& m : models) {
    std::vector<uint32_t> masks{0};
    for (uint32_t j = 0; j < num_vars; ++j) {
      switch (m.vals.at(j)) {
        case ecta::TruthVal::True:
          for (uint32_t& mask : masks) mask |= uint32_t{1} << j;
          break;
        case ecta::TruthVal::False:
          break;
        case ecta::TruthVal::Star: {
          size_t n = masks.size();
          for (size_t k = 0; k < n; ++k) masks.push_back(masks[k] | (uint32_t{1} << j));
          break;
        }
      }
    }
    out.insert(masks.begin(), masks.end());
  }
  return out;
}

ecta::Cnf random_cnf(std::mt19937_64& rng, uint32_t max_vars, uint32_t max_clauses) {
  ecta::Cnf cnf;
  cnf.num_vars = std::uniform_int_distribution<uint32_t>(1, max_vars)(rng);
  uint32_t n_clauses = std::uniform_int_distribution<uint32_t>(1, max_clauses)(rng);
  for (uint32_t i = 0; i < n_clauses; ++i) {
    uint32_t width = std::uniform_int_distribution<uint32_t>(1, 3)(rng);
    std::vector<int> clause;
    for (uint32_t j = 0; j < width; ++j) {
      int var = std::uniform_int_distribution<int>(1, static_cast<int>(cnf.num_vars))(rng);
      int lit = std::bernoulli_distribution(0.5)(rng) ? var : -var;
      bool dup = false;
      for (int l : clause) dup |= l == lit;
      if (!dup) clause.push_back(lit);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

// ---- algorithm-W checker ----------------------------------------------------

namespace {

struct OTy {
  bool is_var;
  std::string head;  // variable name or constructor name
  std::vector<OTy> args;
};

OTy ovar(std::string name) { return OTy{true, std::move(name), {}}; }
OTy ocon(std::string head, std::vector<OTy> args = {}) {
  return OTy{false, std::move(head), std::move(args)};
}

using Subst = std::map<std::string, OTy>;

OTy apply_subst(const Subst& s, const OTy& t) {
  if (t.is_var) {
    auto it = s.find(t.head);
    return it == s.end() ? t : apply_subst(s, it->second);
  }
  OTy out{false, t.head, {}};
  out.args.reserve(t.args.size());
  for (const OTy& a : t.args) out.args.push_back(apply_subst(s, a));
  return out;
}

// s2 after s1
Subst compose(const Subst& s2, const Subst& s1) {
  Subst out = s2;
  for (const auto& [v, t] : s1) out[v] = apply_subst(s2, t);
  return out;
}

bool occurs(const std::string& v, const OTy& t) {
  if (t.is_var) return t.head == v;
  for (const OTy& a : t.args) {
    if (occurs(v, a)) return true;
  }
  return false;
}

std::optional<Subst> unify(const OTy& a0, const OTy& b0) {
  OTy a = a0, b = b0;
  if (a.is_var) {
    if (b.is_var && b.head == a.head) return Subst{};
    if (occurs(a.head, b)) return std::nullopt;
    return Subst{{a.head, b}};
  }
  if (b.is_var) return unify(b, a);
  if (a.head != b.head || a.args.size() != b.args.size()) return std::nullopt;
  Subst s;
  for (size_t i = 0; i < a.args.size(); ++i) {
    auto si = unify(apply_subst(s, a.args[i]), apply_subst(s, b.args[i]));
    if (!si) return std::nullopt;
    s = compose(*si, s);
  }
  return s;
}

OTy from_type(const ecta::TypePtr& t, const std::string& suffix) {
  switch (t->kind) {
    case ecta::TypeExpr::Kind::Var:
      return ovar(t->name + suffix);
    case ecta::TypeExpr::Kind::Con: {
      std::vector<OTy> args;
      for (const ecta::TypePtr& a : t->args) args.push_back(from_type(a, suffix));
      return ocon(t->name, std::move(args));
    }
    case ecta::TypeExpr::Kind::Arrow:
      return ocon("->", {from_type(t->args[0], suffix), from_type(t->args[1], suffix)});
  }
  throw std::logic_error("unreachable");
}

struct Node {
  std::string leaf;
  std::vector<Node> apps;
};

struct Parser {
  const std::string& text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  std::optional<Node> atom() {
    skip();
    if (pos >= text.size() || text[pos] == ')') return std::nullopt;
    if (text[pos] == '(') {
      ++pos;
      auto inner = spine();
      skip();
      if (!inner || pos >= text.size() || text[pos] != ')') return std::nullopt;
      ++pos;
      return inner;
    }
    size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '(' && text[pos] != ')') ++pos;
    return Node{text.substr(start, pos - start), {}};
  }

  std::optional<Node> spine() {
    auto head = atom();
    if (!head) return std::nullopt;
    while (true) {
      size_t save = pos;
      auto arg = atom();
      if (!arg) {
        pos = save;
        return head;
      }
      head->apps.push_back(std::move(*arg));
    }
  }
};

}  // namespace

bool oracle_type_checks(const std::string& term, const ecta::SynthesisProblem& prob) {
  Parser parser{term};
  auto tree = parser.spine();
  parser.skip();
  if (!tree || parser.pos != term.size()) return false;

  std::map<std::string, OTy> inputs;
  ecta::TypePtr cur = prob.query;
  uint32_t idx = 0;
  while (cur->kind == ecta::TypeExpr::Kind::Arrow) {
    std::string name = idx < prob.input_names.size() ? prob.input_names[idx]
                                                     : "arg" + std::to_string(idx);
    inputs.emplace(name, from_type(ecta::skolemize(cur->args[0]), ""));
    cur = cur->args[1];
    ++idx;
  }
  OTy goal = from_type(ecta::skolemize(cur), "");

  uint32_t fresh_ctr = 0;
  Subst s;

  // W for an application spine; leaves are closed, so no context threading
  std::function<std::optional<OTy>(const Node&)> infer =
      [&](const Node& n) -> std::optional<OTy> {
    OTy head;
    if (auto it = inputs.find(n.leaf); it != inputs.end()) {
      head = it->second;
    } else {
      const ecta::Component* comp = nullptr;
      for (const ecta::Component& c : prob.library) {
        if (c.name == n.leaf) comp = &c;
      }
      if (!comp) return std::nullopt;
      head = from_type(comp->scheme, "#" + std::to_string(fresh_ctr++));
    }
    for (const Node& argn : n.apps) {
      auto argt = infer(argn);
      if (!argt) return std::nullopt;
      OTy beta = ovar("%" + std::to_string(fresh_ctr++));
      auto si = unify(apply_subst(s, head), ocon("->", {apply_subst(s, *argt), beta}));
      if (!si) return std::nullopt;
      s = compose(*si, s);
      head = apply_subst(s, beta);
    }
    return apply_subst(s, head);
  };

  auto ty = infer(*tree);
  if (!ty) return false;
  return unify(apply_subst(s, *ty), goal).has_value();
}

}  // namespace testsupport
