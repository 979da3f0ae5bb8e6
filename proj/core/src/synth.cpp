#include "ecta/synth.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <cstring>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ecta {

TypePtr TypeExpr::con(std::string name, std::vector<TypePtr> args) {
  auto t = std::make_shared<TypeExpr>();
  t->kind = Kind::Con;
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

TypePtr TypeExpr::var(std::string name) {
  auto t = std::make_shared<TypeExpr>();
  t->kind = Kind::Var;
  t->name = std::move(name);
  return t;
}

TypePtr TypeExpr::arrow(TypePtr in, TypePtr out) {
  auto t = std::make_shared<TypeExpr>();
  t->kind = Kind::Arrow;
  t->args = {std::move(in), std::move(out)};
  return t;
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i) {
    if (!type_equal(a->args[i], b->args[i])) return false;
  }
  return true;
}

namespace {

void type_str(const TypePtr& t, std::string& out, bool atom_pos) {
  switch (t->kind) {
    case TypeExpr::Kind::Var:
      out += t->name;
      break;
    case TypeExpr::Kind::Con: {
      bool parens = atom_pos && !t->args.empty();
      if (t->name == "List" && t->args.size() == 1) {
        out += '[';
        type_str(t->args[0], out, false);
        out += ']';
        return;
      }
      if (t->name == "Pair" && t->args.size() == 2) {
        out += '(';
        type_str(t->args[0], out, false);
        out += ", ";
        type_str(t->args[1], out, false);
        out += ')';
        return;
      }
      if (parens) out += '(';
      out += t->name;
      for (const TypePtr& a : t->args) {
        out += ' ';
        type_str(a, out, true);
      }
      if (parens) out += ')';
      break;
    }
    case TypeExpr::Kind::Arrow: {
      if (atom_pos) out += '(';
      type_str(t->args[0], out, t->args[0]->kind == TypeExpr::Kind::Arrow);
      out += " -> ";
      type_str(t->args[1], out, false);
      if (atom_pos) out += ')';
      break;
    }
  }
}

struct TypeParser {
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("type syntax: " + msg + " at offset " + std::to_string(pos) +
                             " in \"" + text + "\"");
  }

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool lit(const char* s) {
    skip();
    size_t n = std::strlen(s);
    if (text.compare(pos, n, s) == 0) {
      pos += n;
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip();
    return pos < text.size() && text[pos] == c;
  }

  std::string name() {
    skip();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '\'')) {
      ++pos;
    }
    if (pos == start) fail("expected a name");
    return text.substr(start, pos - start);
  }

  TypePtr type() {
    TypePtr lhs = btype();
    if (lit("->")) return TypeExpr::arrow(std::move(lhs), type());
    return lhs;
  }

  TypePtr btype() {
    skip();
    if (pos >= text.size()) fail("expected a type");
    char c = text[pos];
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string head = name();
      std::vector<TypePtr> args;
      while (atom_ahead()) args.push_back(atom());
      return TypeExpr::con(std::move(head), std::move(args));
    }
    TypePtr a = atom();
    if (atom_ahead()) fail("type variables cannot take arguments");
    return a;
  }

  bool atom_ahead() {
    skip();
    if (pos >= text.size()) return false;
    char c = text[pos];
    if (text.compare(pos, 2, "->") == 0 || text.compare(pos, 2, "=>") == 0) return false;
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '_';
  }

  TypePtr atom() {
    skip();
    if (pos >= text.size()) fail("expected a type");
    char c = text[pos];
    if (c == '[') {
      ++pos;
      TypePtr inner = type();
      skip();
      if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
      ++pos;
      return TypeExpr::con("List", {std::move(inner)});
    }
    if (c == '(') {
      ++pos;
      TypePtr first = type();
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        TypePtr second = type();
        skip();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        return TypeExpr::con("Pair", {std::move(first), std::move(second)});
      }
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return first;
    }
    if (std::isupper(static_cast<unsigned char>(c))) return TypeExpr::con(name());
    if (std::islower(static_cast<unsigned char>(c)) || c == '_') return TypeExpr::var(name());
    fail("unexpected character");
  }

  TypePtr run() {
    // "Ctx a =>" prefixes are accepted and discarded
    size_t ctx = text.find("=>");
    if (ctx != std::string::npos) pos = ctx + 2;
    TypePtr t = type();
    skip();
    if (pos != text.size()) fail("trailing input");
    return t;
  }
};

}  // namespace

TypePtr parse_type(const std::string& text) {
  TypeParser p{text};
  return p.run();
}

std::string type_to_string(const TypePtr& t) {
  std::string out;
  type_str(t, out, false);
  return out;
}

std::vector<Component> parse_library(const std::string& text) {
  std::vector<Component> lib;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t dash = line.find("--");
    if (dash != std::string::npos) line.erase(dash);
    size_t sep = line.find("::");
    if (sep == std::string::npos) {
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (!blank) {
        throw std::runtime_error("library line " + std::to_string(lineno) + ": expected '::'");
      }
      continue;
    }
    std::string name = line.substr(0, sep);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t\r") + 1);
    if (name.empty()) {
      throw std::runtime_error("library line " + std::to_string(lineno) + ": missing name");
    }
    for (const Component& c : lib) {
      if (c.name == name) {
        throw std::runtime_error("library line " + std::to_string(lineno) + ": duplicate '" +
                                 name + "'");
      }
    }
    lib.push_back(Component{std::move(name), parse_type(line.substr(sep + 2))});
  }
  return lib;
}

namespace {

void collect_cons(const TypePtr& t, std::map<std::string, uint32_t>& cons) {
  switch (t->kind) {
    case TypeExpr::Kind::Con: {
      auto [it, fresh] = cons.emplace(t->name, static_cast<uint32_t>(t->args.size()));
      if (!fresh && it->second != t->args.size()) {
        throw std::runtime_error("type constructor " + t->name + " used at arities " +
                                 std::to_string(it->second) + " and " +
                                 std::to_string(t->args.size()));
      }
      for (const TypePtr& a : t->args) collect_cons(a, cons);
      break;
    }
    case TypeExpr::Kind::Arrow:
      collect_cons(t->args[0], cons);
      collect_cons(t->args[1], cons);
      break;
    case TypeExpr::Kind::Var:
      break;
  }
}

void collect_skolems(const TypePtr& t, std::map<std::string, uint32_t>& cons) {
  switch (t->kind) {
    case TypeExpr::Kind::Var:
      cons.emplace(t->name, 0);
      break;
    case TypeExpr::Kind::Con:
    case TypeExpr::Kind::Arrow:
      for (const TypePtr& a : t->args) collect_skolems(a, cons);
      break;
  }
}

}  // namespace

TypeUniverse collect_universe(const SynthesisProblem& p) {
  TypeUniverse u;
  for (const Component& c : p.library) collect_cons(c.scheme, u.constructors);
  collect_cons(skolemize(p.query), u.constructors);
  return u;
}

TypePtr skolemize(const TypePtr& t) {
  switch (t->kind) {
    case TypeExpr::Kind::Var:
      return TypeExpr::con(t->name);
    case TypeExpr::Kind::Con: {
      std::vector<TypePtr> args;
      args.reserve(t->args.size());
      for (const TypePtr& a : t->args) args.push_back(skolemize(a));
      return TypeExpr::con(t->name, std::move(args));
    }
    case TypeExpr::Kind::Arrow:
      return TypeExpr::arrow(skolemize(t->args[0]), skolemize(t->args[1]));
  }
  return t;
}

NodeId tag_witness_node(NodeStore& s) {
  SymbolId tag = s.symbols().intern("(->)", 0);
  return s.mk_node({*s.mk_edge(tag, {}, Pcs{})});
}

NodeId build_any_node(NodeStore& s, const TypeUniverse& u) {
  NodeId tagw = tag_witness_node(s);
  NodeId self = s.mk_var(0);
  std::vector<Edge> edges;
  for (const auto& [name, arity] : u.constructors) {
    SymbolId sym = s.symbols().intern(name, arity);
    std::vector<NodeId> kids(arity, self);
    edges.push_back(*s.mk_edge(sym, kids, Pcs{}));
  }
  SymbolId arrow = s.symbols().intern("->", 3);
  edges.push_back(*s.mk_edge(arrow, {tagw, self, self}, Pcs{}));
  return s.mk_mu(s.mk_node(std::move(edges)));
}

namespace {

NodeId encode_type_rec(NodeStore& s, const TypePtr& t, NodeId any, Path& cur,
                       std::map<std::string, std::vector<Path>>* occ) {
  switch (t->kind) {
    case TypeExpr::Kind::Var:
      if (occ) (*occ)[t->name].push_back(cur);
      return any;
    case TypeExpr::Kind::Con: {
      SymbolId sym = s.symbols().intern(t->name, static_cast<uint32_t>(t->args.size()));
      std::vector<NodeId> kids;
      kids.reserve(t->args.size());
      for (uint32_t i = 0; i < t->args.size(); ++i) {
        cur.push_back(i);
        kids.push_back(encode_type_rec(s, t->args[i], any, cur, occ));
        cur.pop_back();
      }
      return s.mk_node({*s.mk_edge(sym, kids, Pcs{})});
    }
    case TypeExpr::Kind::Arrow: {
      SymbolId arrow = s.symbols().intern("->", 3);
      NodeId tagw = tag_witness_node(s);
      cur.push_back(1);
      NodeId in = encode_type_rec(s, t->args[0], any, cur, occ);
      cur.back() = 2;
      NodeId out = encode_type_rec(s, t->args[1], any, cur, occ);
      cur.pop_back();
      return s.mk_node({*s.mk_edge(arrow, {tagw, in, out}, Pcs{})});
    }
  }
  return kBottom;
}

}  // namespace

NodeId encode_type(NodeStore& s, const TypePtr& t, NodeId any,
                   std::map<std::string, std::vector<Path>>* occurrences) {
  Path cur;
  return encode_type_rec(s, t, any, cur, occurrences);
}

std::optional<Edge> encode_component(NodeStore& s, const Component& c, NodeId any) {
  std::map<std::string, std::vector<Path>> occ;
  NodeId ty = encode_type(s, c.scheme, any, &occ);
  std::vector<Pec> pecs;
  for (auto& [var, paths] : occ) {
    if (paths.size() < 2) continue;
    std::vector<Path> prefixed;
    prefixed.reserve(paths.size());
    for (const Path& p : paths) {
      Path q{0};
      q.insert(q.end(), p.begin(), p.end());
      prefixed.push_back(std::move(q));
    }
    pecs.push_back(Pec(std::move(prefixed)));
  }
  SymbolId sym = s.symbols().intern(c.name, 1);
  return s.mk_edge(sym, {ty}, Pcs(std::move(pecs)));
}

namespace {

std::pair<std::vector<TypePtr>, TypePtr> arrow_spine(const TypePtr& t) {
  std::vector<TypePtr> params;
  TypePtr cur = t;
  while (cur->kind == TypeExpr::Kind::Arrow) {
    params.push_back(cur->args[0]);
    cur = cur->args[1];
  }
  return {params, cur};
}

}  // namespace

TermSpace make_term_space(NodeStore& s, const SynthesisProblem& p, bool relevancy) {
  TermSpace ts;
  ts.relevancy = relevancy;
  TypeUniverse u = collect_universe(p);
  ts.any = build_any_node(s, u);

  for (const Component& c : p.library) {
    auto e = encode_component(s, c, ts.any);
    if (e) ts.leaf_edges.push_back(std::move(*e));
  }

  auto [params, ret] = arrow_spine(p.query);
  ts.num_inputs = static_cast<uint32_t>(params.size());
  if (ts.num_inputs > 20) throw std::runtime_error("too many query inputs");
  for (uint32_t i = 0; i < params.size(); ++i) {
    std::string name =
        i < p.input_names.size() ? p.input_names[i] : "arg" + std::to_string(i);
    for (const Component& c : p.library) {
      if (c.name == name) {
        throw std::runtime_error("input name '" + name + "' collides with a component");
      }
    }
    NodeId ty = encode_type(s, skolemize(params[i]), ts.any, nullptr);
    SymbolId sym = s.symbols().intern(name, 1);
    ts.leaf_edges.push_back(*s.mk_edge(sym, {ty}, Pcs{}));
  }
  return ts;
}

NodeId TermSpace::node(NodeStore& s, uint32_t size, uint32_t mask) {
  if (size == 0) return kBottom;
  if (!relevancy) mask = 0;
  uint64_t key = (static_cast<uint64_t>(size) << 32) | mask;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  NodeId out;
  size_t num_comps = leaf_edges.size() - num_inputs;
  if (size == 1) {
    std::vector<Edge> edges;
    if (!relevancy) {
      edges = leaf_edges;
    } else if (mask == 0) {
      edges.assign(leaf_edges.begin(), leaf_edges.begin() + num_comps);
    } else if (std::popcount(mask) == 1) {
      uint32_t i = static_cast<uint32_t>(std::countr_zero(mask));
      if (i < num_inputs) edges.push_back(leaf_edges[num_comps + i]);
    }
    out = s.mk_node(std::move(edges));
  } else {
    SymbolId app = s.symbols().intern("app", 4);
    NodeId tagw = tag_witness_node(s);
    Pcs app_pcs{{Pec{{Path{0}, Path{1, 0, 2}}}, Pec{{Path{1, 0, 1}, Path{2, 0}}},
                 Pec{{Path{1, 0, 0}, Path{3}}}}};
    std::vector<Edge> edges;
    for (uint32_t i = 1; i < size; ++i) {
      uint32_t fun_size = i, arg_size = size - i;
      if (!relevancy) {
        NodeId fun = node(s, fun_size, 0), arg = node(s, arg_size, 0);
        if (auto e = s.mk_edge(app, {any, fun, arg, tagw}, app_pcs)) {
          edges.push_back(std::move(*e));
        }
        continue;
      }
      // every split of the required inputs across the two children
      for (uint32_t p = mask;; p = (p - 1) & mask) {
        uint32_t rest = mask & ~p;
        for (uint32_t sub = p;; sub = (sub - 1) & p) {
          uint32_t q = rest | sub;
          NodeId fun = node(s, fun_size, p), arg = node(s, arg_size, q);
          if (fun != kBottom && arg != kBottom) {
            if (auto e = s.mk_edge(app, {any, fun, arg, tagw}, app_pcs)) {
              edges.push_back(std::move(*e));
            }
          }
          if (sub == 0) break;
        }
        if (p == 0) break;
      }
    }
    out = s.mk_node(std::move(edges));
  }
  memo.emplace(key, out);
  return out;
}

NodeId attach_query(NodeStore& s, NodeId space, NodeId query_type) {
  SymbolId query = s.symbols().intern("query", 2);
  auto e = s.mk_edge(query, {query_type, space}, Pcs{{Pec{{Path{0}, Path{1, 0}}}}});
  return e ? s.mk_node({*e}) : kBottom;
}

namespace {

const PTermPtr* chase_var(const EnumState& st, const PTermPtr* t) {
  while (*t && (*t)->kind == PTerm::Kind::Var) {
    const PTermPtr* b = st.binding_of((*t)->var);
    if (!b) return t;
    t = b;
  }
  return t;
}

void pretty_rec(NodeStore& s, const EnumState& st, const PTermPtr& raw, std::string& out,
                bool arg_pos) {
  const PTermPtr& t = *chase_var(st, &raw);
  if (t->kind != PTerm::Kind::App) {
    out += "?";
    return;
  }
  const std::string& name = s.symbols()[t->sym].name;
  if (name == "app" && t->children.size() == 4) {
    if (arg_pos) out += '(';
    pretty_rec(s, st, t->children[1], out, false);
    out += ' ';
    pretty_rec(s, st, t->children[2], out, true);
    if (arg_pos) out += ')';
    return;
  }
  out += name;
}

}  // namespace

std::string pretty_term(NodeStore& s, const EnumState& st) {
  const PTermPtr* root = st.binding_of(kTopVar);
  if (!root) return "?";
  const PTermPtr& q = *chase_var(st, root);
  if (q->kind != PTerm::Kind::App || q->children.size() != 2) return "?";
  std::string out;
  pretty_rec(s, st, q->children[1], out, false);
  return out;
}

// ---- unification checker ----------------------------------------------------

namespace {

struct Unifier {
  // types flattened to constructor applications; "->" is a 2-ary con here
  struct Ty {
    bool is_var;
    uint32_t var = 0;
    std::string con;
    std::vector<std::shared_ptr<Ty>> args;
  };
  using TyPtr = std::shared_ptr<Ty>;

  std::unordered_map<uint32_t, TyPtr> subst;
  uint32_t next_var = 0;

  TyPtr fresh() {
    auto t = std::make_shared<Ty>();
    t->is_var = true;
    t->var = next_var++;
    return t;
  }

  static TyPtr mk_con(std::string name, std::vector<TyPtr> args) {
    auto t = std::make_shared<Ty>();
    t->is_var = false;
    t->con = std::move(name);
    t->args = std::move(args);
    return t;
  }

  TyPtr from_scheme(const TypePtr& t, std::map<std::string, TyPtr>& env) {
    switch (t->kind) {
      case TypeExpr::Kind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) it = env.emplace(t->name, fresh()).first;
        return it->second;
      }
      case TypeExpr::Kind::Con: {
        std::vector<TyPtr> args;
        for (const TypePtr& a : t->args) args.push_back(from_scheme(a, env));
        return mk_con(t->name, std::move(args));
      }
      case TypeExpr::Kind::Arrow:
        return mk_con("->", {from_scheme(t->args[0], env), from_scheme(t->args[1], env)});
    }
    return nullptr;
  }

  TyPtr resolve(TyPtr t) {
    while (t->is_var) {
      auto it = subst.find(t->var);
      if (it == subst.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs(uint32_t v, const TyPtr& t0) {
    TyPtr t = resolve(t0);
    if (t->is_var) return t->var == v;
    for (const TyPtr& a : t->args) {
      if (occurs(v, a)) return true;
    }
    return false;
  }

  bool unify(TyPtr a, TyPtr b) {
    a = resolve(std::move(a));
    b = resolve(std::move(b));
    if (a->is_var && b->is_var && a->var == b->var) return true;
    if (a->is_var) {
      if (occurs(a->var, b)) return false;
      subst.emplace(a->var, b);
      return true;
    }
    if (b->is_var) return unify(b, a);
    if (a->con != b->con || a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i) {
      if (!unify(a->args[i], b->args[i])) return false;
    }
    return true;
  }
};

struct CandTerm {
  std::string head;
  std::vector<CandTerm> args;  // curried application flattened
};

struct CandParser {
  const std::string& text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::optional<CandTerm> atom() {
    skip();
    if (pos >= text.size()) return std::nullopt;
    if (text[pos] == '(') {
      ++pos;
      auto t = term();
      skip();
      if (!t || pos >= text.size() || text[pos] != ')') return std::nullopt;
      ++pos;
      return t;
    }
    if (text[pos] == ')') return std::nullopt;
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')') {
      ++pos;
    }
    if (pos == start) return std::nullopt;
    return CandTerm{text.substr(start, pos - start), {}};
  }

  std::optional<CandTerm> term() {
    auto head = atom();
    if (!head) return std::nullopt;
    while (true) {
      size_t save = pos;
      auto arg = atom();
      if (!arg) {
        pos = save;
        break;
      }
      head->args.push_back(std::move(*arg));
    }
    return head;
  }
};

}  // namespace

bool check_candidate(const std::string& term, const SynthesisProblem& p) {
  CandParser parser{term};
  auto t = parser.term();
  parser.skip();
  if (!t || parser.pos != term.size()) return false;

  Unifier u;
  std::map<std::string, Unifier::TyPtr> inputs;
  auto [params, ret] = arrow_spine(p.query);
  for (uint32_t i = 0; i < params.size(); ++i) {
    std::string name = i < p.input_names.size() ? p.input_names[i] : "arg" + std::to_string(i);
    std::map<std::string, Unifier::TyPtr> none;
    inputs.emplace(name, u.from_scheme(skolemize(params[i]), none));
  }

  std::function<Unifier::TyPtr(const CandTerm&)> infer =
      [&](const CandTerm& ct) -> Unifier::TyPtr {
    Unifier::TyPtr head;
    if (auto it = inputs.find(ct.head); it != inputs.end()) {
      head = it->second;
    } else {
      const Component* comp = nullptr;
      for (const Component& c : p.library) {
        if (c.name == ct.head) {
          comp = &c;
          break;
        }
      }
      if (!comp) return nullptr;
      std::map<std::string, Unifier::TyPtr> env;
      head = u.from_scheme(comp->scheme, env);
    }
    for (const CandTerm& arg : ct.args) {
      Unifier::TyPtr ta = infer(arg);
      if (!ta) return nullptr;
      Unifier::TyPtr res = u.fresh();
      if (!u.unify(head, Unifier::mk_con("->", {ta, res}))) return nullptr;
      head = res;
    }
    return head;
  };

  Unifier::TyPtr ty = infer(*t);
  if (!ty) return false;
  std::map<std::string, Unifier::TyPtr> none;
  return u.unify(ty, u.from_scheme(skolemize(ret), none));
}

// ---- drivers ----------------------------------------------------------------

namespace {

struct NaiveGen {
  const std::vector<std::string>& leaves;
  uint64_t budget;
  uint64_t generated = 0;
  bool exhausted = false;

  // enumerates every application tree of `size` leaves; returns false to stop
  bool gen(uint32_t size, const std::function<bool(const std::string&)>& cb) {
    return rec(size, [&](const std::string& term, bool) { return cb(term); });
  }

  bool rec(uint32_t size, const std::function<bool(const std::string&, bool)>& cb) {
    if (size == 1) {
      for (const std::string& leaf : leaves) {
        if (!cb(leaf, false)) return false;
      }
      return true;
    }
    for (uint32_t i = 1; i < size; ++i) {
      bool more = rec(i, [&](const std::string& fun, bool) {
        return rec(size - i, [&](const std::string& arg, bool arg_app) {
          std::string term = fun + ' ' + (arg_app ? "(" + arg + ")" : arg);
          return cb(term, true);
        });
      });
      if (!more) return false;
    }
    return true;
  }
};

bool mentions_all_inputs(const std::string& term, const std::vector<std::string>& names) {
  for (const std::string& n : names) {
    size_t at = 0;
    bool found = false;
    while ((at = term.find(n, at)) != std::string::npos) {
      bool left_ok = at == 0 || term[at - 1] == ' ' || term[at - 1] == '(';
      size_t end = at + n.size();
      bool right_ok = end == term.size() || term[end] == ' ' || term[end] == ')';
      if (left_ok && right_ok) {
        found = true;
        break;
      }
      ++at;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

SynthResult synthesize(NodeStore& s, const SynthesisProblem& p, const SynthOptions& opts,
                       const std::function<bool(const Candidate&)>& sink) {
  SynthResult res;
  auto [params, ret] = arrow_spine(p.query);
  std::vector<std::string> input_names;
  for (uint32_t i = 0; i < params.size(); ++i) {
    input_names.push_back(i < p.input_names.size() ? p.input_names[i]
                                                   : "arg" + std::to_string(i));
  }

  if (opts.naive) {
    std::vector<std::string> leaves;
    for (const Component& c : p.library) leaves.push_back(c.name);
    for (const std::string& n : input_names) leaves.push_back(n);
    NaiveGen gen{leaves, opts.naive_budget};
    for (uint32_t n = 1; n <= p.max_size && !gen.exhausted; ++n) {
      bool keep = gen.gen(n, [&](const std::string& term) {
        ++gen.generated;
        ++res.stats.states_explored;
        if (gen.generated >= gen.budget) {
          gen.exhausted = true;
          return false;
        }
        bool rel_ok = !opts.relevancy || mentions_all_inputs(term, input_names);
        if (rel_ok && check_candidate(term, p)) {
          Candidate cand{term, n};
          res.candidates.push_back(cand);
          if (sink && !sink(cand)) return false;
        } else {
          ++res.stats.dead_branches;
        }
        return true;
      });
      if (!keep && !gen.exhausted) break;  // sink stopped the run
    }
    res.stats.budget_exhausted = gen.exhausted;
    return res;
  }

  TermSpace space = make_term_space(s, p, opts.relevancy);
  NodeId ret_node = encode_type(s, skolemize(ret), space.any, nullptr);
  uint32_t full_mask =
      space.num_inputs == 0 ? 0 : (uint32_t{1} << space.num_inputs) - 1;

  bool stop = false;
  for (uint32_t n = 1; n <= p.max_size && !stop; ++n) {
    NodeId term_n = space.node(s, n, full_mask);
    NodeId root = attach_query(s, term_n, ret_node);
    if (opts.reduce_rounds > 0) {
      ReduceOptions ropts;
      ropts.max_rounds = opts.reduce_rounds;
      auto [reduced, report] = reduce_fixpoint(s, root, ropts);
      root = reduced;
      res.stats.edges_removed += report.edges_removed;
    }
    EnumOptions eopts;
    eopts.limit = opts.max_per_size;
    eopts.schedule = opts.schedule;
    eopts.audit = opts.audit;
    std::set<std::string> seen;
    EnumStats es = enumerate(s, root, eopts, [&](const EnumState& st) {
      std::string term = pretty_term(s, st);
      if (!seen.insert(term).second) return true;
      Candidate cand{term, n};
      res.candidates.push_back(cand);
      if (sink && !sink(cand)) {
        stop = true;
        return false;
      }
      return true;
    });
    res.stats.states_explored += es.states_explored;
    res.stats.dead_branches += es.dead_branches;
    res.stats.enum_steps += es.steps;
  }
  return res;
}

}  // namespace ecta
