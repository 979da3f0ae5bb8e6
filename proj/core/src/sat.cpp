#include "ecta/sat.hpp"

#include "ecta/reduce.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ecta {

Cnf parse_dimacs(const std::string& text) {
  Cnf cnf;
  bool have_header = false;
  uint32_t promised_clauses = 0;
  std::istringstream in(text);
  std::string line;
  std::vector<int32_t> cur;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.num_vars >> promised_clauses;
      if (fmt != "cnf" || ls.fail()) throw std::runtime_error("bad DIMACS header");
      have_header = true;
      continue;
    }
    int32_t lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
      } else {
        uint32_t v = static_cast<uint32_t>(lit < 0 ? -lit : lit);
        if (!have_header) throw std::runtime_error("clause before DIMACS header");
        if (v > cnf.num_vars) {
          throw std::runtime_error("literal " + std::to_string(lit) + " out of range");
        }
        cur.push_back(lit);
      }
    }
  }
  if (!cur.empty()) cnf.clauses.push_back(cur);  // tolerate a missing final 0
  if (!have_header) throw std::runtime_error("missing DIMACS header");
  (void)promised_clauses;
  return cnf;
}

std::string cnf_to_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& cl : cnf.clauses) {
    for (int32_t lit : cl) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfEncoding encode_cnf(NodeStore& s, const Cnf& cnf) {
  CnfEncoding enc;
  enc.num_vars = cnf.num_vars;
  SymbolTable& syms = s.symbols();
  SymbolId t_sym = syms.intern("T", 0);
  SymbolId f_sym = syms.intern("F", 0);
  enc.assign_sym = syms.intern("assignment", cnf.num_vars);

  Edge t_edge = *s.mk_edge(t_sym, {}, Pcs{});
  Edge f_edge = *s.mk_edge(f_sym, {}, Pcs{});
  enc.t_node = s.mk_node({t_edge});
  enc.f_node = s.mk_node({f_edge});
  enc.bool_node = s.mk_node({t_edge, f_edge});

  std::vector<NodeId> slots(cnf.num_vars, enc.bool_node);
  NodeId assn = s.mk_node({*s.mk_edge(enc.assign_sym, slots, Pcs{})});

  std::vector<NodeId> clause_nodes;
  for (const auto& cl : cnf.clauses) {
    std::vector<Edge> lits;
    for (int32_t lit : cl) {
      uint32_t v = static_cast<uint32_t>(lit < 0 ? -lit : lit) - 1;
      std::string name = (lit > 0 ? "+x" : "-x") + std::to_string(v + 1);
      SymbolId sym = syms.intern(name, 2);
      NodeId val = lit > 0 ? enc.t_node : enc.f_node;
      Pcs pcs{{Pec{{Path{0, v}, Path{1}}}}};
      auto e = s.mk_edge(sym, {assn, val}, pcs);
      if (e) lits.push_back(std::move(*e));
    }
    clause_nodes.push_back(s.mk_node(std::move(lits)));
  }

  uint32_t m = static_cast<uint32_t>(clause_nodes.size());
  SymbolId and_sym = syms.intern("and", m);
  std::vector<Pec> ties;
  for (uint32_t j = 0; j < cnf.num_vars; ++j) {
    std::vector<Path> paths;
    paths.reserve(m);
    for (uint32_t i = 0; i < m; ++i) paths.push_back(Path{i, 0, j});
    if (!paths.empty()) ties.push_back(Pec(std::move(paths)));
  }
  auto and_edge = s.mk_edge(and_sym, clause_nodes, Pcs(std::move(ties)));
  enc.root = and_edge ? s.mk_node({*and_edge}) : kBottom;
  return enc;
}

namespace {

const PTermPtr* chase(const EnumState& st, const PTermPtr* t) {
  while (*t && (*t)->kind == PTerm::Kind::Var) {
    const PTermPtr* b = st.binding_of((*t)->var);
    if (!b) return t;
    t = b;
  }
  return t;
}

const PTermPtr* find_app(const EnumState& st, const PTermPtr& t, SymbolId sym) {
  if (t->kind == PTerm::Kind::App) {
    if (t->sym == sym) return &t;
    for (const PTermPtr& c : t->children) {
      const PTermPtr* got = find_app(st, *chase(st, &c), sym);
      if (got) return got;
    }
  }
  return nullptr;
}

}  // namespace

SatModel extract_model(NodeStore& s, const CnfEncoding& enc, const EnumState& st) {
  SatModel m;
  m.vals.assign(enc.num_vars, TruthVal::Star);
  const PTermPtr* root = st.binding_of(kTopVar);
  if (!root) return m;
  const PTermPtr* assn = find_app(st, *chase(st, root), enc.assign_sym);
  if (!assn) return m;  // no clause pinned anything
  for (uint32_t j = 0; j < enc.num_vars; ++j) {
    const PTermPtr* slot = chase(st, &(*assn)->children[j]);
    const PTermPtr& v = *slot;
    if (v->kind == PTerm::Kind::UNode) {
      if (v->node == enc.t_node) m.vals[j] = TruthVal::True;
      else if (v->node == enc.f_node) m.vals[j] = TruthVal::False;
      else m.vals[j] = TruthVal::Star;
    } else if (v->kind == PTerm::Kind::App) {
      m.vals[j] = s.symbols()[v->sym].name == "T" ? TruthVal::True : TruthVal::False;
    }
  }
  return m;
}

SatResult sat_solve(NodeStore& s, const Cnf& cnf, const SatOptions& opts) {
  SatResult res;
  for (const auto& cl : cnf.clauses) {
    if (cl.empty()) return res;  // empty clause, nothing satisfies it
  }
  CnfEncoding enc = encode_cnf(s, cnf);
  if (opts.reduce_rounds > 0) {
    ReduceOptions ropts;
    ropts.max_rounds = opts.reduce_rounds;
    auto [reduced, report] = reduce_fixpoint(s, enc.root, ropts);
    enc.root = reduced;
    res.edges_removed = report.edges_removed;
  }
  EnumOptions eopts;
  eopts.limit = opts.all ? UINT64_MAX : 1;
  eopts.schedule = opts.schedule;
  eopts.audit = opts.audit;
  res.stats = enumerate(s, enc.root, eopts, [&](const EnumState& st) {
    res.models.push_back(extract_model(s, enc, st));
    return true;
  });
  res.sat = !res.models.empty();
  if (cnf.num_vars <= 24) {
    std::set<uint32_t> full;
    for (const SatModel& m : res.models) {
      std::vector<uint32_t> masks{0};
      for (uint32_t j = 0; j < cnf.num_vars; ++j) {
        if (m.vals[j] == TruthVal::Star) {
          size_t n = masks.size();
          for (size_t k = 0; k < n; ++k) masks.push_back(masks[k] | (1u << j));
        } else if (m.vals[j] == TruthVal::True) {
          for (uint32_t& mask : masks) mask |= 1u << j;
        }
      }
      full.insert(masks.begin(), masks.end());
    }
    res.full_model_count = full.size();
  }
  return res;
}

std::string model_to_string(const SatModel& m) {
  std::string out = "v";
  for (size_t j = 0; j < m.vals.size(); ++j) {
    out += ' ';
    switch (m.vals[j]) {
      case TruthVal::True: break;
      case TruthVal::False: out += '-'; break;
      case TruthVal::Star: out += '*'; break;
    }
    out += std::to_string(j + 1);
  }
  out += " 0";
  return out;
}

}  // namespace ecta
