#include "ecta/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ecta {

PTermPtr PTerm::mk_var(VarId v) {
  auto t = std::make_shared<PTerm>();
  t->kind = Kind::Var;
  t->var = v;
  return t;
}

PTermPtr PTerm::mk_app(SymbolId s, std::vector<PTermPtr> children) {
  auto t = std::make_shared<PTerm>();
  t->kind = Kind::App;
  t->sym = s;
  t->children = std::move(children);
  return t;
}

PTermPtr PTerm::mk_unode(NodeId n, std::vector<Fragment> fragments) {
  std::sort(fragments.begin(), fragments.end());
  fragments.erase(std::unique(fragments.begin(), fragments.end()), fragments.end());
  auto t = std::make_shared<PTerm>();
  t->kind = Kind::UNode;
  t->node = n;
  t->fragments = std::move(fragments);
  return t;
}

VarId EnumState::find(VarId v) const {
  auto it = merged.find(v);
  while (it != merged.end()) {
    v = it->second;
    it = merged.find(v);
  }
  return v;
}

bool EnumState::solved(VarId v) const {
  auto it = frag_refs.find(find(v));
  return it == frag_refs.end() || it->second == 0;
}

const PTermPtr* EnumState::binding_of(VarId v) const {
  auto it = bindings.find(find(v));
  return it == bindings.end() ? nullptr : &it->second;
}

namespace {

void refs_add(EnumState& st, VarId v, int delta) {
  v = st.find(v);
  uint32_t& r = st.frag_refs[v];
  assert(delta >= 0 || r >= static_cast<uint32_t>(-delta));
  r = static_cast<uint32_t>(static_cast<int64_t>(r) + delta);
  if (r == 0) st.frag_refs.erase(v);
}

const PTermPtr& resolve(const EnumState& st, const Location& loc) {
  auto it = st.bindings.find(loc.binding);
  assert(it != st.bindings.end());
  const PTermPtr* cur = &it->second;
  for (uint32_t i : loc.pos) {
    assert((*cur)->kind == PTerm::Kind::App && i < (*cur)->children.size());
    cur = &(*cur)->children[i];
  }
  return *cur;
}

PTermPtr replace_at(const PTermPtr& root, const std::vector<uint32_t>& pos, size_t i,
                    PTermPtr sub) {
  if (i == pos.size()) return sub;
  assert(root->kind == PTerm::Kind::App);
  std::vector<PTermPtr> children = root->children;
  children[pos[i]] = replace_at(children[pos[i]], pos, i + 1, std::move(sub));
  return PTerm::mk_app(root->sym, std::move(children));
}

void put_at(EnumState& st, const Location& loc, PTermPtr sub) {
  PTermPtr& root = st.bindings[loc.binding];
  root = replace_at(root, loc.pos, 0, std::move(sub));
}

}  // namespace

std::vector<Fragment> project(const std::vector<Fragment>& phi, uint32_t i) {
  std::vector<Fragment> out;
  for (const Fragment& f : phi) {
    if (f.is_eps()) throw std::logic_error("project: root-path fragment must be suspended");
    std::vector<Path> tails;
    for (const Path& p : f.paths.paths) {
      if (!p.empty() && p[0] == i) tails.emplace_back(p.begin() + 1, p.end());
    }
    if (!tails.empty()) out.push_back(Fragment{Pec(std::move(tails)), f.var});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool step_choose(NodeStore& s, EnumState& st, const Location& loc, size_t edge_index) {
  PTermPtr u = resolve(st, loc);
  assert(u->kind == PTerm::Kind::UNode);
  assert(s.kind(u->node) == NodeKind::Plain && u->node != kBottom);
  const Edge& e = s.edges(u->node)[edge_index];
  uint32_t arity = static_cast<uint32_t>(e.children.size());

  // A fragment path into a child this edge does not have can never be
  // satisfied here; the branch dies rather than silently dropping it.
  for (const Fragment& f : u->fragments) {
    assert(!f.is_eps());
    for (const Path& p : f.paths.paths) {
      if (p[0] >= arity) return false;
    }
  }

  std::vector<Fragment> all = u->fragments;
  for (const Pec& pec : s.pcs(e.pcs).classes) {
    all.push_back(Fragment{pec, st.next_fresh++});
  }
  for (const Fragment& f : u->fragments) refs_add(st, f.var, -1);

  std::vector<PTermPtr> children(arity);
  for (uint32_t i = 0; i < arity; ++i) {
    std::vector<Fragment> phi_i = project(all, i);
    for (const Fragment& f : phi_i) refs_add(st, f.var, +1);
    children[i] = PTerm::mk_unode(e.children[i], std::move(phi_i));
  }
  put_at(st, loc, PTerm::mk_app(e.sym, std::move(children)));
  return true;
}

namespace {

// What a suspension did, for the progress audit.
struct SuspendInfo {
  enum class Kind { Tautology, Fresh, Merge, Dead } kind;
  NodeId loc_node = kBottom;
  NodeId bind_node = kBottom;
};

SuspendInfo suspend_impl(NodeStore& s, EnumState& st, const Location& loc) {
  PTermPtr u = resolve(st, loc);
  assert(u->kind == PTerm::Kind::UNode);
  assert(!u->fragments.empty() && u->fragments.front().is_eps());
  const Fragment eps = u->fragments.front();
  VarId v = st.find(eps.var);

  std::vector<Fragment> rest(u->fragments.begin() + 1, u->fragments.end());

  if (v == st.find(loc.binding)) {
    if (loc.pos.empty()) {
      // the value at the root of sigma(v) trivially equals sigma(v)
      refs_add(st, v, -1);
      put_at(st, loc, PTerm::mk_unode(u->node, std::move(rest)));
      return {SuspendInfo::Kind::Tautology, u->node, kBottom};
    }
    // sigma(v) would have to contain itself strictly
    return {SuspendInfo::Kind::Dead, u->node, kBottom};
  }

  // chase var-to-var bindings if the caller has not substituted yet
  const PTermPtr* target = st.binding_of(v);
  while (target && (*target)->kind == PTerm::Kind::Var) {
    v = st.find((*target)->var);
    target = st.binding_of(v);
  }

  if (!target) {
    refs_add(st, eps.var, -1);
    st.bindings[v] = PTerm::mk_unode(u->node, std::move(rest));
    put_at(st, loc, PTerm::mk_var(v));
    return {SuspendInfo::Kind::Fresh, u->node, kBottom};
  }
  if ((*target)->kind == PTerm::Kind::UNode) {
    NodeId met = intersect(s, u->node, (*target)->node);
    NodeId bind_node = (*target)->node;
    if (met == kBottom) return {SuspendInfo::Kind::Dead, u->node, bind_node};
    std::vector<Fragment> combined = rest;
    combined.insert(combined.end(), (*target)->fragments.begin(), (*target)->fragments.end());
    std::sort(combined.begin(), combined.end());
    // exact duplicates collapse to one mention
    auto dup = std::unique(combined.begin(), combined.end());
    for (auto it = dup; it != combined.end(); ++it) refs_add(st, it->var, -1);
    combined.erase(dup, combined.end());
    refs_add(st, eps.var, -1);
    st.bindings[v] = PTerm::mk_unode(met, std::move(combined));
    put_at(st, loc, PTerm::mk_var(v));
    return {SuspendInfo::Kind::Merge, u->node, bind_node};
  }
  // target already committed to an application: a fragment still mentioning
  // it should be impossible (committed variables have no mentions left)
  assert(false && "suspension into a committed variable");
  return {SuspendInfo::Kind::Dead, u->node, kBottom};
}

}  // namespace

bool step_suspend(NodeStore& s, EnumState& st, const Location& loc) {
  return suspend_impl(s, st, loc).kind != SuspendInfo::Kind::Dead;
}

bool step_subst(EnumState& st) {
  for (auto it = st.bindings.begin(); it != st.bindings.end(); ++it) {
    if (it->second->kind != PTerm::Kind::Var) continue;
    VarId from = it->first;
    VarId into = st.find(it->second->var);
    st.bindings.erase(it);
    if (into == from) {
      assert(false && "self binding");
      return true;
    }
    st.merged[from] = into;
    auto rit = st.frag_refs.find(from);
    if (rit != st.frag_refs.end()) {
      uint32_t n = rit->second;
      st.frag_refs.erase(rit);
      if (n > 0) st.frag_refs[into] += n;
    }
    return true;
  }
  return false;
}

void step_choose_mu(NodeStore& s, EnumState& st, const Location& loc) {
  PTermPtr u = resolve(st, loc);
  assert(u->kind == PTerm::Kind::UNode);
  assert(s.kind(u->node) == NodeKind::Mu);
  assert(!u->fragments.empty());
  put_at(st, loc, PTerm::mk_unode(unfold(s, u->node), u->fragments));
}

namespace {

template <typename Fn>
bool walk_pterm(const PTermPtr& t, std::vector<uint32_t>& pos, Fn&& fn) {
  if (!fn(t, pos)) return false;
  if (t->kind == PTerm::Kind::App) {
    for (uint32_t i = 0; i < t->children.size(); ++i) {
      pos.push_back(i);
      if (!walk_pterm(t->children[i], pos, fn)) return false;
      pos.pop_back();
    }
  }
  return true;
}

// visits every u-node in every binding, bindings in ascending var order;
// fn returning false stops the walk early
template <typename Fn>
void walk_state(const EnumState& st, Fn&& fn) {
  for (const auto& [var, term] : st.bindings) {
    std::vector<uint32_t> pos;
    bool keep = walk_pterm(term, pos, [&](const PTermPtr& t, const std::vector<uint32_t>& p) {
      if (t->kind != PTerm::Kind::UNode) return true;
      return fn(var, p, t);
    });
    if (!keep) return;
  }
}

}  // namespace

bool is_fully_enumerated(const EnumState& st) {
  bool all_clear = true;
  walk_state(st, [&](VarId, const std::vector<uint32_t>&, const PTermPtr& t) {
    if (!t->fragments.empty()) {
      all_clear = false;
      return false;
    }
    return true;
  });
  return all_clear;
}

namespace {

// ---- progress audit -------------------------------------------------------

struct Measure {
  std::vector<uint32_t> heights;   // u-node heights, descending
  std::vector<uint32_t> pathlens;  // fragment path lengths, descending
  size_t var_bindings = 0;

  bool operator==(const Measure&) const = default;
};

Measure measure_of(NodeStore& s, const EnumState& st) {
  Measure m;
  walk_state(st, [&](VarId, const std::vector<uint32_t>&, const PTermPtr& t) {
    m.heights.push_back(lasso_height(s, t->node));
    for (const Fragment& f : t->fragments) {
      for (const Path& p : f.paths.paths) {
        m.pathlens.push_back(static_cast<uint32_t>(p.size()));
      }
    }
    return true;
  });
  for (const auto& [var, term] : st.bindings) {
    if (term->kind == PTerm::Kind::Var) ++m.var_bindings;
  }
  std::sort(m.heights.rbegin(), m.heights.rend());
  std::sort(m.pathlens.rbegin(), m.pathlens.rend());
  return m;
}

// multiset ordering via descending-sorted sequences
bool multiset_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

[[noreturn]] void audit_fail(const char* rule, const char* what) {
  throw std::logic_error(std::string("enumeration progress audit: ") + rule + ": " + what);
}

uint32_t leading_binders(NodeStore& s, NodeId n) {
  uint32_t k = 0;
  while (s.kind(n) == NodeKind::Mu) {
    ++k;
    n = s.body(n);
  }
  return k;
}

bool node_cyclic(NodeStore& s, NodeId n, std::unordered_map<NodeId, bool>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  bool cyc = false;
  for (NodeId m : reachable_nodes(s, n)) {
    if (s.kind(m) == NodeKind::Mu) {
      cyc = true;
      break;
    }
  }
  memo.emplace(n, cyc);
  return cyc;
}

// ---- driver ----------------------------------------------------------------

struct Driver {
  NodeStore& s;
  const EnumOptions& opts;
  const std::function<bool(const EnumState&)>& sink;
  EnumStats stats;
  std::unordered_map<NodeId, bool> cyclic_memo;

  enum class Outcome { Dead, Final, Choice };

  bool find_eps(const EnumState& st, Location& out) {
    bool found = false;
    walk_state(st, [&](VarId v, const std::vector<uint32_t>& pos, const PTermPtr& t) {
      if (!t->fragments.empty() && t->fragments.front().is_eps()) {
        out = Location{v, pos};
        found = true;
        return false;
      }
      return true;
    });
    return found;
  }

  bool find_mu(const EnumState& st, Location& out) {
    bool found = false;
    walk_state(st, [&](VarId v, const std::vector<uint32_t>& pos, const PTermPtr& t) {
      if (!st.solved(v)) return true;
      if (s.kind(t->node) == NodeKind::Mu && !t->fragments.empty()) {
        out = Location{v, pos};
        found = true;
        return false;
      }
      return true;
    });
    return found;
  }

  std::vector<Location> choose_candidates(const EnumState& st) {
    std::vector<Location> cands;
    walk_state(st, [&](VarId v, const std::vector<uint32_t>& pos, const PTermPtr& t) {
      if (!st.solved(v)) return true;
      if (s.kind(t->node) != NodeKind::Plain || t->node == kBottom) return true;
      if (!t->fragments.empty() || skeleton(s, t->node) != t->node) {
        cands.push_back(Location{v, pos});
      }
      return true;
    });
    return cands;
  }

  bool any_fragments(const EnumState& st) {
    bool any = false;
    walk_state(st, [&](VarId, const std::vector<uint32_t>&, const PTermPtr& t) {
      if (!t->fragments.empty()) {
        any = true;
        return false;
      }
      return true;
    });
    return any;
  }

  Outcome drive(EnumState& st, Location& choice) {
    while (true) {
      // eliminate var-to-var bindings first so suspensions see canonical targets
      {
        Measure m0;
        if (opts.audit) m0 = measure_of(s, st);
        if (step_subst(st)) {
          ++stats.steps;
          if (opts.audit) {
            Measure m1 = measure_of(s, st);
            if (m1.heights != m0.heights || m1.pathlens != m0.pathlens ||
                m1.var_bindings + 1 != m0.var_bindings) {
              audit_fail("subst", "must only remove one var binding");
            }
          }
          continue;
        }
      }
      Location loc;
      if (find_eps(st, loc)) {
        Measure m0;
        if (opts.audit) m0 = measure_of(s, st);
        SuspendInfo info = suspend_impl(s, st, loc);
        ++stats.steps;
        if (info.kind == SuspendInfo::Kind::Dead) return Outcome::Dead;
        if (opts.audit) {
          Measure m1 = measure_of(s, st);
          if (!multiset_less(m1.pathlens, m0.pathlens)) {
            audit_fail("suspend", "fragment paths must shrink");
          }
          if (info.kind != SuspendInfo::Kind::Merge && m1.heights != m0.heights) {
            audit_fail("suspend", "heights must be untouched");
          }
          if (info.kind == SuspendInfo::Kind::Merge &&
              !node_cyclic(s, info.loc_node, cyclic_memo) &&
              !node_cyclic(s, info.bind_node, cyclic_memo) &&
              !multiset_less(m1.heights, m0.heights)) {
            audit_fail("suspend", "acyclic merge must shrink heights");
          }
        }
        continue;
      }
      if (find_mu(st, loc)) {
        PTermPtr before = resolve(st, loc);
        uint32_t lead0 = leading_binders(s, before->node);
        step_choose_mu(s, st, loc);
        ++stats.steps;
        if (opts.audit) {
          PTermPtr after = resolve(st, loc);
          if (before->fragments.empty()) audit_fail("choose-mu", "needs fragments");
          if (leading_binders(s, after->node) >= lead0) {
            audit_fail("choose-mu", "must strip a leading binder");
          }
        }
        continue;
      }
      std::vector<Location> cands = choose_candidates(st);
      if (!cands.empty()) {
        choice = opts.schedule == Schedule::DfsLR ? cands.front() : cands.back();
        return Outcome::Choice;
      }
      if (any_fragments(st)) return Outcome::Dead;  // circular waits cannot resolve
      return Outcome::Final;
    }
  }

  void run(NodeId root) {
    if (opts.limit == 0 || root == kBottom) return;
    EnumState init;
    init.bindings.emplace(kTopVar, PTerm::mk_unode(root, {}));
    std::vector<EnumState> stack;
    stack.push_back(std::move(init));
    while (!stack.empty()) {
      EnumState st = std::move(stack.back());
      stack.pop_back();
      Location choice;
      switch (drive(st, choice)) {
        case Outcome::Dead:
          ++stats.dead_branches;
          break;
        case Outcome::Final:
          ++stats.yielded;
          if (!sink(st) || stats.yielded >= opts.limit) return;
          break;
        case Outcome::Choice: {
          PTermPtr u = resolve(st, choice);
          size_t n_edges = s.edges(u->node).size();
          Measure m0;
          if (opts.audit) m0 = measure_of(s, st);
          for (size_t k = n_edges; k-- > 0;) {
            EnumState branch = st;
            ++stats.states_explored;
            ++stats.steps;
            if (!step_choose(s, branch, choice, k)) {
              ++stats.dead_branches;
              continue;
            }
            if (opts.audit) {
              Measure m1 = measure_of(s, branch);
              if (!multiset_less(m1.heights, m0.heights)) {
                audit_fail("choose", "u-node heights must shrink");
              }
            }
            stack.push_back(std::move(branch));
          }
          break;
        }
      }
    }
  }
};

}  // namespace

EnumStats enumerate(NodeStore& s, NodeId n, const EnumOptions& opts,
                    const std::function<bool(const EnumState&)>& sink) {
  assert(s.closed(n));
  Driver d{s, opts, sink};
  d.run(n);
  return d.stats;
}

std::vector<EnumState> enumerate_all(NodeStore& s, NodeId n, const EnumOptions& opts) {
  std::vector<EnumState> out;
  enumerate(s, n, opts, [&](const EnumState& st) {
    out.push_back(st);
    return true;
  });
  return out;
}

// ---- expansion --------------------------------------------------------------

namespace {

struct Expander {
  NodeStore& s;
  TermStore& ts;
  const EnumState& st;

  std::vector<VarId> vars;                       // reachable, discovery order
  std::vector<std::pair<VarId, NodeId>> occs;    // u-node occurrences
  std::unordered_map<VarId, bool> seen_var;

  void discover(VarId v) {
    v = st.find(v);
    if (seen_var.count(v)) return;
    seen_var.emplace(v, true);
    vars.push_back(v);
    const PTermPtr* b = st.binding_of(v);
    assert(b && "referenced variable must be bound");
    collect(v, *b);
  }

  void collect(VarId owner, const PTermPtr& t) {
    switch (t->kind) {
      case PTerm::Kind::Var:
        discover(t->var);
        break;
      case PTerm::Kind::App:
        for (const PTermPtr& c : t->children) collect(owner, c);
        break;
      case PTerm::Kind::UNode:
        occs.emplace_back(owner, t->node);
        break;
    }
  }

  // assembles the ground term for one assignment of occurrence terms
  TermId assemble(const std::vector<TermId>& picks) {
    std::unordered_map<VarId, TermId> var_memo;
    std::unordered_map<VarId, size_t> occ_base;
    size_t next = 0;
    for (auto& [v, node] : occs) {
      if (!occ_base.count(v)) occ_base.emplace(v, next);
      ++next;
    }
    // occurrence picks are consumed per owner in collection order
    std::unordered_map<VarId, size_t> cursor;
    std::function<TermId(VarId)> var_term = [&](VarId v) -> TermId {
      v = st.find(v);
      if (auto it = var_memo.find(v); it != var_memo.end()) return it->second;
      const PTermPtr* b = st.binding_of(v);
      TermId t = build(v, *b, var_term);
      var_memo.emplace(v, t);
      return t;
    };
    cursor_ = &cursor;
    picks_ = &picks;
    return var_term(kTopVar);
  }

  const std::vector<TermId>* picks_ = nullptr;
  std::unordered_map<VarId, size_t>* cursor_ = nullptr;

  TermId build(VarId owner, const PTermPtr& t, std::function<TermId(VarId)>& var_term) {
    switch (t->kind) {
      case PTerm::Kind::Var:
        return var_term(t->var);
      case PTerm::Kind::App: {
        std::vector<TermId> kids;
        kids.reserve(t->children.size());
        for (const PTermPtr& c : t->children) kids.push_back(build(owner, c, var_term));
        return ts.mk(t->sym, kids);
      }
      case PTerm::Kind::UNode: {
        size_t global = global_index(owner, (*cursor_)[owner]++);
        return (*picks_)[global];
      }
    }
    return 0;  // unreachable
  }

  size_t global_index(VarId owner, size_t nth) {
    size_t count = 0;
    for (size_t i = 0; i < occs.size(); ++i) {
      if (occs[i].first == owner) {
        if (count == nth) return i;
        ++count;
      }
    }
    assert(false && "occurrence cursor out of range");
    return 0;
  }

  std::vector<TermId> run_with_caps(const std::vector<uint32_t>& caps) {
    std::vector<std::vector<TermId>> lists(occs.size());
    for (size_t i = 0; i < occs.size(); ++i) {
      lists[i] = denote_bounded(s, ts, occs[i].second, caps[i]);
      if (lists[i].empty()) return {};
    }
    std::vector<TermId> out;
    std::vector<size_t> idx(occs.size(), 0);
    std::vector<TermId> picks(occs.size());
    while (true) {
      for (size_t i = 0; i < occs.size(); ++i) picks[i] = lists[i][idx[i]];
      out.push_back(assemble(picks));
      size_t i = 0;
      for (; i < occs.size(); ++i) {
        if (++idx[i] < lists[i].size()) break;
        idx[i] = 0;
      }
      if (i == occs.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

Expander make_expander(NodeStore& s, TermStore& ts, const EnumState& st) {
  if (!is_fully_enumerated(st)) {
    throw std::logic_error("expand: state still carries constraint fragments");
  }
  Expander ex{s, ts, st};
  ex.discover(kTopVar);
  return ex;
}

}  // namespace

std::vector<TermId> expand(NodeStore& s, TermStore& ts, const EnumState& st, size_t limit) {
  Expander ex = make_expander(s, ts, st);
  bool any_cyclic = false;
  std::unordered_map<NodeId, bool> memo;
  std::vector<uint32_t> caps(ex.occs.size());
  size_t pump_slack = 1;
  for (size_t i = 0; i < ex.occs.size(); ++i) {
    NodeId n = ex.occs[i].second;
    if (node_cyclic(s, n, memo)) {
      any_cyclic = true;
      pump_slack += reachable_nodes(s, n).size();
    }
    caps[i] = lasso_height(s, n);
  }
  if (!any_cyclic) {
    std::vector<TermId> out = ex.run_with_caps(caps);
    if (out.size() > limit) out.resize(limit);
    return out;
  }
  // cyclic leftovers: deepen until enough terms or provably exhausted
  std::vector<TermId> best;
  size_t stale = 0;
  for (uint32_t d = 1; best.size() < limit && stale <= pump_slack; ++d) {
    std::vector<uint32_t> round = caps;
    for (uint32_t& c : round) c = std::max(c, d);
    std::vector<TermId> got = ex.run_with_caps(round);
    if (got.size() > best.size()) {
      best = std::move(got);
      stale = 0;
    } else {
      ++stale;
    }
  }
  if (best.size() > limit) best.resize(limit);
  return best;
}

std::vector<TermId> expand_bounded(NodeStore& s, TermStore& ts, const EnumState& st,
                                   uint32_t max_depth) {
  Expander ex = make_expander(s, ts, st);
  std::vector<uint32_t> caps(ex.occs.size(), max_depth);
  std::vector<TermId> all = ex.run_with_caps(caps);
  std::vector<TermId> out;
  for (TermId t : all) {
    if (ts.depth(t) <= max_depth) out.push_back(t);
  }
  return out;
}

// ---- textual state ----------------------------------------------------------

namespace {

void pterm_to_string(NodeStore& s, const PTermPtr& t, std::string& out) {
  switch (t->kind) {
    case PTerm::Kind::Var:
      out += "v" + std::to_string(t->var);
      break;
    case PTerm::Kind::App: {
      out += s.symbols()[t->sym].name;
      if (!t->children.empty()) {
        out += '(';
        for (size_t i = 0; i < t->children.size(); ++i) {
          if (i) out += ", ";
          pterm_to_string(s, t->children[i], out);
        }
        out += ')';
      }
      break;
    }
    case PTerm::Kind::UNode: {
      out += "<n" + std::to_string(t->node);
      for (const Fragment& f : t->fragments) {
        out += " | " + pec_to_string(f.paths) + " ~ v" + std::to_string(f.var);
      }
      out += ">";
      break;
    }
  }
}

}  // namespace

std::string enum_state_to_string(NodeStore& s, const EnumState& st) {
  std::string out;
  for (const auto& [var, term] : st.bindings) {
    out += "v" + std::to_string(var) + " -> ";
    pterm_to_string(s, term, out);
    out += '\n';
  }
  for (const auto& [from, into] : st.merged) {
    out += "v" + std::to_string(from) + " = v" + std::to_string(st.find(into)) + "\n";
  }
  return out;
}

}  // namespace ecta
