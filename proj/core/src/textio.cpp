#include "ecta/textio.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ecta {

namespace {

struct EdgeDesc {
  std::string sym;
  std::vector<uint32_t> children;
  std::vector<Pec> pecs;
};

struct NodeDesc {
  enum class Kind { Plain, Mu, Var } kind;
  std::vector<EdgeDesc> edges;  // Plain
  uint32_t ref = 0;             // Mu body id or Var index
};

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  std::map<uint32_t, NodeDesc> descs;
  std::optional<uint32_t> root;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
  }

  void skip_ws(bool newlines) {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '\n') {
        if (!newlines) return;
        ++line;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        return;
      }
    }
  }

  bool eat(char c) {
    skip_ws(true);
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  uint32_t number() {
    skip_ws(true);
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return static_cast<uint32_t>(std::stoul(text.substr(start, pos - start)));
  }

  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '+' ||
           c == '-' || c == '*';
  }

  std::string word() {
    skip_ws(true);
    size_t start = pos;
    while (pos < text.size() && is_word_char(text[pos])) ++pos;
    if (pos == start) fail("expected a name");
    return text.substr(start, pos - start);
  }

  Pec pec() {
    expect('{');
    std::vector<Path> paths;
    do {
      skip_ws(true);
      size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '.' || text[pos] == 'e')) {
        ++pos;
      }
      if (pos == start) fail("expected a path");
      auto p = path_parse(text.substr(start, pos - start));
      if (!p) fail("bad path");
      paths.push_back(std::move(*p));
    } while (eat('='));
    expect('}');
    if (paths.size() < 2) fail("an equality needs at least two paths");
    return Pec(std::move(paths));
  }

  EdgeDesc edge() {
    EdgeDesc e;
    e.sym = word();
    if (eat('(')) {
      if (!eat(')')) {
        do {
          e.children.push_back(number());
        } while (eat(','));
        expect(')');
      }
    }
    skip_ws(true);
    if (text.compare(pos, 5, "where") == 0 &&
        (pos + 5 >= text.size() || !is_word_char(text[pos + 5]))) {
      pos += 5;
      e.pecs.push_back(pec());
      // a ';' continues the pec list only when a '{' follows, otherwise it
      // separates edges and stays for the caller
      while (true) {
        size_t save = pos;
        int save_line = line;
        if (!eat(';')) break;
        skip_ws(true);
        if (pos < text.size() && text[pos] == '{') {
          e.pecs.push_back(pec());
        } else {
          pos = save;
          line = save_line;
          break;
        }
      }
    }
    return e;
  }

  void run() {
    while (true) {
      skip_ws(true);
      if (pos >= text.size()) break;
      std::string kw = word();
      if (kw == "root") {
        root = number();
      } else if (kw == "node") {
        uint32_t id = number();
        expect('=');
        expect('{');
        NodeDesc d;
        d.kind = NodeDesc::Kind::Plain;
        skip_ws(true);
        if (!eat('}')) {
          do {
            skip_ws(true);
            d.edges.push_back(edge());
          } while (eat(';'));
          skip_ws(true);
          expect('}');
        }
        if (!descs.emplace(id, std::move(d)).second) fail("duplicate node id");
      } else if (kw == "mu") {
        uint32_t id = number();
        expect('=');
        NodeDesc d;
        d.kind = NodeDesc::Kind::Mu;
        d.ref = number();
        if (!descs.emplace(id, std::move(d)).second) fail("duplicate node id");
      } else if (kw == "var") {
        uint32_t id = number();
        expect('=');
        NodeDesc d;
        d.kind = NodeDesc::Kind::Var;
        d.ref = number();
        if (!descs.emplace(id, std::move(d)).second) fail("duplicate node id");
      } else {
        fail("unknown directive '" + kw + "'");
      }
    }
    if (!root) fail("missing root directive");
  }
};

struct Builder {
  NodeStore& s;
  const std::map<uint32_t, NodeDesc>& descs;
  std::unordered_map<uint32_t, NodeId> done;
  std::unordered_set<uint32_t> building;

  NodeId build(uint32_t id) {
    if (auto it = done.find(id); it != done.end()) return it->second;
    if (!building.insert(id).second) {
      throw std::runtime_error("node " + std::to_string(id) +
                               " refers to itself without a mu binder");
    }
    auto dit = descs.find(id);
    if (dit == descs.end()) {
      throw std::runtime_error("undefined node id " + std::to_string(id));
    }
    const NodeDesc& d = dit->second;
    NodeId out = kBottom;
    switch (d.kind) {
      case NodeDesc::Kind::Plain: {
        std::vector<Edge> edges;
        for (const EdgeDesc& ed : d.edges) {
          std::vector<NodeId> kids;
          kids.reserve(ed.children.size());
          for (uint32_t c : ed.children) kids.push_back(build(c));
          SymbolId sym = s.symbols().intern(ed.sym, static_cast<uint32_t>(kids.size()));
          auto e = s.mk_edge(sym, kids, Pcs(ed.pecs));
          if (e) edges.push_back(std::move(*e));
        }
        out = s.mk_node(std::move(edges));
        break;
      }
      case NodeDesc::Kind::Mu:
        out = s.mk_mu(build(d.ref));
        break;
      case NodeDesc::Kind::Var:
        out = s.mk_var(d.ref);
        break;
    }
    building.erase(id);
    done.emplace(id, out);
    return out;
  }
};

struct Printer {
  NodeStore& s;
  std::unordered_map<NodeId, uint32_t> ids;
  std::vector<NodeId> order;

  void number(NodeId n) {
    if (ids.count(n)) return;
    ids.emplace(n, static_cast<uint32_t>(ids.size()));
    order.push_back(n);
    switch (s.kind(n)) {
      case NodeKind::Plain:
        for (const Edge& e : s.edges(n)) {
          for (NodeId c : e.children) number(c);
        }
        break;
      case NodeKind::Mu:
        number(s.body(n));
        break;
      default:
        break;
    }
  }

  std::string run(NodeId root) {
    number(root);
    std::ostringstream out;
    for (NodeId n : order) {
      uint32_t id = ids.at(n);
      switch (s.kind(n)) {
        case NodeKind::Plain: {
          out << "node " << id << " = { ";
          auto es = s.edges(n);
          for (size_t i = 0; i < es.size(); ++i) {
            if (i) out << "; ";
            out << s.symbols()[es[i].sym].name;
            if (!es[i].children.empty()) {
              out << '(';
              for (size_t j = 0; j < es[i].children.size(); ++j) {
                if (j) out << ", ";
                out << ids.at(es[i].children[j]);
              }
              out << ')';
            }
            const Pcs& pcs = s.pcs(es[i].pcs);
            if (!pcs.empty()) {
              out << " where ";
              for (size_t j = 0; j < pcs.classes.size(); ++j) {
                if (j) out << "; ";
                out << pec_to_string(pcs.classes[j]);
              }
            }
          }
          out << (es.empty() ? "}" : " }") << '\n';
          break;
        }
        case NodeKind::Mu:
          out << "mu " << id << " = " << ids.at(s.body(n)) << '\n';
          break;
        case NodeKind::Var:
          out << "var " << id << " = " << s.var_index(n) << '\n';
          break;
        case NodeKind::Free:
          out << "# free " << id << '\n';
          break;
      }
    }
    out << "root " << ids.at(root) << '\n';
    return out.str();
  }
};

}  // namespace

NodeId parse_ecta_text(NodeStore& s, const std::string& text) {
  Parser p{text};
  p.run();
  Builder b{s, p.descs};
  return b.build(*p.root);
}

std::string print_ecta_text(NodeStore& s, NodeId root) {
  Printer p{s};
  return p.run(root);
}

namespace {

std::string dot_escape(const std::string& in) {
  std::string out;
  for (char c : in) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(NodeStore& s, NodeId root) {
  std::ostringstream out;
  out << "digraph ecta {\n  rankdir=TB;\n  node [fontname=\"monospace\"];\n";
  std::unordered_map<NodeId, uint32_t> ids;
  std::vector<NodeId> mu_stack;
  uint32_t next_edge_box = 0;
  std::function<void(NodeId)> walk = [&](NodeId n) {
    if (ids.count(n)) return;
    uint32_t id = static_cast<uint32_t>(ids.size());
    ids.emplace(n, id);
    switch (s.kind(n)) {
      case NodeKind::Plain: {
        out << "  n" << id << " [shape=circle, label=\"n" << id << "\"];\n";
        for (const Edge& e : s.edges(n)) {
          uint32_t box = next_edge_box++;
          std::string label = dot_escape(s.symbols()[e.sym].name);
          const Pcs& pcs = s.pcs(e.pcs);
          for (const Pec& c : pcs.classes) label += "\\n" + dot_escape(pec_to_string(c));
          out << "  e" << box << " [shape=box, label=\"" << label << "\"];\n";
          out << "  n" << id << " -> e" << box << ";\n";
          for (size_t i = 0; i < e.children.size(); ++i) {
            walk(e.children[i]);
            out << "  e" << box << " -> n" << ids.at(e.children[i]) << " [label=\"" << i
                << "\"];\n";
          }
        }
        break;
      }
      case NodeKind::Mu: {
        out << "  n" << id << " [shape=diamond, label=\"mu\"];\n";
        mu_stack.push_back(n);
        walk(s.body(n));
        mu_stack.pop_back();
        out << "  n" << id << " -> n" << ids.at(s.body(n)) << ";\n";
        break;
      }
      case NodeKind::Var: {
        uint32_t k = s.var_index(n);
        out << "  n" << id << " [shape=point];\n";
        if (k < mu_stack.size()) {
          NodeId binder = mu_stack[mu_stack.size() - 1 - k];
          out << "  n" << id << " -> n" << ids.at(binder) << " [style=dashed];\n";
        }
        break;
      }
      case NodeKind::Free:
        out << "  n" << id << " [shape=point, label=\"free\"];\n";
        break;
    }
  };
  walk(root);
  out << "}\n";
  return out.str();
}

}  // namespace ecta
