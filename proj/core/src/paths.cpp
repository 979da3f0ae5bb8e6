#include "ecta/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

namespace ecta {

std::string path_to_string(const Path& p) {
  if (p.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

std::optional<Path> path_parse(const std::string& s) {
  if (s.empty() || s == "e") return Path{};
  Path p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t dot = s.find('.', pos);
    std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (tok.empty()) return std::nullopt;
    for (char ch : tok)
      if (ch < '0' || ch > '9') return std::nullopt;
    p.push_back(static_cast<uint32_t>(std::strtoul(tok.c_str(), nullptr, 10)));
    if (dot == std::string::npos) break;
    pos = dot + 1;
    if (pos == s.size()) return std::nullopt;  // trailing dot
  }
  return p;
}

bool path_is_prefix(const Path& a, const Path& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

Pec::Pec(std::vector<Path> ps) : paths(std::move(ps)) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
}

bool Pec::contains(const Path& p) const {
  return std::binary_search(paths.begin(), paths.end(), p);
}

bool pec_prefix_free(const Pec& c) {
  // Canonical order puts a prefix immediately before its extensions.
  for (size_t i = 0; i + 1 < c.paths.size(); ++i)
    if (path_is_prefix(c.paths[i], c.paths[i + 1])) return false;
  return true;
}

std::string pec_to_string(const Pec& c) {
  std::string out = "{";
  for (size_t i = 0; i < c.paths.size(); ++i) {
    if (i) out += '=';
    out += path_to_string(c.paths[i]);
  }
  out += '}';
  return out;
}

Pcs pcs_normalize(std::vector<Pec> classes) {
  // Union-find over class indices, joined whenever two classes share a path.
  std::vector<size_t> parent(classes.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::unordered_map<Path, size_t, PathHasher> owner;
  for (size_t i = 0; i < classes.size(); ++i) {
    for (const Path& p : classes[i].paths) {
      auto [it, fresh] = owner.emplace(p, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  std::unordered_map<size_t, std::vector<Path>> merged;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) continue;
    auto& dst = merged[find(i)];
    dst.insert(dst.end(), classes[i].paths.begin(), classes[i].paths.end());
  }
  Pcs out;
  out.classes.reserve(merged.size());
  for (auto& [root, paths] : merged) out.classes.emplace_back(std::move(paths));
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

std::string pcs_to_string(const Pcs& c) {
  std::string out = "{";
  for (size_t i = 0; i < c.classes.size(); ++i) {
    if (i) out += "; ";
    const Pec& cls = c.classes[i];
    for (size_t j = 0; j < cls.paths.size(); ++j) {
      if (j) out += '=';
      out += path_to_string(cls.paths[j]);
    }
  }
  out += '}';
  return out;
}

std::optional<Pcs> pcs_parse(const std::string& s) {
  std::string body = s;
  // Trim whitespace and the outer braces.
  auto trim = [](std::string& t) {
    size_t a = t.find_first_not_of(" \t");
    size_t b = t.find_last_not_of(" \t");
    t = (a == std::string::npos) ? "" : t.substr(a, b - a + 1);
  };
  trim(body);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') return std::nullopt;
  body = body.substr(1, body.size() - 2);
  trim(body);
  std::vector<Pec> classes;
  if (body.empty()) return pcs_normalize(classes);
  std::stringstream ss(body);
  std::string cls;
  while (std::getline(ss, cls, ';')) {
    trim(cls);
    if (cls.empty()) return std::nullopt;
    std::vector<Path> paths;
    std::stringstream cs(cls);
    std::string tok;
    while (std::getline(cs, tok, '=')) {
      trim(tok);
      auto p = path_parse(tok);
      if (!p) return std::nullopt;
      paths.push_back(std::move(*p));
    }
    if (paths.empty()) return std::nullopt;
    classes.emplace_back(std::move(paths));
  }
  return pcs_normalize(classes);
}

size_t path_hash(const Path& p) {
  size_t h = 1469598103934665603ull;
  for (uint32_t v : p) {
    h ^= v + 1;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ecta
