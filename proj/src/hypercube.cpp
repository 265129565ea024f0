#include "divmon/hypercube.hpp"

#include <algorithm>
#include <deque>

#include <fmt/format.h>

namespace divmon {

std::optional<cube_id> HypercubeTable::by_atoms(
    std::vector<letter_type> const& atoms) const {
  auto it = by_atoms_.find(atoms);
  if (it == by_atoms_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<cube_id> HypercubeTable::by_element(Element const& e) const {
  auto it = by_element_.find(e.canonical());
  if (it == by_element_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<cube_id> HypercubeTable::full_cube() const {
  size_t alphabet = 0;
  for (auto const& c : cubes_) {
    alphabet += c.length() == 1 ? 1 : 0;
  }
  for (auto const& c : cubes_) {
    if (c.length() == alphabet && alphabet > 0) {
      return c.id;
    }
  }
  return std::nullopt;
}

std::string HypercubeTable::render(cube_id id, Presentation const& p) const {
  auto const& c = cubes_.at(id);
  if (c.is_trivial()) {
    return "1";
  }
  if (c.atoms.size() == 1) {
    return p.name_of(c.atoms[0]);
  }
  std::string out = "[";
  for (size_t i = 0; i < c.atoms.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += p.name_of(c.atoms[i]);
  }
  out += ']';
  return out;
}

HypercubeTable enumerate_hypercubes(Monoid const& m) {
  HypercubeTable table;
  auto const     k = m.presentation().alphabet_size();

  // All subsets of the generators, ordered by (size, lexicographic content).
  std::vector<std::vector<letter_type>> subsets;
  for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
    std::vector<letter_type> s;
    for (size_t i = 0; i < k; ++i) {
      if (mask & (uint64_t(1) << i)) {
        s.push_back(static_cast<letter_type>(i));
      }
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](auto const& a, auto const& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });

  for (auto const& atoms : subsets) {
    Element e;
    if (!atoms.empty()) {
      std::vector<Element> gens;
      for (auto x : atoms) {
        gens.push_back(m.generator(x));
      }
      auto lcm = m.right_lcm(gens, atoms.size());
      if (!lcm.has_value()) {
        continue;
      }
      e = *lcm;
      if (e.length() != atoms.size()) {
        throw InvalidMonoidError(fmt::format(
            "lcm of {} generators has length {}", atoms.size(), e.length()));
      }
      if (m.irreducible_left_divisors(e) != atoms) {
        throw InvalidMonoidError(
            "hypercube atom set is not recoverable from its element");
      }
    }
    auto id = static_cast<cube_id>(table.cubes_.size());
    if (!table.by_element_.emplace(e.canonical(), id).second) {
      throw InvalidMonoidError(
          "distinct atom sets produced the same hypercube element");
    }
    table.by_atoms_.emplace(atoms, id);
    table.max_length_ = std::max(table.max_length_, atoms.size());
    table.cubes_.push_back(Hypercube{id, atoms, e});
  }
  return table;
}

Hypercube max_hypercube(Monoid const& m, HypercubeTable const& table,
                        Element const& a) {
  if (a.is_identity()) {
    return table[HypercubeTable::trivial];
  }
  auto const X = m.irreducible_right_divisors(a);
  auto const p = X.size();
  std::vector<Element> candidates;
  for (auto const& d : m.right_divisors(a)) {
    if (d.length() != p) {
      continue;
    }
    bool ok = true;
    for (auto x : X) {
      if (!m.is_right_divisor(m.generator(x), d)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      candidates.push_back(d);
    }
  }
  if (candidates.size() != 1) {
    throw InvalidMonoidError(fmt::format(
        "maximal hypercube of an element of length {} is not unique "
        "({} candidates)",
        a.length(), candidates.size()));
  }
  auto id = table.by_element(candidates.front());
  if (!id.has_value()) {
    throw InvalidMonoidError(
        "maximal right divisor is not in the hypercube table");
  }
  return table[*id];
}

size_t HypercubeGraph::index_of(cube_id v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) {
    throw DomainError(fmt::format("unknown hypercube-graph vertex {}", v));
  }
  return static_cast<size_t>(it - vertices.begin());
}

HypercubeGraph hypercube_graph(Monoid const& m, HypercubeTable const& table) {
  HypercubeGraph g;
  for (auto const& c : table.cubes()) {
    if (!c.is_trivial()) {
      g.vertices.push_back(c.id);
    }
  }
  auto const n = g.vertices.size();
  g.adj.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      auto const& a = table[g.vertices[i]];
      auto const& b = table[g.vertices[j]];
      auto        h = max_hypercube(m, table, m.product(a.element, b.element));
      g.adj[i][j]   = h.id == b.id;
    }
  }
  return g;
}

bool reachable(HypercubeGraph const& g, cube_id from, cube_id to) {
  auto const        src = g.index_of(from);
  auto const        dst = g.index_of(to);
  std::vector<bool> seen(g.vertices.size(), false);
  std::deque<size_t> queue{src};
  seen[src] = true;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur == dst) {
      return true;
    }
    for (size_t j = 0; j < g.vertices.size(); ++j) {
      if (g.adj[cur][j] && !seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return false;
}

bool strongly_connected(HypercubeGraph const&       g,
                        std::vector<cube_id> const& restrict_to) {
  if (restrict_to.empty()) {
    return true;
  }
  std::vector<size_t> idx;
  for (auto v : restrict_to) {
    idx.push_back(g.index_of(v));
  }
  auto bfs = [&](bool forward) {
    std::vector<bool>  seen(g.vertices.size(), false);
    std::deque<size_t> queue{idx[0]};
    seen[idx[0]] = true;
    auto in_set  = [&](size_t i) {
      return std::find(idx.begin(), idx.end(), i) != idx.end();
    };
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < g.vertices.size(); ++j) {
        bool const edge = forward ? g.adj[cur][j] : g.adj[j][cur];
        if (edge && !seen[j] && in_set(j)) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    return std::all_of(idx.begin(), idx.end(),
                       [&](size_t i) { return seen[i]; });
  };
  return bfs(true) && bfs(false);
}

std::vector<cube_id> default_scc_vertices(HypercubeTable const& table) {
  std::vector<cube_id> out;
  auto const           full = table.full_cube();
  for (auto const& c : table.cubes()) {
    if (c.is_trivial() || (full.has_value() && c.id == *full)) {
      continue;
    }
    out.push_back(c.id);
  }
  return out;
}

std::string export_dot(HypercubeGraph const& g, HypercubeTable const& table,
                       Presentation const& p) {
  std::string out = "digraph hypercubes {\n";
  for (auto v : g.vertices) {
    out += fmt::format("  n{} [label=\"{} : {}\"];\n", v, table.render(v, p),
                       p.word_to_string(table[v].element.canonical()));
  }
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    for (size_t j = 0; j < g.vertices.size(); ++j) {
      if (g.adj[i][j]) {
        out += fmt::format("  n{} -> n{};\n", g.vertices[i], g.vertices[j]);
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace divmon
