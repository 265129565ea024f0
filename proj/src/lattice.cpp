#include "divmon/lattice.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace divmon {

namespace {

void fill_tables(DivisorLattice& L) {
  auto const n = L.size();
  L.join.assign(n, std::vector<int32_t>(n, -1));
  L.meet.assign(n, std::vector<int32_t>(n, -1));
  L.is_lattice = true;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      int32_t lub = -1;
      for (size_t k = 0; k < n; ++k) {
        if (!L.leq[i][k] || !L.leq[j][k]) {
          continue;
        }
        bool least = true;
        for (size_t l = 0; l < n; ++l) {
          if (L.leq[i][l] && L.leq[j][l] && !L.leq[k][l]) {
            least = false;
            break;
          }
        }
        if (least) {
          lub = static_cast<int32_t>(k);
          break;
        }
      }
      int32_t glb = -1;
      for (size_t k = 0; k < n; ++k) {
        if (!L.leq[k][i] || !L.leq[k][j]) {
          continue;
        }
        bool greatest = true;
        for (size_t l = 0; l < n; ++l) {
          if (L.leq[l][i] && L.leq[l][j] && !L.leq[l][k]) {
            greatest = false;
            break;
          }
        }
        if (greatest) {
          glb = static_cast<int32_t>(k);
          break;
        }
      }
      L.join[i][j] = lub;
      L.meet[i][j] = glb;
      if (lub < 0 || glb < 0) {
        L.is_lattice = false;
      }
    }
  }
}

// Kuhn's augmenting-path matching on the strict-order bipartite graph.
bool try_augment(std::vector<std::vector<bool>> const& edge, size_t u,
                 std::vector<int32_t>& match_to, std::vector<bool>& used) {
  for (size_t v = 0; v < edge[u].size(); ++v) {
    if (!edge[u][v] || used[v]) {
      continue;
    }
    used[v] = true;
    if (match_to[v] < 0
        || try_augment(edge, static_cast<size_t>(match_to[v]), match_to,
                       used)) {
      match_to[v] = static_cast<int32_t>(u);
      return true;
    }
  }
  return false;
}

}  // namespace

size_t DivisorLattice::index_of(Element const& e) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), e);
  if (it == carrier.end() || !(*it == e)) {
    throw DomainError(
        fmt::format("element of length {} is not in the lattice carrier",
                    e.length()));
  }
  return static_cast<size_t>(it - carrier.begin());
}

DivisorLattice divisor_lattice(Monoid const& m, Element const& a) {
  DivisorLattice L;
  L.top     = a;
  L.carrier = m.left_divisors(a);
  auto const n = L.carrier.size();
  L.leq.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      L.leq[i][j] = m.is_left_divisor(L.carrier[i], L.carrier[j]);
    }
  }
  fill_tables(L);
  return L;
}

DivisorLattice lattice_from_order(std::vector<Element>           carrier,
                                  std::vector<std::vector<bool>> leq) {
  DivisorLattice L;
  L.carrier = std::move(carrier);
  L.leq     = std::move(leq);
  auto const n = L.size();
  if (L.leq.size() != n) {
    throw DomainError("lattice_from_order: order table size mismatch");
  }
  L.top = L.carrier.empty() ? Element() : L.carrier.back();
  for (size_t k = 0; k < n; ++k) {
    bool maximal = true;
    for (size_t l = 0; l < n; ++l) {
      if (l != k && !L.leq[l][k]) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      L.top = L.carrier[k];
      break;
    }
  }
  fill_tables(L);
  return L;
}

bool lattice_is_distributive(DivisorLattice const& L) {
  if (!L.is_lattice) {
    throw DomainError("lattice_is_distributive: poset is not a lattice");
  }
  auto const n = L.size();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      for (size_t c = 0; c < n; ++c) {
        auto lhs = L.meet[a][static_cast<size_t>(L.join[b][c])];
        auto rhs = L.join[static_cast<size_t>(L.meet[a][b])]
                         [static_cast<size_t>(L.meet[a][c])];
        if (lhs != rhs) {
          return false;
        }
      }
    }
  }
  return true;
}

size_t lattice_width(DivisorLattice const& L) {
  auto const n = L.size();
  if (n == 0) {
    return 0;
  }
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      edge[i][j] = i != j && L.leq[i][j];
    }
  }
  std::vector<int32_t> match_to(n, -1);
  size_t               matched = 0;
  for (size_t u = 0; u < n; ++u) {
    std::vector<bool> used(n, false);
    if (try_augment(edge, u, match_to, used)) {
      ++matched;
    }
  }
  return n - matched;
}

}  // namespace divmon
