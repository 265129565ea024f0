#include "divmon/normal_form.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace divmon {

NormalWord normalize_oracle(Monoid const& m, HypercubeTable const& table,
                            Element a) {
  NormalWord out;
  while (!a.is_identity()) {
    auto h = max_hypercube(m, table, a);
    if (h.is_trivial()) {
      throw InvalidMonoidError(
          "maximal hypercube of a non-trivial element is trivial");
    }
    out.factors.push_back(h.id);
    a = m.right_quotient(a, h.element);
  }
  std::reverse(out.factors.begin(), out.factors.end());
  return out;
}

bool is_normal_pair(Monoid const& m, HypercubeTable const& table, cube_id a,
                    cube_id b) {
  if (a == HypercubeTable::trivial || b == HypercubeTable::trivial) {
    throw DomainError("is_normal_pair: factors must be non-trivial");
  }
  auto const prod = m.product(table[a].element, table[b].element);
  return max_hypercube(m, table, prod).id == b;
}

bool is_normal_word(Monoid const& m, HypercubeTable const& table,
                    std::span<cube_id const> factors) {
  for (size_t i = 0; i + 1 < factors.size(); ++i) {
    if (!is_normal_pair(m, table, factors[i], factors[i + 1])) {
      return false;
    }
  }
  return true;
}

namespace {

cube_id require_cube(HypercubeTable const& table, Element const& e,
                     char const* what) {
  auto id = table.by_element(e);
  if (!id.has_value()) {
    throw InvalidMonoidError(
        fmt::format("{} is not a hypercube (length {})", what, e.length()));
  }
  return *id;
}

}  // namespace

NormalWord left_mult_update(Monoid const& m, HypercubeTable const& table,
                            cube_id y, NormalWord const& f) {
  // y_m = y; y_{i-1} = h(y_i h_i); h'_i with y_i h_i = h'_i y_{i-1}.
  Element    carry = table[y].element;
  NormalWord out;
  for (auto hid : f.factors) {
    auto const prod  = m.product(carry, table[hid].element);
    auto const next  = max_hypercube(m, table, prod);
    auto const front = m.right_quotient(prod, next.element);
    require_cube(table, front, "left-multiplication factor");
    if (!front.is_identity()) {
      out.factors.push_back(*table.by_element(front));
    }
    carry = next.element;
  }
  if (!carry.is_identity()) {
    out.factors.push_back(require_cube(table, carry, "trailing factor"));
  }
  return out;
}

NormalWord right_mult_update(Monoid const& m, HypercubeTable const& table,
                             NormalWord const& f, cube_id z) {
  // z_0 = z; h''_i = h(h_i z_{i-1}); z_i with z_i h''_i = h_i z_{i-1},
  // walking the factors of f right to left.
  Element              carry = table[z].element;
  std::vector<cube_id> body;
  for (size_t i = f.factors.size(); i-- > 0;) {
    auto const prod = m.product(table[f.factors[i]].element, carry);
    auto const head = max_hypercube(m, table, prod);
    if (head.is_trivial()) {
      throw InvalidMonoidError(
          "maximal hypercube of a non-trivial product is trivial");
    }
    body.push_back(head.id);
    carry = m.right_quotient(prod, head.element);
  }
  NormalWord out;
  if (!carry.is_identity()) {
    out.factors.push_back(require_cube(table, carry, "leading factor"));
  }
  std::reverse(body.begin(), body.end());
  out.factors.insert(out.factors.end(), body.begin(), body.end());
  return out;
}

namespace {

int bounded_distance(Monoid const& m, HypercubeTable const& table,
                     Element const& a, Element const& b, bool left) {
  if (a == b) {
    return 0;
  }
  auto const diff = a.length() < b.length() ? b.length() - a.length()
                                            : a.length() - b.length();
  if (diff > table.max_cube_length()) {
    return 2;
  }
  auto const& shorter = a.length() <= b.length() ? a : b;
  auto const& longer  = a.length() <= b.length() ? b : a;
  for (auto const& c : table.cubes()) {
    if (c.is_trivial() || c.length() != diff) {
      continue;
    }
    auto const prod = left ? m.product(c.element, shorter)
                           : m.product(shorter, c.element);
    if (prod == longer) {
      return 1;
    }
  }
  return 2;
}

}  // namespace

int bounded_distance_left(Monoid const& m, HypercubeTable const& table,
                          Element const& a, Element const& b) {
  return bounded_distance(m, table, a, b, true);
}

int bounded_distance_right(Monoid const& m, HypercubeTable const& table,
                           Element const& a, Element const& b) {
  return bounded_distance(m, table, a, b, false);
}

Element product_of(Monoid const& m, HypercubeTable const& table,
                   std::span<cube_id const> factors) {
  Word w;
  for (auto id : factors) {
    auto const& rep = table[id].element.canonical();
    w.insert(w.end(), rep.begin(), rep.end());
  }
  return m.element_of(w);
}

size_t total_length(HypercubeTable const& table, NormalWord const& f) {
  size_t n = 0;
  for (auto id : f.factors) {
    n += table[id].length();
  }
  return n;
}

std::string render(NormalWord const& f, HypercubeTable const& table,
                   Presentation const& p) {
  if (f.factors.empty()) {
    return "1";
  }
  std::string out;
  for (size_t i = 0; i < f.factors.size(); ++i) {
    if (i != 0) {
      out += '.';
    }
    out += table.render(f.factors[i], p);
  }
  return out;
}

}  // namespace divmon
