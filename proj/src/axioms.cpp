#include "divmon/axioms.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "divmon/lattice.hpp"

namespace divmon {

char const* condition_name(Condition c) {
  switch (c) {
    case Condition::I: return "I";
    case Condition::II: return "II";
    case Condition::III: return "III";
  }
  return "?";
}

std::vector<Violation> check_condition_i(Monoid const& m) {
  std::vector<Violation> out;
  auto const&            p = m.presentation();
  auto const             k = static_cast<letter_type>(p.alphabet_size());
  for (letter_type x = 0; x < k; ++x) {
    for (letter_type y = 0; y < k; ++y) {
      for (letter_type z = 0; z < k; ++z) {
        auto L = divisor_lattice(m, m.element_of({x, y, z}));
        if (!L.is_lattice) {
          out.push_back({Condition::I,
                         {x, y, z},
                         fmt::format("divisors of {} {} {} do not form a "
                                     "lattice",
                                     p.name_of(x), p.name_of(y),
                                     p.name_of(z))});
        } else if (!lattice_is_distributive(L)) {
          out.push_back({Condition::I,
                         {x, y, z},
                         fmt::format("divisor lattice of {} {} {} is not "
                                     "distributive",
                                     p.name_of(x), p.name_of(y),
                                     p.name_of(z))});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_condition_ii(Monoid const& m) {
  std::vector<Violation> out;
  auto const&            p = m.presentation();
  auto const             k = static_cast<letter_type>(p.alphabet_size());
  for (letter_type x = 0; x < k; ++x) {
    for (letter_type y = 0; y < k; ++y) {
      for (letter_type z = 0; z < k; ++z) {
        for (letter_type y2 = 0; y2 < k; ++y2) {
          for (letter_type z2 = 0; z2 < k; ++z2) {
            bool const tails_equal = m.equal({y, z}, {y2, z2});
            if (!tails_equal && m.equal({x, y, z}, {x, y2, z2})) {
              out.push_back(
                  {Condition::II,
                   {x, y, z, y2, z2},
                   fmt::format("{0} {1} {2} = {0} {3} {4} but {1} {2} != "
                               "{3} {4}",
                               p.name_of(x), p.name_of(y), p.name_of(z),
                               p.name_of(y2), p.name_of(z2))});
            }
            if (!tails_equal && m.equal({y, z, x}, {y2, z2, x})) {
              out.push_back(
                  {Condition::II,
                   {x, y, z, y2, z2},
                   fmt::format("{1} {2} {0} = {3} {4} {0} but {1} {2} != "
                               "{3} {4}",
                               p.name_of(x), p.name_of(y), p.name_of(z),
                               p.name_of(y2), p.name_of(z2))});
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Violation> check_condition_iii(Monoid const& m) {
  std::vector<Violation> out;
  auto const&            p = m.presentation();
  auto const             k = static_cast<letter_type>(p.alphabet_size());
  for (letter_type x = 0; x < k; ++x) {
    for (letter_type y = 0; y < k; ++y) {
      for (letter_type z = 0; z < k; ++z) {
        if (y == z) {
          continue;
        }
        for (letter_type x2 = 0; x2 < k; ++x2) {
          if (x2 == x) {
            continue;
          }
          for (letter_type y2 = 0; y2 < k; ++y2) {
            if (!m.equal({x, y}, {x2, y2})) {
              continue;
            }
            for (letter_type z2 = 0; z2 < k; ++z2) {
              if (m.equal({x, z}, {x2, z2})) {
                out.push_back(
                    {Condition::III,
                     {x, y, z, x2, y2, z2},
                     fmt::format("{0} {1} = {3} {4} and {0} {2} = {3} {5} "
                                 "with {1} != {2} but {0} != {3}",
                                 p.name_of(x), p.name_of(y), p.name_of(z),
                                 p.name_of(x2), p.name_of(y2),
                                 p.name_of(z2))});
              }
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport check_all(Monoid const& m) {
  CheckReport r;
  auto const  k = m.presentation().alphabet_size();
  r.scanned_i   = k * k * k;
  r.scanned_ii  = 2 * k * k * k * k * k;
  r.scanned_iii = k * k * k * k * (k * k - k);
  for (auto&& v : check_condition_i(m)) {
    r.failures.push_back(std::move(v));
  }
  for (auto&& v : check_condition_ii(m)) {
    r.failures.push_back(std::move(v));
  }
  for (auto&& v : check_condition_iii(m)) {
    r.failures.push_back(std::move(v));
  }
  std::sort(r.failures.begin(), r.failures.end());
  r.passed = r.failures.empty();
  return r;
}

}  // namespace divmon
