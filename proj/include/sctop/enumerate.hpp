#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sctop/error.hpp"
#include "sctop/order.hpp"
#include "sctop/space.hpp"

namespace sctop {

/// Every labeled partial order on n points, obtained by filtering the
/// off-diagonal relation matrices. Practical up to n = 5.
inline std::vector<FinPoset> all_posets(std::size_t n) {
  check_cap(n, 5, "poset enumeration");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::vector<FinPoset> out;
  const std::uint64_t total = std::uint64_t{1} << cells.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    std::vector<Subset> up(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
    bool antisym = true;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((m >> c) & 1U) up[cells[c].first].insert(cells[c].second);
    for (std::size_t i = 0; i < n && antisym; ++i)
      for (std::size_t j = i + 1; j < n && antisym; ++j)
        antisym = !(up[i].contains(j) && up[j].contains(i));
    if (!antisym) continue;
    bool trans = true;
    for (std::size_t i = 0; i < n && trans; ++i)
      up[i].for_each([&](std::size_t j) { trans = trans && up[j].is_subset_of(up[i]); });
    if (trans) out.push_back(FinPoset::from_up_sets(std::move(up)));
  }
  return out;
}

/// Every finite T0 space on at most max_n points (one per labeled poset,
/// since a finite T0 space is the Alexandroff space of its specialization).
inline std::vector<FinSpace> all_spaces_up_to(std::size_t max_n) {
  std::vector<FinSpace> out;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (const auto& p : all_posets(n)) out.push_back(alexandroff(p));
  return out;
}

/// A random poset on n points: each pair i < j is related with probability
/// `density` along a random linear extension, then closed transitively.
template <class Rng>
FinPoset random_poset(std::size_t n, Rng& rng, double density = 0.35) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(perm[i], perm[j]);
  return FinPoset::generated_by(n, pairs);
}

}  // namespace sctop
