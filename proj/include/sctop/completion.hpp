#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sctop/error.hpp"
#include "sctop/maps.hpp"
#include "sctop/space.hpp"

namespace sctop {

/// The SI-closed sets of a space with the lower Vietoris topology, generated
/// by the sets <>U = {C | C meets U} for SI-open U.
struct GammaSI {
  FinSpace base;
  /// SI-closed subsets of `base`, canonical order; element i of `space` is elements[i].
  SubsetFamily elements;
  FinSpace space;

  const Subset& label(std::size_t i) const { return elements[i]; }
  std::size_t size() const noexcept { return elements.size(); }
};

/// Indices of the elements of `g` meeting U.
inline Subset diamond(const GammaSI& g, const Subset& u) {
  Subset out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.elements[i].intersects(u)) out.insert(i);
  return out;
}

inline GammaSI gamma_si(const FinSpace& x, std::size_t cap = kDefaultCap) {
  GammaSI g;
  g.base = x;
  g.elements = si_closed_sets(x, cap);
  std::vector<Subset> subbase;
  for (const auto& u : si_opens(x, cap)) subbase.push_back(diamond(g, u));
  g.space = FinSpace::from_trusted_opens(g.size(), topology_generated_by(g.size(), subbase));
  return g;
}

namespace detail {
inline void check_base(const FinSpace& x, const GammaSI& g) {
  if (!(g.base == x)) throw Error(ErrorKind::SpaceMismatch, "hyperspace was built from a different space");
}
}  // namespace detail

/// eta(p) = cl{p} as an index into the hyperspace.
inline std::vector<std::size_t> point_closure_indices(const FinSpace& x, const GammaSI& g) {
  detail::check_base(x, g);
  std::vector<std::size_t> out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    auto idx = g.elements.index_of(closure(x, Subset::singleton(x.size(), p)));
    if (!idx) throw Error(ErrorKind::SpaceMismatch, "point closure is not SI-closed");
    out[p] = *idx;
  }
  return out;
}

/// The point closures {cl{p} | p in X}, as a set of hyperspace indices.
inline Subset psi(const FinSpace& x, const GammaSI& g) {
  Subset out(g.size());
  for (auto i : point_closure_indices(x, g)) out.insert(i);
  return out;
}

struct CompletionWitnesses {
  bool eta_si_plus_continuous = false;
  bool completion_strongly_complete = false;
};

struct CompletionResult {
  FinSpace source;
  GammaSI gamma;
  Subset psi_image;
  /// I-closure of psi_image inside the hyperspace.
  Subset closure_image;
  /// members[j] is the hyperspace index of completion point j.
  std::vector<std::size_t> members;
  FinSpace completion;
  /// The unit, corestricted to the completion.
  SpaceMap eta;
  CompletionWitnesses witnesses;
};

/// The subspace cl_I(psi(X)) of the hyperspace, with the unit p -> cl{p}.
inline CompletionResult strong_completion(const FinSpace& x, std::size_t cap = kDefaultCap) {
  CompletionResult r;
  r.source = x;
  r.gamma = gamma_si(x, cap);
  r.psi_image = psi(x, r.gamma);
  r.closure_image = cl_i(r.gamma.space, r.psi_image, cap);
  r.members = r.closure_image.indices();
  r.completion = subspace(r.gamma.space, r.closure_image);
  const auto into_gamma = point_closure_indices(x, r.gamma);
  std::vector<std::size_t> eta(x.size());
  for (std::size_t p = 0; p < x.size(); ++p)
    eta[p] = static_cast<std::size_t>(std::lower_bound(r.members.begin(), r.members.end(), into_gamma[p]) -
                                      r.members.begin());
  r.eta = SpaceMap(x, r.completion, std::move(eta));
  r.witnesses.eta_si_plus_continuous = is_si_plus_continuous(r.eta, cap);
  r.witnesses.completion_strongly_complete = is_strongly_complete(r.completion, cap);
  return r;
}

/// C -> cl_SI(f(C)), a map between the hyperspaces of f's source and target.
inline SpaceMap f_star(const SpaceMap& f, const GammaSI& gx, const GammaSI& gz, std::size_t cap = kDefaultCap) {
  detail::check_base(f.src(), gx);
  detail::check_base(f.dst(), gz);
  if (!is_si_plus_continuous(f, cap)) throw Error(ErrorKind::NotSIPlusContinuous, "f* needs an SI+-continuous map");
  std::vector<std::size_t> t(gx.size());
  for (std::size_t i = 0; i < gx.size(); ++i) {
    auto idx = gz.elements.index_of(si_closure(f.dst(), f.image(gx.elements[i]), cap));
    t[i] = *idx;  // an SI-closure is always SI-closed
  }
  return SpaceMap(gx.space, gz.space, std::move(t));
}

/// Inverse of the unit on psi(Z): cl{z} -> z. The source is the subspace
/// psi(Z) of the hyperspace, indexed in increasing hyperspace order.
inline SpaceMap k_map(const FinSpace& z, const GammaSI& gz, std::size_t cap = kDefaultCap) {
  detail::check_base(z, gz);
  if (!is_strongly_complete(z, cap)) throw Error(ErrorKind::NotStronglyComplete, "k needs a strongly complete target");
  const auto into_gamma = point_closure_indices(z, gz);
  Subset p(gz.size());
  for (auto i : into_gamma) p.insert(i);
  const auto idx = p.indices();
  std::vector<std::size_t> t(idx.size());
  for (std::size_t q = 0; q < z.size(); ++q)
    t[static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), into_gamma[q]) - idx.begin())] = q;
  return SpaceMap(subspace(gz.space, p), z, std::move(t));
}

/// The extension k . f* of f along the unit of `c`.
inline SpaceMap extend(const SpaceMap& f, const CompletionResult& c, std::size_t cap = kDefaultCap) {
  if (!(f.src() == c.source)) throw Error(ErrorKind::SpaceMismatch, "completion was built for a different source");
  const FinSpace& z = f.dst();
  if (!is_strongly_complete(z, cap)) throw Error(ErrorKind::NotStronglyComplete, "extension target is not strongly complete");
  const GammaSI gz = gamma_si(z, cap);
  const SpaceMap fs = f_star(f, c.gamma, gz, cap);
  const SpaceMap k = k_map(z, gz, cap);
  const auto psi_z = psi(z, gz).indices();
  std::vector<std::size_t> t(c.members.size());
  for (std::size_t j = 0; j < c.members.size(); ++j) {
    const std::size_t target = fs(c.members[j]);
    auto it = std::lower_bound(psi_z.begin(), psi_z.end(), target);
    if (it == psi_z.end() || *it != target)
      throw Error(ErrorKind::NotStronglyComplete, "f* leaves the point closures of the target");
    t[j] = k(static_cast<std::size_t>(it - psi_z.begin()));
  }
  return SpaceMap(c.completion, z, std::move(t));
}

// ---------------------------------------------------------------------------
// Homeomorphisms and relabelings

/// The space with point i renamed to perm[i].
inline FinSpace relabel(const FinSpace& x, const std::vector<std::size_t>& perm) {
  std::vector<Subset> opens;
  for (const auto& u : x.opens()) opens.push_back(image(u, perm, x.size()));
  return FinSpace::from_trusted_opens(x.size(), std::move(opens));
}

/// Searches for a homeomorphism a -> b that agrees with `fixed` wherever it
/// is set. Order-isomorphisms are tried first; when none exists and the
/// spaces have at most `permutation_bound` points, every bijection is tried.
inline std::optional<SpaceMap> find_homeomorphism(const FinSpace& a, const FinSpace& b,
                                                  const std::vector<std::optional<std::size_t>>& fixed = {},
                                                  std::size_t permutation_bound = 8) {
  const std::size_t n = a.size();
  if (b.size() != n || a.opens().size() != b.opens().size()) return std::nullopt;
  auto allowed = [&](std::size_t i, std::size_t j) { return i >= fixed.size() || !fixed[i] || *fixed[i] == j; };

  std::vector<std::size_t> t(n);
  std::vector<bool> used(n, false);
  std::optional<SpaceMap> found;
  auto order_search = [&](auto&& self, std::size_t i) -> void {
    if (found) return;
    if (i == n) {
      SpaceMap h(a, b, t);
      if (is_homeomorphism(h)) found = h;
      return;
    }
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (used[j] || !allowed(i, j)) continue;
      bool ok = a.order().up(i).count() == b.order().up(j).count();
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = a.order().leq(k, i) == b.order().leq(t[k], j) && a.order().leq(i, k) == b.order().leq(j, t[k]);
      if (!ok) continue;
      used[j] = true;
      t[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
  };
  order_search(order_search, 0);
  if (found || n > permutation_bound) return found;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = allowed(i, perm[i]);
    if (!ok) continue;
    SpaceMap h(a, b, perm);
    if (is_homeomorphism(h)) return h;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Universal property and uniqueness

struct FactorizationEntry {
  std::vector<std::size_t> f;
  std::vector<std::size_t> f_hat;
  bool f_hat_si_plus = false;
  bool factors = false;
  /// Number of SI+-continuous g on the completion with g . eta = f.
  std::size_t extensions = 0;
  /// Every such g coincides with f_hat.
  bool unique_is_f_hat = true;
  bool ok() const { return f_hat_si_plus && factors && extensions == 1 && unique_is_f_hat; }
};

struct UniversalPropertyReport {
  std::vector<FactorizationEntry> entries;
  std::size_t maps_checked = 0;
  bool ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); });
  }
};

/// For every SI+-continuous f: X -> Z, checks that k . f* is SI+-continuous,
/// extends f along the unit, and is the only SI+-continuous map doing so.
inline UniversalPropertyReport check_universal_property(const FinSpace& x, const FinSpace& z,
                                                        std::size_t bound = 4, std::size_t cap = kDefaultCap) {
  check_cap(x.size(), bound, "universal-property sweep (source)");
  check_cap(z.size(), bound, "universal-property sweep (target)");
  if (!is_strongly_complete(z, cap)) throw Error(ErrorKind::NotStronglyComplete, "target is not strongly complete");
  const CompletionResult c = strong_completion(x, cap);
  std::vector<SpaceMap> candidates;
  for_each_function(c.completion.size(), z.size(), [&](const std::vector<std::size_t>& t) {
    SpaceMap g(c.completion, z, t);
    if (is_si_plus_continuous(g, cap)) candidates.push_back(std::move(g));
  });

  UniversalPropertyReport rep;
  for_each_function(x.size(), z.size(), [&](const std::vector<std::size_t>& t) {
    ++rep.maps_checked;
    SpaceMap f(x, z, t);
    if (!is_si_plus_continuous(f, cap)) return;
    FactorizationEntry e;
    e.f = t;
    SpaceMap fh = extend(f, c, cap);
    e.f_hat = fh.table();
    e.f_hat_si_plus = is_si_plus_continuous(fh, cap);
    e.factors = compose(fh, c.eta).table() == t;
    for (const auto& g : candidates)
      if (compose(g, c.eta).table() == t) {
        ++e.extensions;
        if (g.table() != fh.table()) e.unique_is_f_hat = false;
      }
    rep.entries.push_back(std::move(e));
  });
  return rep;
}

/// Galois connection f*(C) <= A iff C <= f^-1(A) over all hyperspace pairs.
/// Returns the first failing pair (C index, A index), if any.
inline std::optional<std::pair<std::size_t, std::size_t>> check_adjunction(const SpaceMap& f, const GammaSI& gx,
                                                                          const GammaSI& gz,
                                                                          std::size_t cap = kDefaultCap) {
  const SpaceMap fs = f_star(f, gx, gz, cap);
  for (std::size_t c = 0; c < gx.size(); ++c)
    for (std::size_t a = 0; a < gz.size(); ++a) {
      const bool lhs = gz.elements[fs(c)].is_subset_of(gz.elements[a]);
      const bool rhs = gx.elements[c].is_subset_of(f.preimage(gz.elements[a]));
      if (lhs != rhs) return std::make_pair(c, a);
    }
  return std::nullopt;
}

struct RelabelingCheck {
  std::vector<std::size_t> permutation;
  std::optional<std::vector<std::size_t>> homeomorphism;
};

struct UniquenessReport {
  std::vector<RelabelingCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.homeomorphism.has_value(); });
  }
};

/// For every relabeling pi of X (or the ones given), finds a homeomorphism h
/// between the completions of X and pi(X) with h . eta = eta' . pi.
inline UniquenessReport check_uniqueness(const FinSpace& x, std::vector<std::vector<std::size_t>> perms = {},
                                         std::size_t cap = kDefaultCap) {
  if (perms.empty()) {
    check_cap(x.size(), 8, "relabeling sweep");
    std::vector<std::size_t> p(x.size());
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  const CompletionResult c = strong_completion(x, cap);
  UniquenessReport rep;
  for (const auto& perm : perms) {
    const FinSpace y = relabel(x, perm);
    const CompletionResult d = strong_completion(y, cap);
    std::vector<std::optional<std::size_t>> fixed(c.completion.size());
    for (std::size_t i = 0; i < x.size(); ++i) fixed[c.eta(i)] = d.eta(perm[i]);
    RelabelingCheck chk{perm, std::nullopt};
    if (auto h = find_homeomorphism(c.completion, d.completion, fixed)) chk.homeomorphism = h->table();
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace sctop
