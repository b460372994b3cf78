#pragma once

// Exhaustive property sweeps over small finite spaces, and the catalog
// ground truths with their truncation cross-checks.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sctop/catalog.hpp"
#include "sctop/completion.hpp"
#include "sctop/dsl.hpp"
#include "sctop/enumerate.hpp"
#include "sctop/error.hpp"
#include "sctop/maps.hpp"
#include "sctop/order.hpp"
#include "sctop/space.hpp"

namespace sctop::verify {

struct Violation {
  std::string property;
  /// The space (DSL text) or catalog entry the failure was found on.
  std::string subject;
  std::string witness;
};

struct SuiteReport {
  static constexpr std::size_t kKeep = 20;

  std::string name;
  std::size_t subjects = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// The first kKeep violations.
  std::vector<Violation> violations;
  double seconds = 0;

  bool ok() const noexcept { return failures == 0; }

  template <class W>
  void expect(bool cond, const std::string& property, const std::string& subject, W&& witness) {
    ++checks;
    if (cond) return;
    ++failures;
    if (violations.size() < kKeep) violations.push_back(Violation{property, subject, std::string(witness())});
  }
  void expect(bool cond, const std::string& property, const std::string& subject) {
    expect(cond, property, subject, [] { return std::string(); });
  }
};

struct Options {
  /// Largest space in the single-space sweeps.
  std::size_t max_size = 4;
  /// Largest space in the sweeps over maps and pairs of spaces.
  std::size_t pair_size = 3;
  std::size_t cap = kDefaultCap;
};

inline std::string text(const FinSpace& x) { return dsl::to_text({x, dsl::default_names(x.size())}); }
inline std::string text(const std::vector<std::size_t>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

namespace detail {

template <class Body>
SuiteReport timed(std::string name, Body&& body) {
  SuiteReport r;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  for_each_subset(n, [&](const Subset& s) { out.push_back(s); });
  return out;
}

}  // namespace detail

/// Irr = sets with a maximum (three routes agree), SI(X) = X, every set is
/// I-closed, and the completion unit is a homeomorphism.
inline SuiteReport finite_collapse(const Options& o = {}) {
  return detail::timed("finite collapse", [&](SuiteReport& r) {
    for (const auto& x : all_spaces_up_to(o.max_size)) {
      ++r.subjects;
      const std::string sx = text(x);
      for (const auto& f : detail::all_subsets(x.size())) {
        const bool lit = is_irreducible(x, f, IrrRoute::OpenPairs);
        r.expect(lit == is_irreducible(x, f, IrrRoute::Maximum), "irreducible iff nonempty with a maximum", sx,
                 [&] { return f.word(); });
        r.expect(lit == is_irreducible(x, f, IrrRoute::Neighbourhoods), "neighbourhood criterion agrees", sx,
                 [&] { return f.word(); });
        r.expect(cl_i(x, f, o.cap) == f, "cl_I is the identity", sx, [&] { return f.word(); });
      }
      r.expect(irr_enumerate(x, IrrRoute::OpenPairs, o.cap) == irr_enumerate(x, IrrRoute::Maximum, o.cap),
               "Irr enumerations agree", sx);
      r.expect(si_opens(x, o.cap) == x.opens(), "SI(X) = X", sx);
      r.expect(theta(x, o.cap).size() == (std::size_t{1} << x.size()), "every subset is I-closed", sx);
      r.expect(is_strongly_complete(x, o.cap), "finite spaces are strongly complete", sx);
      r.expect(is_dcpo(x, o.cap), "finite spaces are dcpos", sx);
      r.expect(is_sober(x, o.cap), "finite spaces are sober", sx);
      const CompletionResult c = strong_completion(x, o.cap);
      r.expect(is_homeomorphism(c.eta), "the unit is a homeomorphism onto the completion", sx,
               [&] { return "eta " + text(c.eta.table()); });
      std::vector<std::optional<std::size_t>> fixed(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) fixed[i] = c.eta(i);
      r.expect(find_homeomorphism(x, c.completion, fixed).has_value(), "homeomorphism search extends the unit", sx);
    }
  });
}

/// Elementary facts about irreducible sets.
inline SuiteReport irreducible_sets(const Options& o = {}) {
  return detail::timed("irreducible sets", [&](SuiteReport& r) {
    for (const auto& x : all_spaces_up_to(o.max_size)) {
      ++r.subjects;
      const std::string sx = text(x);
      const auto& p = x.order();
      for (std::size_t i = 0; i < x.size(); ++i)
        r.expect(is_irreducible(x, Subset::singleton(x.size(), i)), "singletons are irreducible", sx,
                 [&] { return std::to_string(i); });
      const auto subsets = detail::all_subsets(x.size());
      for (const auto& f : subsets) {
        const bool irr = is_irreducible(x, f);
        r.expect(irr == is_irreducible(x, closure(x, f)), "irreducible iff its closure is", sx,
                 [&] { return f.word(); });
        if (is_directed(p, f)) r.expect(irr, "directed sets are irreducible", sx, [&] { return f.word(); });
      }
      for (const auto& y : subsets) {
        if (y.empty()) continue;
        const FinSpace sub = subspace(x, y);
        const auto idx = y.indices();
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t b = 0; b < idx.size(); ++b)
            r.expect(sub.order().leq(a, b) == p.leq(idx[a], idx[b]), "subspace order is the restricted order", sx,
                     [&] { return y.word(); });
        for_each_subset(sub.size(), [&](const Subset& g) {
          const Subset in_x = image(g, idx, x.size());
          r.expect(is_irreducible(sub, g) == is_irreducible(x, in_x), "Irr(Y) = {F in Irr(X) | F inside Y}", sx,
                   [&] { return "Y=" + y.word() + " F=" + in_x.word(); });
        });
      }
    }
  });
}

/// Point closures, SI-closed sets, clopens and connectedness under SI.
inline SuiteReport si_topology(const Options& o = {}) {
  return detail::timed("SI topology", [&](SuiteReport& r) {
    for (const auto& x : all_spaces_up_to(o.max_size)) {
      ++r.subjects;
      const std::string sx = text(x);
      const FinSpace si = si_space(x, o.cap);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const Subset pt = Subset::singleton(x.size(), i);
        r.expect(closure(x, pt) == si_closure(x, pt, o.cap), "cl{x} = cl_SI{x}", sx, [&] { return std::to_string(i); });
      }
      for (const auto& c : detail::all_subsets(x.size())) {
        bool sup_closed = true;
        for (const auto& e : x.cached_irr_plus())
          if (e.set.is_subset_of(c) && !c.contains(e.sup)) sup_closed = false;
        r.expect(is_si_closed(x, c, o.cap) == (x.is_closed(c) && sup_closed),
                 "SI-closed iff closed and closed under Irr+ sups", sx, [&] { return c.word(); });
        r.expect(is_clopen(x, c) == is_clopen(si, c), "clopen in X iff clopen in SI(X)", sx, [&] { return c.word(); });
      }
      r.expect(is_connected(x) == is_connected(si), "X connected iff SI(X) connected", sx);
    }
  });
}

/// I-closed sets: upper sets, principal ideals, I-open description,
/// O cap Delta = O_SI, Irr(X) inside Irr(SI(X)), closure-system laws.
inline SuiteReport i_closed_sets(const Options& o = {}) {
  return detail::timed("I-closed sets", [&](SuiteReport& r) {
    for (const auto& x : all_spaces_up_to(o.max_size)) {
      ++r.subjects;
      const std::string sx = text(x);
      const auto& p = x.order();
      const FinSpace si = si_space(x, o.cap);
      const SubsetFamily th = theta(x, o.cap);
      const auto subsets = detail::all_subsets(x.size());
      for (const auto& a : subsets) {
        if (is_up_set(p, a)) r.expect(is_i_closed(x, a, o.cap), "upper sets are I-closed", sx, [&] { return a.word(); });
        bool hit = true;
        for (const auto& e : x.cached_irr_plus())
          if (a.contains(e.sup) && !e.set.intersects(a)) hit = false;
        r.expect(is_i_open(x, a, o.cap) == hit, "I-open iff met by every Irr+ set with supremum inside", sx,
                 [&] { return a.word(); });
        r.expect((x.is_open(a) && is_i_open(x, a, o.cap)) == si.is_open(a), "O cap Delta = O_SI", sx,
                 [&] { return a.word(); });
        if (is_irreducible(x, a))
          r.expect(is_irreducible(si, a), "Irr(X) inside Irr(SI(X))", sx, [&] { return a.word(); });
        const Subset c = cl_i(x, a, o.cap);
        r.expect(c == cl_i_by_intersection(x, a, o.cap), "cl_I fixpoint equals intersection of I-closed supersets",
                 sx, [&] { return a.word(); });
        r.expect(a.is_subset_of(c) && cl_i(x, c, o.cap) == c && th.contains(c), "cl_I is extensive and idempotent",
                 sx, [&] { return a.word(); });
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        const Subset d = p.down(i);
        const Subset pt = Subset::singleton(x.size(), i);
        r.expect(x.is_closed(d) && is_i_closed(x, d, o.cap) && is_si_closed(x, d, o.cap),
                 "principal ideals are closed, I-closed and SI-closed", sx, [&] { return std::to_string(i); });
        r.expect(closure(x, pt) == d && si_closure(x, pt, o.cap) == d, "cl{x} = cl_SI{x} = down x", sx,
                 [&] { return std::to_string(i); });
      }
      for (const auto& a : th)
        for (const auto& b : th)
          r.expect(th.contains(a & b), "I-closed sets are closed under intersection", sx,
                   [&] { return a.word() + " " + b.word(); });
      r.expect(th.contains(Subset::full(x.size())), "the carrier is I-closed", sx);
      if (is_strongly_complete(x, o.cap)) r.expect(is_dcpo(x, o.cap), "strongly complete spaces are dcpos", sx);
      if (is_sober(x, o.cap)) r.expect(is_strongly_complete(x, o.cap), "sober spaces are strongly complete", sx);
    }
  });
}

/// Continuity grades over every map between spaces of at most pair_size points.
inline SuiteReport continuity(const Options& o = {}) {
  return detail::timed("continuity hierarchy", [&](SuiteReport& r) {
    const auto spaces = all_spaces_up_to(o.pair_size);
    // SI+-continuous tables per (source, target) for the composition check.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> plus;
    for (std::size_t xi = 0; xi < spaces.size(); ++xi) {
      const FinSpace& x = spaces[xi];
      ++r.subjects;
      const auto subsets = detail::all_subsets(x.size());
      r.expect(is_si_continuous(SpaceMap::identity(x), o.cap), "identities are SI-continuous", text(x));
      for (std::size_t yi = 0; yi < spaces.size(); ++yi) {
        const FinSpace& y = spaces[yi];
        for_each_function(x.size(), y.size(), [&](const std::vector<std::size_t>& t) {
          const SpaceMap f(x, y, t);
          const ContinuityReport c = classify(f, o.cap);
          const std::string subj = text(x) + " -> " + text(y);
          auto w = [&] { return "f=" + text(t); };
          if (c.continuous) r.expect(c.monotone, "continuous maps are monotone", subj, w);
          if (c.si_continuous) {
            r.expect(c.monotone, "SI-continuous maps are monotone", subj, w);
            r.expect(c.preserves_irr_sups, "SI-continuous maps preserve Irr+ sups", subj, w);
          }
          if (c.monotone && c.i_continuous)
            r.expect(c.preserves_irr_sups, "monotone I-continuous maps preserve Irr+ sups", subj, w);
          if (c.continuous) {
            r.expect(c.i_continuous == c.si_continuous && c.si_continuous == c.preserves_irr_sups,
                     "for continuous maps: I-continuous iff SI-continuous iff Irr+ sups preserved", subj, w);
            for (const auto& a : subsets) {
              r.expect(f.image(closure(x, a)).is_subset_of(closure(y, f.image(a))), "f(cl A) inside cl f(A)", subj,
                       [&] { return w() + " A=" + a.word(); });
              if (is_irreducible(x, a))
                r.expect(is_irreducible(y, f.image(a)), "continuous images of irreducible sets are irreducible", subj,
                         [&] { return w() + " F=" + a.word(); });
            }
          }
          if (c.si_plus_continuous) {
            plus[{xi, yi}].push_back(t);
            for (const auto& a : subsets)
              r.expect(f.image(cl_i(x, a, o.cap)).is_subset_of(cl_i(y, f.image(a), o.cap)),
                       "f(cl_I A) inside cl_I f(A)", subj, [&] { return w() + " A=" + a.word(); });
          }
        });
      }
    }
    for (const auto& [xy, fs] : plus)
      for (std::size_t zi = 0; zi < spaces.size(); ++zi) {
        auto it = plus.find({xy.second, zi});
        if (it == plus.end()) continue;
        for (const auto& ft : fs)
          for (const auto& gt : it->second) {
            const SpaceMap f(spaces[xy.first], spaces[xy.second], ft);
            const SpaceMap g(spaces[xy.second], spaces[zi], gt);
            r.expect(is_si_plus_continuous(compose(g, f), o.cap), "SI+-continuous maps compose",
                     text(spaces[xy.first]) + " -> " + text(spaces[xy.second]) + " -> " + text(spaces[zi]),
                     [&] { return "f=" + text(ft) + " g=" + text(gt); });
          }
      }
  });
}

/// The SI-closed hyperspace: inclusion order, strong completeness, and the
/// lower Vietoris topology equal to the Alexandroff topology of inclusion.
inline SuiteReport hyperspace(const Options& o = {}) {
  return detail::timed("hyperspace", [&](SuiteReport& r) {
    for (const auto& x : all_spaces_up_to(o.max_size)) {
      ++r.subjects;
      const std::string sx = text(x);
      const GammaSI g = gamma_si(x, o.cap);
      const std::size_t n = g.size();
      std::vector<Subset> up(n, Subset(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const bool incl = g.elements[i].is_subset_of(g.elements[j]);
          r.expect(g.space.order().leq(i, j) == incl, "hyperspace specialization is inclusion", sx,
                   [&] { return g.elements[i].word() + " " + g.elements[j].word(); });
          if (incl) up[i].insert(j);
        }
      r.expect(g.elements.contains(Subset(x.size())), "the empty set is SI-closed", sx);
      r.expect(is_strongly_complete(g.space, o.cap), "the hyperspace is strongly complete", sx);
      r.expect(g.space.opens() == alexandroff(FinPoset::from_up_sets(std::move(up))).opens(),
               "lower Vietoris = Alexandroff of inclusion", sx);
      const CompletionResult c = strong_completion(x, o.cap);
      r.expect(c.witnesses.eta_si_plus_continuous, "the unit is SI+-continuous", sx);
      r.expect(c.witnesses.completion_strongly_complete, "the completion is strongly complete", sx);
      for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b)
          r.expect(x.order().leq(a, b) == c.completion.order().leq(c.eta(a), c.eta(b)),
                   "the unit is an order embedding", sx, [&] { return std::to_string(a) + " " + std::to_string(b); });
    }
  });
}

/// Factorization through the unit, the f* adjunction, and uniqueness of the
/// completion under relabeling.
inline SuiteReport universal_property(const Options& o = {}) {
  return detail::timed("universal property", [&](SuiteReport& r) {
    const auto spaces = all_spaces_up_to(o.pair_size);
    std::vector<GammaSI> gammas;
    for (const auto& x : spaces) gammas.push_back(gamma_si(x, o.cap));
    for (std::size_t xi = 0; xi < spaces.size(); ++xi) {
      const FinSpace& x = spaces[xi];
      ++r.subjects;
      for (std::size_t zi = 0; zi < spaces.size(); ++zi) {
        const FinSpace& z = spaces[zi];
        if (!is_strongly_complete(z, o.cap)) continue;
        const std::string subj = text(x) + " -> " + text(z);
        const UniversalPropertyReport u = check_universal_property(x, z, o.pair_size, o.cap);
        for (const auto& e : u.entries) {
          auto w = [&] { return "f=" + text(e.f) + " f^=" + text(e.f_hat); };
          r.expect(e.f_hat_si_plus, "the extension k.f* is SI+-continuous", subj, w);
          r.expect(e.factors, "the extension composed with the unit is f", subj, w);
          r.expect(e.extensions == 1 && e.unique_is_f_hat, "the extension is unique", subj,
                   [&] { return w() + " extensions=" + std::to_string(e.extensions); });
          const SpaceMap f(x, z, e.f);
          const SpaceMap fs = f_star(f, gammas[xi], gammas[zi], o.cap);
          auto bad = check_adjunction(f, gammas[xi], gammas[zi], o.cap);
          r.expect(!bad, "f*(C) inside A iff C inside f^-1(A)", subj, [&] {
            return w() + " C=" + gammas[xi].elements[bad->first].word() + " A=" + gammas[zi].elements[bad->second].word();
          });
          r.expect(is_si_plus_continuous(fs, o.cap), "f* is SI+-continuous", subj, w);
          r.expect(preserves_irr_sups(fs, o.cap), "f* preserves Irr+ sups", subj, w);
        }
      }
      const UniquenessReport q = check_uniqueness(x, {}, o.cap);
      for (const auto& chk : q.checks)
        r.expect(chk.homeomorphism.has_value(), "completions of relabelings are homeomorphic over the unit", text(x),
                 [&] { return "perm=" + text(chk.permutation); });
    }
  });
}

// ---------------------------------------------------------------------------
// Catalog

namespace detail {

inline std::vector<OpenForm> open_probes(const SymbolicSpace& s, std::size_t n) {
  std::vector<OpenForm> out{EmptyOpen{}, WholeOpen{}, FiniteOpen{}};
  std::vector<Point> prefix;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = s.point_at(i);
    out.push_back(UpFrom{p});
    out.push_back(FiniteOpen{{p}});
    prefix.push_back(p);
    out.push_back(CofiniteOpen{prefix});
    out.push_back(CofinitePlusTop{prefix});
    out.push_back(CofiniteOpen{{p}});
  }
  return out;
}

inline std::optional<bool> try_bool(const std::function<bool()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnsupportedForm || e.kind() == ErrorKind::UnsupportedDescriptor ||
        e.kind() == ErrorKind::IndexOutOfRange)
      return std::nullopt;
    throw;
  }
}

}  // namespace detail

/// Compares each catalog entry with its first n points, n <= max_n, as a
/// finite subspace: order, irreducibility, directedness, suprema, closures
/// and traces of opens.
inline void truncation_consistency(SuiteReport& r, const SymbolicSpace& s, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const FinSpace t = truncate(s, n);
    const std::string subj = s.id() + " truncated to " + std::to_string(n);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(s.point_at(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r.expect(t.order().leq(i, j) == s.leq(pts[i], pts[j]), "truncation order is the inherited order", subj);
    for_each_subset(n, [&](const Subset& f) {
      if (f.empty()) return;
      std::vector<Point> fp;
      f.for_each([&](std::size_t i) { fp.push_back(pts[i]); });
      const FiniteSet d{fp};
      auto w = [&] {
        std::string out;
        for (auto p : fp) out += (out.empty() ? "" : ",") + s.show(p);
        return "{" + out + "}";
      };
      r.expect(s.is_irreducible(d) == is_irreducible(t, f), "irreducibility agrees with the truncation", subj, w);
      r.expect(s.is_directed(d) == is_directed(t.order(), f), "directedness agrees with the truncation", subj, w);
      const auto sp = s.sup(d);
      if (auto m = maximum(t.order(), f)) r.expect(sp && *sp == pts[*m], "a maximum is the supremum", subj, w);
      if (sp) {
        auto it = std::find(pts.begin(), pts.end(), *sp);
        if (it != pts.end())
          r.expect(sup(t.order(), f) == std::optional<std::size_t>(it - pts.begin()),
                   "a supremum inside the truncation is its supremum there", subj, w);
      }
      const ClosedForm c = s.closure_of_finite(fp);
      Subset trace(n);
      for (std::size_t i = 0; i < n; ++i)
        if (s.in_closed(c, pts[i])) trace.insert(i);
      r.expect(trace == closure(t, f), "closure traces to the truncation closure", subj, w);
    });
    for (const auto& u : detail::open_probes(s, n)) {
      auto open = detail::try_bool([&] { return s.is_open(u); });
      if (!open || !*open) continue;
      Subset trace(n);
      bool supported = true;
      for (std::size_t i = 0; i < n && supported; ++i) {
        auto in = detail::try_bool([&] { return s.in_open(u, pts[i]); });
        if (!in) supported = false;
        else if (*in) trace.insert(i);
      }
      if (supported)
        r.expect(t.is_open(trace), "opens trace to opens of the truncation", subj,
                 [&] { return sctop::detail::form_name(u) + " " + trace.word(); });
    }
  }
}

/// Ground truths for the catalog entries, each guarded by truncation checks.
inline SuiteReport catalog(std::size_t max_truncation = 10) {
  return detail::timed("catalog", [&](SuiteReport& r) {
    for (const auto& name : catalog_names()) {
      ++r.subjects;
      truncation_consistency(r, *catalog_lookup(name), max_truncation);
    }

    // omega completes to omega + 1.
    const auto omega = catalog_lookup("omega");
    const SymbolicCompletion co = sym_strong_completion(omega);
    const SymbolicSpace& w1 = *co.space;
    const Point top = OmegaPlusOneScott::kOmega;
    r.expect(w1.id() == "omega_plus_one_scott", "SC(omega) is omega+1", "omega");
    r.expect(co.new_points == std::vector<Point>{top}, "SC(omega) adds exactly one point", "omega");
    r.expect(co.summary == "ω+1; one new top; η = inclusion", "completion summary", "omega");
    r.expect(std::holds_alternative<WholeClosed>(co.label(top)), "the new point is the whole space", "omega");
    for (Point i = 0; i < 64; ++i) {
      r.expect(co.eta(i) == i, "eta is the inclusion", "omega", [&] { return std::to_string(i); });
      r.expect(w1.leq(i, top) && !w1.leq(top, i), "the new point is a top", "omega+1",
               [&] { return std::to_string(i); });
      for (Point j = 0; j < 64; ++j)
        r.expect(w1.leq(i, j) == (i <= j) && omega->leq(i, j) == (i <= j), "the first 64 points form a chain",
                 "omega+1", [&] { return std::to_string(i) + " " + std::to_string(j); });
      const ClosedForm lab = co.label(i);
      bool ideal = true;
      for (Point j = 0; j < 64; ++j) ideal = ideal && (omega->in_closed(lab, j) == (j <= i));
      r.expect(ideal, "eta(n) is the principal ideal of n", "omega", [&] { return std::to_string(i); });
    }
    r.expect(w1.sup(ChainTail{0}) == std::optional<Point>(top), "sup of the naturals in omega+1 is the top", "omega+1");
    r.expect(!omega->sup(ChainTail{0}).has_value(), "the naturals have no sup in omega", "omega");
    r.expect(w1.is_strongly_complete() && !omega->is_strongly_complete(), "omega+1 is sc and omega is not", "omega");
    for (std::size_t n = 1; n <= 12; ++n) {
      const FinSpace t = truncate(*omega, n);
      std::vector<Subset> traces;
      for (const auto& c : omega->closed_forms(n)) {
        Subset tr(n);
        for (std::size_t i = 0; i < n; ++i)
          if (omega->in_closed(c, omega->point_at(i))) tr.insert(i);
        traces.push_back(tr);
      }
      r.expect(si_closed_sets(t) == SubsetFamily(n, traces), "SI-closed sets of omega trace to the truncation's",
               "omega truncated to " + std::to_string(n));
    }

    // nat_cofinite completes to N + {top}.
    const auto cof = catalog_lookup("nat_cofinite");
    const SymbolicCompletion cc = sym_strong_completion(cof);
    const SymbolicSpace& ct = *cc.space;
    const Point t = NatCofiniteTop::kTop;
    r.expect(ct.id() == "nat_cofinite_top", "SC(nat_cofinite) is N + {top}", "nat_cofinite");
    r.expect(cc.new_points == std::vector<Point>{t}, "SC(nat_cofinite) adds exactly the top", "nat_cofinite");
    r.expect(ct.is_open(EmptyOpen{}) && ct.is_open(WholeOpen{}), "empty set and whole space are open",
             "nat_cofinite_top");
    for (std::uint32_t m = 0; m < 64; ++m) {
      std::vector<Point> ex;
      for (Point k = 0; k < 6; ++k)
        if ((m >> k) & 1U) ex.push_back(k);
      const CofinitePlusTop u{ex};
      r.expect(ct.is_open(u) && ct.is_si_open(u), "S + {top} is open for cofinite S", "nat_cofinite_top",
               [&] { return sctop::detail::form_name(u); });
      bool members = ct.in_open(u, t);
      for (Point k = 0; k < 8; ++k) members = members && (ct.in_open(u, k) == !sctop::detail::has(ex, k));
      r.expect(members, "S + {top} has the right members", "nat_cofinite_top", [&] { return sctop::detail::form_name(u); });
      if (!ex.empty()) {
        r.expect(!ct.is_open(FiniteOpen{ex}), "nonempty finite sets of naturals are not open", "nat_cofinite_top");
        std::vector<Point> with_top = ex;
        with_top.push_back(t);
        r.expect(!ct.is_open(FiniteOpen{with_top}), "finite sets with the top are not open", "nat_cofinite_top");
      }
      r.expect(cof->is_open(CofiniteOpen{ex}), "cofinite sets are open in nat_cofinite", "nat_cofinite");
    }
    r.expect(!ct.is_open(FiniteOpen{{t}}), "{top} is not open", "nat_cofinite_top");
    r.expect(cof->is_irreducible(WholeSpace{}) && !cof->sup(WholeSpace{}), "N is irreducible without sup in nat_cofinite",
             "nat_cofinite");
    r.expect(ct.sup(WholeSpace{}) == std::optional<Point>(t) && ct.sup(Cofinite{}) == std::optional<Point>(t),
             "the naturals have supremum top", "nat_cofinite_top");
    r.expect(ct.is_strongly_complete() && !cof->is_strongly_complete(), "N + {top} is sc and nat_cofinite is not",
             "nat_cofinite");

    // nat_antichain is its own completion.
    const auto anti = catalog_lookup("nat_antichain");
    const SymbolicCompletion ca = sym_strong_completion(anti);
    r.expect(ca.space->id() == "nat_antichain" && ca.new_points.empty(), "SC(nat_antichain) is itself",
             "nat_antichain");
    for (Point i = 0; i < 64; ++i) r.expect(ca.eta(i) == i, "eta is the identity", "nat_antichain");
    r.expect(anti->is_strongly_complete(), "nat_antichain is sc", "nat_antichain");
    // The hyperspace of an n-point antichain has 2^n points; stay small.
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_truncation, 4); ++n) {
      const FinSpace tr = truncate(*anti, n);
      r.expect(strong_completion(tr).completion == tr, "finite truncations complete to themselves",
               "nat_antichain truncated to " + std::to_string(n));
    }

    // The Johnstone space.
    const auto js = catalog_lookup("johnstone");
    const auto ja = catalog_lookup("johnstone_alex");
    r.expect(js->is_irreducible(WholeSpace{}), "the whole space is irreducible", "johnstone");
    r.expect(!js->is_directed(WholeSpace{}), "the whole space is not directed", "johnstone");
    r.expect(!js->sup(WholeSpace{}).has_value(), "the whole space has no supremum", "johnstone");
    r.expect(!js->is_strongly_complete(), "the Johnstone space is not sc", "johnstone");
    r.expect(!ja->is_irreducible(WholeSpace{}) && ja->is_strongly_complete(),
             "with the Alexandroff topology the whole space is reducible and the space is sc", "johnstone_alex");
    bool refused = false;
    try {
      sym_strong_completion(js);
    } catch (const Error& e) {
      refused = e.kind() == ErrorKind::Unsupported;
    }
    r.expect(refused, "completion of the Johnstone space is refused", "johnstone");
  });
}

/// Every suite, in a fixed order.
inline std::vector<SuiteReport> run_all(const Options& o = {}) {
  return {finite_collapse(o), irreducible_sets(o), si_topology(o), i_closed_sets(o),
          continuity(o),      hyperspace(o),       universal_property(o), catalog()};
}

}  // namespace sctop::verify
