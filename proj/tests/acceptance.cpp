// One PASS/FAIL line per acceptance criterion. Every criterion allows zero
// violations; the time budgets are wall-clock limits on a single core.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sctop/sctop.hpp"

using namespace sctop;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;
  std::string first_failure;
};

void absorb(Outcome& o, const verify::SuiteReport& r) {
  o.checks += r.checks;
  o.failures += r.failures;
  if (o.first_failure.empty() && !r.violations.empty()) {
    const auto& v = r.violations.front();
    o.first_failure = r.name + ": " + v.property + " on " + v.subject + (v.witness.empty() ? "" : " witness " + v.witness);
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus(const std::string& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(SCTOP_DATA_DIR) / dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome dsl_io() {
  Outcome o;
  auto fail = [&](const std::string& what) {
    ++o.failures;
    if (o.first_failure.empty()) o.first_failure = what;
  };
  const auto valid = corpus("valid");
  ++o.checks;
  if (valid.size() != 30) fail("valid corpus has " + std::to_string(valid.size()) + " documents");
  for (const auto& f : valid) {
    ++o.checks;
    try {
      const dsl::Document d1 = dsl::parse_document(slurp(f));
      const std::string p1 = dsl::print(d1);
      const dsl::Document d2 = dsl::parse_document(p1);
      if (!dsl::same(d1, d2) || dsl::print(d2) != p1) fail("print fixpoint fails on " + f.filename().string());
      // Elaborated documents round-trip through JSON too.
      if (const auto* sd = std::get_if<dsl::SpaceDoc>(&d1)) {
        auto e = dsl::elaborate(*sd);
        if (const auto* ns = std::get_if<dsl::NamedSpace>(&e)) {
          ++o.checks;
          const auto j = io::to_json(*ns);
          if (io::to_json(io::space_from_json(j)).dump() != j.dump()) fail("JSON round trip on " + f.filename().string());
        }
      } else {
        ++o.checks;
        const auto j = io::to_json(dsl::elaborate(std::get<dsl::MapDoc>(d1)));
        if (io::to_json(io::map_from_json(j)).dump() != j.dump()) fail("JSON round trip on " + f.filename().string());
      }
    } catch (const std::exception& e) {
      fail(f.filename().string() + ": " + e.what());
    }
  }
  std::size_t malformed = 0;
  for (const auto& f : corpus("malformed")) {
    ++o.checks;
    ++malformed;
    try {
      auto d = dsl::parse_document(slurp(f));
      if (const auto* sd = std::get_if<dsl::SpaceDoc>(&d)) dsl::elaborate(*sd);
      else dsl::elaborate(std::get<dsl::MapDoc>(d));
      fail(f.filename().string() + " was accepted");
    } catch (const ParseError& e) {
      if (e.line() == 0 || e.column() == 0) fail(f.filename().string() + " has no position");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SemanticError || std::string(e.what()).find("line ") == std::string::npos)
        fail(f.filename().string() + ": " + e.what());
    }
  }
  std::size_t spaces = 0, completions = 0;
  for (const auto& x : all_spaces_up_to(4)) {
    ++o.checks;
    ++spaces;
    const auto j = io::to_json(x);
    if (io::to_json(io::space_from_json(j)).dump() != j.dump()) fail("space JSON round trip: " + verify::text(x));
    if (x.size() <= 3) {
      ++o.checks;
      ++completions;
      const auto cj = io::to_json(strong_completion(x), dsl::default_names(x.size()));
      const auto [c, names] = io::completion_from_json(cj);
      if (io::to_json(c, names).dump() != cj.dump()) fail("completion JSON round trip: " + verify::text(x));
    }
  }
  o.detail = std::to_string(valid.size()) + " valid docs, " + std::to_string(malformed) + " malformed, " +
             std::to_string(spaces) + " spaces and " + std::to_string(completions) + " completions round-tripped";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  verify::Options opt;
  opt.max_size = 4;
  opt.pair_size = 3;

  const std::vector<Criterion> criteria{
      {1, "finite collapse (all posets, n <= 4)", 30,
       [&] {
         Outcome o;
         auto r = verify::finite_collapse(opt);
         absorb(o, r);
         o.detail = std::to_string(r.subjects) + " spaces";
         return o;
       }},
      {2, "irreducible sets, SI topology, I-closed sets, closure system (n <= 4)", 30,
       [&] {
         Outcome o;
         for (auto& r : {verify::irreducible_sets(opt), verify::si_topology(opt), verify::i_closed_sets(opt)})
           absorb(o, r);
         o.detail = "3 suites";
         return o;
       }},
      {3, "continuity hierarchy (all maps, n <= 3)", 60,
       [&] {
         Outcome o;
         auto r = verify::continuity(opt);
         absorb(o, r);
         o.detail = std::to_string(r.subjects) + " spaces";
         return o;
       }},
      {4, "hyperspace order, strong completeness, lower Vietoris (n <= 4)", 30,
       [&] {
         Outcome o;
         auto r = verify::hyperspace(opt);
         absorb(o, r);
         o.detail = std::to_string(r.subjects) + " spaces";
         return o;
       }},
      {5, "universal property, adjunction, uniqueness (n <= 3)", 300,
       [&] {
         Outcome o;
         auto r = verify::universal_property(opt);
         absorb(o, r);
         o.detail = std::to_string(r.subjects) + " sources";
         return o;
       }},
      {6, "catalog ground truths with truncations n <= 10", 60,
       [&] {
         Outcome o;
         auto r = verify::catalog(10);
         absorb(o, r);
         o.detail = std::to_string(r.subjects) + " entries";
         return o;
       }},
      {7, "DSL/IO fixpoint, positioned errors, JSON round trip", 30, dsl_io},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures = 1;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.failures == 0 && secs < c.budget;
    all = all && pass;
    std::printf("%s [%d] %s: %zu checks, %zu violations (tolerance 0), %.2f s (budget %.0f s); %s\n",
                pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.checks, o.failures, secs, c.budget, o.detail.c_str());
    if (!o.first_failure.empty()) std::printf("     first violation: %s\n", o.first_failure.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
