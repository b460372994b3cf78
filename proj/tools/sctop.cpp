// Command-line front end.
//
// Exit codes: 0 success, 1 property violation found, 2 usage/parse error,
// 3 enumeration cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sctop/sctop.hpp"

namespace {

using json = nlohmann::json;
using namespace sctop;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Common {
  bool json = false;
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 1;
  std::string out;
};

// A space argument: DSL text, a JSON document, or @path for either.
struct Input {
  std::optional<dsl::NamedSpace> finite;
  SymbolicHandle symbolic;
};

std::string read_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& s) {
  auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '{';
}

json parse_json(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Input load_space(const std::string& arg) {
  const std::string text = read_arg(arg);
  if (looks_like_json(text)) return {io::space_from_json(parse_json(text)), nullptr};
  auto e = dsl::read_space(text);
  if (auto* s = std::get_if<dsl::NamedSpace>(&e)) return {*s, nullptr};
  return {std::nullopt, std::get<SymbolicHandle>(e)};
}

dsl::NamedSpace load_finite(const std::string& arg) {
  Input in = load_space(arg);
  if (!in.finite) throw Error(ErrorKind::SemanticError, "this command needs a finite space, got " + in.symbolic->id());
  return *in.finite;
}

dsl::NamedMap load_map(const std::string& arg) {
  const std::string text = read_arg(arg);
  if (looks_like_json(text)) return io::map_from_json(parse_json(text));
  return dsl::read_map(text);
}

Subset parse_set(const dsl::NamedSpace& s, const std::string& list) {
  Subset out(s.space.size());
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    auto i = s.index_of(item);
    if (!i) throw Error(ErrorKind::SemanticError, "'" + item + "' is not an element of the space");
    out.insert(*i);
  }
  return out;
}

std::string label(const Subset& s, const std::vector<std::string>& names) { return io::set_label(s, names); }

json labels(const SubsetFamily& f, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& s : f) a.push_back(label(s, names));
  return a;
}

std::string join(const SubsetFamily& f, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& s : f) out += (out.empty() ? "" : " ") + label(s, names);
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Commands. Each fills `text` and `doc` and returns an exit code.

struct Report {
  std::string text;
  json doc = json::object();
};

int cmd_info(const Common& c, const std::string& arg, Report& r) {
  Input in = load_space(arg);
  if (in.symbolic) {
    const auto& s = *in.symbolic;
    const bool irr = s.is_irreducible(WholeSpace{});
    const bool dir = s.is_directed(WholeSpace{});
    const auto sup = s.sup(WholeSpace{});
    r.doc = {{"entry", s.id()},           {"description", s.describe()},  {"strongly_complete", s.is_strongly_complete()},
             {"whole_irreducible", irr}, {"whole_directed", dir},
             {"whole_sup", sup ? json(s.show(*sup)) : json(nullptr)}};
    r.text = s.id() + ": " + s.describe() + "\nstrongly complete: " + yes(s.is_strongly_complete()) +
             "\nwhole space: irreducible " + yes(irr) + ", directed " + yes(dir) + ", supremum " +
             (sup ? s.show(*sup) : "none") + "\n";
    return kOk;
  }
  const auto& ns = *in.finite;
  const FinSpace& x = ns.space;
  json covers = json::array();
  std::string ctext;
  for (auto [a, b] : x.order().covers()) {
    covers.push_back({ns.names[a], ns.names[b]});
    ctext += (ctext.empty() ? "" : ", ") + ns.names[a] + " < " + ns.names[b];
  }
  const bool sc = is_strongly_complete(x, c.cap);
  const bool dcpo = is_dcpo(x, c.cap);
  const bool sober = is_sober(x, c.cap);
  const bool conn = is_connected(x);
  r.doc = {{"space", io::to_json(ns)}, {"points", x.size()},   {"opens", x.opens().size()}, {"covers", covers},
           {"strongly_complete", sc},   {"dcpo", dcpo},          {"sober", sober},               {"connected", conn}};
  r.text = "points: " + std::to_string(x.size()) + "\nopens: " + std::to_string(x.opens().size()) + " (" +
           join(x.opens(), ns.names) + ")\ncovers: " + (ctext.empty() ? "none" : ctext) +
           "\nstrongly complete: " + yes(sc) + "\ndcpo: " + yes(dcpo) + "\nsober: " + yes(sober) +
           "\nconnected: " + yes(conn) + "\n";
  return kOk;
}

int cmd_irr(const Common& c, const std::string& arg, const std::string& route_name, Report& r) {
  const auto ns = load_finite(arg);
  IrrRoute route = IrrRoute::OpenPairs;
  if (route_name == "neighbourhoods") route = IrrRoute::Neighbourhoods;
  else if (route_name == "maximum") route = IrrRoute::Maximum;
  const SubsetFamily irr = irr_enumerate(ns.space, route, c.cap);
  json plus = json::array();
  std::string ptext;
  for (const auto& e : ns.space.cached_irr_plus()) {
    plus.push_back({{"set", label(e.set, ns.names)}, {"sup", ns.names[e.sup]}});
    ptext += "  " + label(e.set, ns.names) + " sup " + ns.names[e.sup] + "\n";
  }
  const bool sc = is_strongly_complete(ns.space, c.cap);
  r.doc = {{"route", route_name}, {"irr", labels(irr, ns.names)}, {"irr_plus", plus}, {"strongly_complete", sc}};
  r.text = "Irr (" + route_name + "): " + std::to_string(irr.size()) + "\n  " + join(irr, ns.names) +
           "\nIrr+: " + std::to_string(plus.size()) + "\n" + ptext + "strongly complete: " + yes(sc) + "\n";
  return kOk;
}

int cmd_si(const Common& c, const std::string& arg, Report& r) {
  Input in = load_space(arg);
  if (in.symbolic) {
    const auto& s = *in.symbolic;
    r.doc = {{"entry", s.id()}, {"strongly_complete", s.is_strongly_complete()}};
    r.text = s.id() + ": SI topology is available on open forms only; strongly complete: " +
             yes(s.is_strongly_complete()) + "\n";
    return kOk;
  }
  const auto& ns = *in.finite;
  const SubsetFamily& si = si_opens(ns.space, c.cap);
  const bool same = si == ns.space.opens();
  r.doc = {{"si_opens", labels(si, ns.names)}, {"equals_topology", same}};
  r.text = "SI-open sets: " + std::to_string(si.size()) + "\n  " + join(si, ns.names) +
           "\nSI topology equals the topology: " + yes(same) + "\n";
  return kOk;
}

int cmd_iclosure(const Common& c, const std::string& arg, const std::string& set, Report& r) {
  const auto ns = load_finite(arg);
  const Subset a = parse_set(ns, set);
  const Subset fix = cl_i(ns.space, a, c.cap);
  const Subset meet = cl_i_by_intersection(ns.space, a, c.cap);
  r.doc = {{"set", label(a, ns.names)},
           {"closure", label(fix, ns.names)},
           {"i_closed", is_i_closed(ns.space, a, c.cap)},
           {"routes_agree", fix == meet}};
  r.text = "cl_I" + label(a, ns.names) + " = " + label(fix, ns.names) +
           "\nI-closed: " + yes(is_i_closed(ns.space, a, c.cap)) + "\nfixpoint and intersection agree: " +
           yes(fix == meet) + "\n";
  return fix == meet ? kOk : kViolation;
}

int cmd_complete(const Common& c, const std::string& arg, Report& r) {
  Input in = load_space(arg);
  if (in.symbolic) {
    const SymbolicCompletion sc = sym_strong_completion(in.symbolic);
    json added = json::array();
    for (auto p : sc.new_points) added.push_back(sc.space->show(p));
    r.doc = {{"entry", in.symbolic->id()}, {"completion", sc.space->id()}, {"new_points", added},
             {"summary", sc.summary}};
    r.text = in.symbolic->id() + " -> " + sc.space->id() + ": " + sc.summary + "\n";
    return kOk;
  }
  const auto& ns = *in.finite;
  const CompletionResult res = strong_completion(ns.space, c.cap);
  const auto cnames = io::completion_names(res, ns.names);
  json table = json::array();
  std::string etext;
  for (std::size_t i = 0; i < ns.space.size(); ++i) {
    table.push_back({ns.names[i], "cl{" + ns.names[i] + "}"});
    etext += "  " + ns.names[i] + " -> cl{" + ns.names[i] + "} = " + cnames[res.eta(i)] + "\n";
  }
  const bool homeo = is_homeomorphism(res.eta);
  std::string added;
  for (std::size_t k = 0; k < res.completion.size(); ++k) {
    bool hit = false;
    for (auto t : res.eta.table()) hit = hit || t == k;
    if (!hit) added += (added.empty() ? "" : " ") + cnames[k];
  }
  r.doc = {{"result", io::to_json(res, ns.names)}, {"eta_table", table}, {"isomorphic_to_source", homeo}};
  r.text = "hyperspace: " + std::to_string(res.gamma.size()) + " SI-closed sets\ncompletion: " +
           std::to_string(res.completion.size()) + " points" + (homeo ? " (isomorphic to the input)" : "") +
           "\nnew points: " + (added.empty() ? "none" : added) + "\neta:\n" + etext +
           "eta SI+-continuous: " + yes(res.witnesses.eta_si_plus_continuous) +
           "\ncompletion strongly complete: " + yes(res.witnesses.completion_strongly_complete) + "\n";
  const bool ok = res.witnesses.eta_si_plus_continuous && res.witnesses.completion_strongly_complete;
  return ok ? kOk : kViolation;
}

json witness_json(const std::optional<Witness>& w, const std::vector<std::string>& src_names,
                  const std::vector<std::string>& dst_names) {
  if (!w) return nullptr;
  json j = {{"reason", w->reason}};
  if (w->set) j["set"] = label(*w->set, w->set->universe() == src_names.size() ? src_names : dst_names);
  json pts = json::array();
  for (auto p : w->points) pts.push_back(src_names.at(p));
  j["points"] = pts;
  return j;
}

int cmd_checkmap(const Common& c, const std::string& arg, Report& r) {
  const auto m = load_map(arg);
  const ContinuityReport rep = classify(m.map, c.cap);
  const auto& sn = m.from.names;
  const auto& dn = m.to.names;
  struct Row {
    const char* key;
    bool value;
    const std::optional<Witness>* witness;
  };
  const Row rows[] = {{"continuous", rep.continuous, &rep.continuous_witness},
                      {"monotone", rep.monotone, &rep.monotone_witness},
                      {"i_continuous", rep.i_continuous, &rep.i_continuous_witness},
                      {"si_continuous", rep.si_continuous, &rep.si_continuous_witness},
                      {"si_plus_continuous", rep.si_plus_continuous, &rep.si_plus_witness},
                      {"preserves_irr_sups", rep.preserves_irr_sups, &rep.irr_sups_witness}};
  for (const auto& row : rows) {
    r.doc[row.key] = {{"holds", row.value}, {"witness", witness_json(*row.witness, sn, dn)}};
    r.text += std::string(row.key) + ": " + yes(row.value);
    if (!row.value && *row.witness) {
      const json w = witness_json(*row.witness, sn, dn);
      r.text += " (" + w["reason"].get<std::string>();
      if (w.contains("set")) r.text += ", set " + w["set"].get<std::string>();
      if (!w["points"].empty()) r.text += ", points " + w["points"].dump();
      r.text += ")";
    }
    r.text += "\n";
  }
  // Continuous maps: I-, SI-continuity and Irr+ sup preservation coincide.
  const bool consistent = !rep.continuous || (rep.i_continuous == rep.si_continuous &&
                                              rep.si_continuous == rep.preserves_irr_sups);
  return consistent ? kOk : kViolation;
}

int cmd_extend(const Common& c, const std::string& arg, Report& r) {
  const auto m = load_map(arg);
  const CompletionResult res = strong_completion(m.from.space, c.cap);
  const SpaceMap fh = extend(m.map, res, c.cap);
  const auto cnames = io::completion_names(res, m.from.names);
  json table = json::array();
  for (std::size_t i = 0; i < fh.table().size(); ++i) {
    table.push_back({cnames[i], m.to.names[fh(i)]});
    r.text += "  " + cnames[i] + " -> " + m.to.names[fh(i)] + "\n";
  }
  const bool si_plus = is_si_plus_continuous(fh, c.cap);
  const bool factors = compose(fh, res.eta).table() == m.map.table();
  r.doc = {{"extension", table}, {"si_plus_continuous", si_plus}, {"factors_through_eta", factors}};
  r.text = "extension along eta:\n" + r.text + "SI+-continuous: " + yes(si_plus) +
           "\nextension after eta equals f: " + yes(factors) + "\n";
  return si_plus && factors ? kOk : kViolation;
}

int cmd_verify(const Common& c, std::size_t max_size, const std::vector<std::string>& only, Report& r) {
  verify::Options o;
  o.max_size = max_size;
  o.pair_size = std::min<std::size_t>(max_size, 3);
  o.cap = c.cap;
  check_cap(max_size, 5, "exhaustive verification");
  using Suite = verify::SuiteReport (*)(const verify::Options&);
  const std::pair<const char*, Suite> suites[] = {
      {"finite-collapse", verify::finite_collapse}, {"irreducible", verify::irreducible_sets},
      {"si", verify::si_topology},                  {"i-closed", verify::i_closed_sets},
      {"continuity", verify::continuity},           {"hyperspace", verify::hyperspace},
      {"universal", verify::universal_property},
      {"catalog", [](const verify::Options&) { return verify::catalog(); }}};
  json arr = json::array();
  bool all = true;
  std::size_t total_checks = 0;
  for (const auto& [key, fn] : suites) {
    if (!only.empty() && std::find(only.begin(), only.end(), key) == only.end()) continue;
    const verify::SuiteReport s = fn(o);
    all = all && s.ok();
    total_checks += s.checks;
    json vs = json::array();
    for (const auto& v : s.violations) vs.push_back({{"property", v.property}, {"subject", v.subject}, {"witness", v.witness}});
    arr.push_back({{"suite", s.name}, {"key", key}, {"subjects", s.subjects}, {"checks", s.checks},
                   {"failures", s.failures}, {"violations", vs}});
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", s.seconds);
    r.text += std::string(s.ok() ? "PASS " : "FAIL ") + s.name + ": " + std::to_string(s.subjects) + " subjects, " +
              std::to_string(s.checks) + " checks, " + std::to_string(s.failures) + " failures (" + secs + " s)\n";
    for (const auto& v : s.violations)
      r.text += "  " + v.property + "\n    on " + v.subject + (v.witness.empty() ? "" : "\n    witness " + v.witness) + "\n";
  }
  r.doc = {{"max_size", max_size}, {"suites", arr}, {"ok", all}};
  r.text += all ? "all suites passed (" + std::to_string(total_checks) + " checks)\n" : "violations found\n";
  return all ? kOk : kViolation;
}

int cmd_truncate(const std::string& entry, std::size_t n, Report& r) {
  auto s = catalog_lookup(entry);
  if (!s) throw Error(ErrorKind::SemanticError, "unknown catalog entry '" + entry + "'");
  const FinSpace t = truncate(*s, n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(s->name(s->point_at(i)));
  const dsl::NamedSpace ns{t, names};
  r.doc = {{"entry", s->id()}, {"n", n}, {"space", io::to_json(ns)}, {"dsl", dsl::to_text(ns)}};
  r.text = dsl::to_text(ns) + "\n";
  return kOk;
}

int cmd_export(const Common& c, const std::string& arg, const std::string& format, bool completion, Report& r) {
  auto ns = load_finite(arg);
  if (completion) {
    const CompletionResult res = strong_completion(ns.space, c.cap);
    if (format == "json") {
      r.doc = io::to_json(res, ns.names);
      r.text = r.doc.dump(2) + "\n";
      return kOk;
    }
    ns = {res.completion, io::completion_names(res, ns.names)};
  }
  if (format == "dot") {
    r.text = to_dot(ns.space, ns.names);
    r.doc = {{"dot", r.text}};
  } else {
    r.doc = io::to_json(ns);
    r.text = r.doc.dump(2) + "\n";
  }
  return kOk;
}

// Looks for spaces whose I-open sets fail to be closed under finite
// intersection. Finite spaces cannot supply one (every subset is I-open),
// so the search only ever reports what it tried.
int cmd_search_delta(const Common& c, std::size_t samples, std::size_t max_size, Report& r) {
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::size_t tried = 0;
  std::optional<std::pair<std::string, std::string>> found;
  auto probe = [&](const FinSpace& x, const std::string& what) {
    ++tried;
    const SubsetFamily d = delta(x, c.cap);
    for (const auto& a : d)
      for (const auto& b : d)
        if (!found && !d.contains(a & b)) found = std::make_pair(what, a.word() + " & " + b.word());
  };
  for (std::size_t k = 0; k < samples && !found; ++k) {
    const FinSpace x = alexandroff(random_poset(size(rng), rng));
    probe(x, verify::text(x));
  }
  for (const auto& name : catalog_names())
    for (std::size_t n = 1; n <= max_size && !found; ++n) probe(truncate(*catalog_lookup(name), n), name + "/" + std::to_string(n));
  r.doc = {{"seed", c.seed}, {"spaces_tried", tried}, {"max_size", max_size}};
  if (found) {
    r.doc["witness"] = {{"space", found->first}, {"sets", found->second}};
    r.text = "witness: " + found->first + " with I-open sets " + found->second + "\n";
  } else {
    r.doc["witness"] = nullptr;
    r.text = "no witness found in " + std::to_string(tried) + " spaces (seed " + std::to_string(c.seed) + ")\n";
  }
  return kOk;
}

int emit(const Common& c, const Report& r) {
  const std::string body = c.json ? r.doc.dump(2) + "\n" : r.text;
  if (c.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(c.out);
  if (!f) {
    std::cerr << "error: cannot write " << c.out << "\n";
    return kUsage;
  }
  f << body;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong completions of finite T0 spaces and a catalog of infinite examples"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_flag("--json", c.json, "Machine-readable output");
  app.add_option("--cap", c.cap, "Enumeration cap on carrier size")->check(CLI::Range(1, 24));
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--out", c.out, "Write output to this file");

  std::string space, map, set, route = "neighbourhoods", entry, format = "json";
  std::size_t max_size = 4, n = 5, samples = 200, search_size = 8;
  bool completion = false;
  std::vector<std::string> suites;
  const std::string space_help = "Space: DSL text, JSON, or @file";

  auto* info = app.add_subcommand("info", "Basic facts about a space");
  info->add_option("--space,space", space, space_help)->required();
  auto* irr = app.add_subcommand("irr", "Irreducible sets and their suprema");
  irr->add_option("--space,space", space, space_help)->required();
  irr->add_option("--route", route, "Irreducibility test")
      ->check(CLI::IsMember({"open-pairs", "neighbourhoods", "maximum"}));
  auto* si = app.add_subcommand("si", "SI-open sets");
  si->add_option("--space,space", space, space_help)->required();
  auto* icl = app.add_subcommand("iclosure", "I-closure of a set");
  icl->add_option("--space,space", space, space_help)->required();
  icl->add_option("--set", set, "Comma-separated element names")->required();
  auto* comp = app.add_subcommand("complete", "Strong completion");
  comp->add_option("--space,space", space, space_help)->required();
  auto* chk = app.add_subcommand("checkmap", "Continuity grades of a map");
  chk->add_option("--map,map", map, "Map: DSL text, JSON, or @file")->required();
  auto* ext = app.add_subcommand("extend", "Extend a map along the completion unit");
  ext->add_option("--map,map", map, "Map: DSL text, JSON, or @file")->required();
  auto* ver = app.add_subcommand("verify", "Run the exhaustive property suites");
  ver->add_option("--max-size", max_size, "Largest space in single-space sweeps");
  ver->add_option("--suite", suites, "Only these suites")
      ->check(CLI::IsMember({"finite-collapse", "irreducible", "si", "i-closed", "continuity", "hyperspace",
                             "universal", "catalog"}));
  auto* tr = app.add_subcommand("truncate", "First n points of a catalog entry");
  tr->add_option("--entry,entry", entry, "Catalog entry")->required();
  tr->add_option("--n,-n", n, "Number of points");
  auto* exp = app.add_subcommand("export", "Export a space as DOT or JSON");
  exp->add_option("--space,space", space, space_help)->required();
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_flag("--completion", completion, "Export the completion instead");
  auto* sd = app.add_subcommand("search-delta", "Search for I-open sets not closed under intersection");
  sd->add_option("--samples", samples, "Random spaces to try");
  sd->add_option("--max-size", search_size, "Largest random space")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Report r;
  int code = kOk;
  try {
    if (*info) code = cmd_info(c, space, r);
    else if (*irr) code = cmd_irr(c, space, route, r);
    else if (*si) code = cmd_si(c, space, r);
    else if (*icl) code = cmd_iclosure(c, space, set, r);
    else if (*comp) code = cmd_complete(c, space, r);
    else if (*chk) code = cmd_checkmap(c, map, r);
    else if (*ext) code = cmd_extend(c, map, r);
    else if (*ver) code = cmd_verify(c, max_size, suites, r);
    else if (*tr) code = cmd_truncate(entry, n, r);
    else if (*exp) code = cmd_export(c, space, format, completion, r);
    else if (*sd) code = cmd_search_delta(c, samples, search_size, r);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::CapExceeded: return kCap;
      case ErrorKind::NotSIPlusContinuous:
      case ErrorKind::NotStronglyComplete: return kViolation;
      default: return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const int io_code = emit(c, r);
  return io_code ? io_code : code;
}
