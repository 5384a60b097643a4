// c24: verify side-pairings of the ideal 24-cell and compute their invariants.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "c24/covers_isometry.hpp"
#include "c24/cusp.hpp"
#include "c24/homology.hpp"
#include "c24/pairing.hpp"
#include "c24/poincare_check.hpp"
#include "c24/report.hpp"
#include "c24/search.hpp"

using namespace c24;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A path, or a bundled fixture name such as 24c1.3.
std::string resolve(const std::string& arg) {
  static const std::regex name_re(R"(24c1[._]([1-4]))");
  std::smatch m;
  if (std::regex_match(arg, m, name_re)) return bundled_pairing_path(std::stoi(m[1])).string();
  return arg;
}

SidePairing load_input(const std::string& arg, Report& r) {
  const std::string path = resolve(arg);
  const std::string text = read_file(path);
  r.add_input(arg, fnv1a_hex(text));
  try {
    return parse_pairing(text);
  } catch (const PairingError& e) {
    throw UsageError(arg + ": " + e.what() + " [" + to_string(e.kind()) + "]");
  }
}

std::string cycle_line(const RidgeCycle& c) {
  std::ostringstream out;
  out << "length=" << c.ridges.size() << " ridges=";
  for (std::size_t k = 0; k < c.ridges.size(); ++k) out << (k ? "," : "") << c.ridges[k] + 1;
  out << " word=" << word_to_string(c.word);
  if (!c.closed)
    out << " open";
  else if (!c.has_holonomy)
    out << " holonomy=unavailable";
  else
    out << " holonomy=" << (c.holonomy.is_identity() ? "identity" : "nontrivial");
  return out.str();
}

std::string edge_line(const EdgeClass& c) {
  std::ostringstream out;
  out << "size=" << c.edges.size() << " chi=" << c.euler_characteristic << " connected=" << c.connected
      << " oriented=" << c.orientation_consistent << " develops=" << c.develops << " edges=";
  for (std::size_t k = 0; k < c.edges.size(); ++k) out << (k ? "," : "") << c.edges[k] + 1;
  return out.str();
}

std::string vertex_list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + 1);
  return s;
}

void add_groups(Report& r, const std::vector<AbelianGroup>& h) {
  for (std::size_t k = 0; k < h.size(); ++k) r.set("H" + std::to_string(k), h[k].to_string());
}

std::string fixed(double x, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

void cmd_verify(const std::string& file, Report& r) {
  const SidePairing p = load_input(file, r);
  const ManifoldReport m = check_manifold(p);
  r.verdict("derivation", m.derivation_ok);
  if (!m.derivation_ok) {
    r.set("derivation_error", m.derivation_error);
    r.verdict("is_manifold", false);
    std::vector<std::string> bad;
    for (const auto& c : m.ridges.cycles)
      if (!c.passes) bad.push_back(cycle_line(c));
    r.set("failing_ridge_cycles", bad);
    return;
  }
  r.verdict("ridge_cycles", m.ridges.all_pass);
  r.verdict("edge_links", m.edges.all_pass);
  r.verdict("completeness", m.complete);
  r.verdict("is_manifold", m.is_manifold);
  r.set("ridge_cycles", static_cast<long long>(m.ridges.cycles.size()));
  r.set("edge_classes", static_cast<long long>(m.edges.classes.size()));
  r.set("cusps", static_cast<long long>(m.cusps.size()));
  std::vector<std::string> bad_cycles, bad_edges;
  for (const auto& c : m.ridges.cycles)
    if (!c.passes) bad_cycles.push_back(cycle_line(c));
  for (const auto& c : m.edges.classes)
    if (!c.passes) bad_edges.push_back(edge_line(c));
  r.set("failing_ridge_cycles", bad_cycles);
  r.set("failing_edge_classes", bad_edges);
}

void cmd_cusps(const std::string& file, Report& r) {
  const SidePairing p = load_input(file, r);
  const auto classes = cusp_classes(p);
  r.set("cusps", static_cast<long long>(classes.size()));
  std::vector<std::string> lines;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const FlatLinkClass f = classify_flat_link(build_cusp_link(p, static_cast<int>(k)));
    lines.push_back("vertices=" + vertex_list(classes[k]) + " orientable=" + (f.orientable ? "true" : "false") +
                    " H1=" + f.h1.to_string() + " label=" + (f.label.empty() ? "-" : f.label));
  }
  r.set("cusp_links", lines);
}

void cmd_link(const std::string& file, int cusp, Report& r) {
  const SidePairing p = load_input(file, r);
  const int n = cusp_count(p);
  if (cusp < 1 || cusp > n) throw UsageError("cusp index out of range (1.." + std::to_string(n) + ")");
  const CubeComplex c = build_cusp_link(p, cusp - 1);
  const FlatLinkClass f = classify_flat_link(c);
  r.verdict("closed", c.closed());
  r.verdict("orientation_cross_check", f.orientation_cross_check);
  r.set("cusp", static_cast<long long>(cusp));
  r.set("cubes", static_cast<long long>(c.cubes.size()));
  r.set("orientable", f.orientable ? "true" : "false");
  r.set("H1", f.h1.to_string());
  r.set("label", f.label.empty() ? "-" : f.label);
}

void cmd_homology(const std::string& file, Report& r) {
  const SidePairing p = load_input(file, r);
  const auto h = homology_groups(p);
  add_groups(r, h);
  long long chi = 0;
  for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? -1 : 1) * h[k].free_rank;
  r.set("euler_characteristic", chi);
  r.set("volume", fixed(volume_from_euler(chi), 9));
  if (check_manifold(p).ridges.all_pass) {
    const AbelianGroup ab = abelianization(presentation(p));
    r.set("H1_from_presentation", ab.to_string());
    r.verdict("abelianization_agrees", ab == h[1]);
  }
}

void cmd_presentation(const std::string& file, Report& r) {
  const SidePairing p = load_input(file, r);
  if (!ridge_cycles(p).all_pass) {
    r.verdict("ridge_cycles", false);
    return;
  }
  const Presentation pr = presentation(p);
  std::vector<std::string> gens, rels;
  for (int g : pr.generators) gens.push_back("g" + std::to_string(g + 1) + ": S" + std::to_string(g + 1) + " -> S" +
                                             std::to_string(p.partner[g] + 1));
  for (const auto& w : pr.relators) rels.push_back(word_to_string(w));
  r.set("generators", gens);
  r.set("relators", rels);
}

void cmd_cusp_volume(const std::string& file, Report& r) {
  const SidePairing p = load_input(file, r);
  const CuspVolume v = max_cusp_volume(p);
  r.verdict("neighbours_clear", v.neighbours_clear);
  r.set("volume", fixed(v.total, 12));
  r.set("horoball_scale", fixed(v.horoball_scale, 12));
  std::vector<std::string> per;
  for (std::size_t k = 0; k < v.per_vertex.size(); ++k)
    per.push_back("v" + std::to_string(k + 1) + "=" + fixed(v.per_vertex[k], 12));
  r.set("per_vertex", per);
}

void cover_summary(const SheetedPairing& sp, Report& r, const std::string& prefix) {
  const auto h = homology_groups(sp);
  for (std::size_t k = 0; k < h.size(); ++k) r.set(prefix + "H" + std::to_string(k), h[k].to_string());
  long long chi = 0;
  for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? -1 : 1) * h[k].free_rank;
  r.set(prefix + "euler_characteristic", chi);
  const auto classes = sheeted_cusp_classes(sp);
  r.set(prefix + "cusps", static_cast<long long>(classes.size()));
  std::vector<std::string> links;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const FlatLinkClass f = classify_flat_link(build_cusp_link(sp, static_cast<int>(k)));
    links.push_back(std::string("orientable=") + (f.orientable ? "true" : "false") + " H1=" + f.h1.to_string() +
                    " label=" + (f.label.empty() ? "-" : f.label));
  }
  r.set(prefix + "cusp_links", links);
}

void cmd_double_cover(const std::string& a, const std::string& b, Report& r) {
  const SidePairing p = load_input(a, r);
  const SheetedPairing cp = orientation_double_cover(p);
  cover_summary(cp, r, "");
  if (b.empty()) return;
  const SidePairing q = load_input(b, r);
  const SheetedPairing cq = orientation_double_cover(q);
  const auto iso = double_covers_equivalent(cp, cq);
  r.verdict("covers_equivalent", iso.has_value());
  if (iso)
    r.set("sheet_map", std::to_string(iso->sheet_map[0]) + "," + std::to_string(iso->sheet_map[1]) +
                           " symmetries=" + std::to_string(iso->sheet_symmetry[0]) + "," +
                           std::to_string(iso->sheet_symmetry[1]));
}

void cmd_isometries(const std::string& file, Report& r) {
  const SidePairing p = load_input(file, r);
  const auto perm = stabilizer(p);
  const auto mats = stabilizer_by_matrices(p);
  r.verdict("routes_agree", perm == mats);
  r.set("stabilizer_order", static_cast<long long>(perm.size()));
  r.set("stabilizer_order_matrices", static_cast<long long>(mats.size()));
  std::vector<std::string> elems;
  for (int k : perm) elems.push_back(std::to_string(k));
  r.set("stabilizer", elems);
}

void cmd_equivalent(const std::string& a, const std::string& b, Report& r) {
  const SidePairing p = load_input(a, r);
  const SidePairing q = load_input(b, r);
  r.verdict("equivalent", pairings_equivalent(p, q));
  r.set("canonical_a", key_to_hex(canonical_key(p)));
  r.set("canonical_b", key_to_hex(canonical_key(q)));
}

struct SearchArgs {
  int shards = 1, shard_index = 0, workers = 0;
  bool one_cusped = false, no_recheck = false;
  std::string checkpoint, prefix, out;
  std::uint64_t limit = 0;
};

void cmd_search(const SearchArgs& a, Report& r) {
  SearchOptions o;
  o.shards = a.shards;
  o.shard_index = a.shard_index;
  o.one_cusped = a.one_cusped;
  o.unit_limit = a.limit;
  o.recheck = !a.no_recheck;
  o.workers = a.workers;
  if (o.workers <= 0) {
    const char* env = std::getenv("C24_WORKERS");
    o.workers = env ? std::max(1, std::atoi(env)) : 1;
  }
  if (!a.checkpoint.empty()) o.checkpoint = a.checkpoint;
  if (!a.prefix.empty()) {
    const std::string text = read_file(a.prefix);
    r.add_input(a.prefix, fnv1a_hex(text));
    try {
      o.prefix = parse_prefix(text);
    } catch (const PairingError& e) {
      throw UsageError(a.prefix + ": " + e.what());
    } catch (const NotASymmetry& e) {
      throw UsageError(a.prefix + ": " + e.what());
    }
  }
  o.progress = [](std::uint64_t, std::uint64_t done, std::uint64_t total) {
    std::cerr << "\rc24 search: " << done << "/" << total << " units" << std::flush;
    if (done == total) std::cerr << '\n';
  };
  const CensusResult res = enumerate(o);
  r.verdict("complete", res.complete());
  r.verdict("recheck", res.counters.recheck_failures == 0);
  r.set("shard", std::to_string(o.shard_index) + "/" + std::to_string(o.shards));
  r.set("units", std::to_string(res.units_done) + "/" + std::to_string(res.units_total));
  r.set("units_resumed", static_cast<long long>(res.units_resumed));
  r.set("pairings", static_cast<long long>(res.entries.size()));
  long long one = 0;
  for (const auto& e : res.entries) one += e.cusps == 1;
  r.set("one_cusped", one);
  const auto& c = res.counters;
  r.set("counters", std::vector<std::string>{
                        "nodes=" + std::to_string(c.nodes), "leaves=" + std::to_string(c.leaves),
                        "prune_ridge_length=" + std::to_string(c.prune_ridge_length),
                        "prune_ridge_short=" + std::to_string(c.prune_ridge_short),
                        "prune_ridge_holonomy=" + std::to_string(c.prune_ridge_holonomy),
                        "prune_edge_size=" + std::to_string(c.prune_edge_size),
                        "prune_edge_flip=" + std::to_string(c.prune_edge_flip),
                        "prune_edge_closed=" + std::to_string(c.prune_edge_closed),
                        "prune_canonicity=" + std::to_string(c.prune_canonicity),
                        "rejected_noncanonical=" + std::to_string(c.rejected_noncanonical),
                        "recheck_failures=" + std::to_string(c.recheck_failures)});
  std::vector<std::string> records;
  for (const auto& e : res.entries)
    records.push_back("cusps=" + std::to_string(e.cusps) + " key=" + key_to_hex(e.key));
  r.set("records", records);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw UsageError("cannot write " + a.out);
    f << census_to_text(res);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Side-pairings of the ideal hyperbolic 24-cell"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  std::string file, file_b;
  int cusp = 1;
  SearchArgs sa;
  auto one_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("pairing", file, "Pairing file or fixture name (24c1.1 .. 24c1.4)")->required();
    return sub;
  };
  one_file("verify", "Check the manifold conditions");
  one_file("cusps", "Count cusps and classify their links");
  one_file("homology", "Integral homology H0..H4");
  one_file("presentation", "Generators and ridge-cycle relators");
  one_file("cusp-volume", "Volume of the maximal cusp");
  one_file("isometries", "Order of the symmetry stabiliser");
  auto* link = one_file("link", "Flat cusp link of one cusp");
  link->add_option("--cusp", cusp, "Cusp number (1-based)");
  auto* dc = one_file("double-cover", "Orientation double cover; with a second pairing, compare the covers");
  dc->add_option("other", file_b, "Second pairing");
  auto* eq = app.add_subcommand("equivalent", "Equivalence up to the 1152 symmetries");
  eq->add_option("a", file, "First pairing")->required();
  eq->add_option("b", file_b, "Second pairing")->required();
  auto* search = app.add_subcommand("search", "Enumerate manifold side-pairings");
  search->add_option("--shards", sa.shards, "Number of shards")->check(CLI::PositiveNumber);
  search->add_option("--shard-index", sa.shard_index, "This shard (0-based)")->check(CLI::NonNegativeNumber);
  search->add_flag("--one-cusped", sa.one_cusped, "Keep only one-cusped pairings");
  search->add_option("--checkpoint", sa.checkpoint, "Checkpoint file (created or resumed)");
  search->add_option("--limit", sa.limit, "Stop after this many work units");
  search->add_option("--prefix", sa.prefix, "Fix the rows listed in this file");
  search->add_option("--workers", sa.workers, "Worker threads (default: C24_WORKERS or 1)");
  search->add_option("--out", sa.out, "Write the census records to this file");
  search->add_flag("--no-recheck", sa.no_recheck, "Skip the exact re-check of emitted pairings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report r;
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    r.command = cmd;
    if (cmd == "verify") cmd_verify(file, r);
    else if (cmd == "cusps") cmd_cusps(file, r);
    else if (cmd == "homology") cmd_homology(file, r);
    else if (cmd == "presentation") cmd_presentation(file, r);
    else if (cmd == "cusp-volume") cmd_cusp_volume(file, r);
    else if (cmd == "link") cmd_link(file, cusp, r);
    else if (cmd == "double-cover") cmd_double_cover(file, file_b, r);
    else if (cmd == "isometries") cmd_isometries(file, r);
    else if (cmd == "equivalent") cmd_equivalent(file, file_b, r);
    else if (cmd == "search") cmd_search(sa, r);
  } catch (const UsageError& e) {
    std::cerr << "c24: " << e.what() << '\n';
    return 2;
  } catch (const MultipleCusps& e) {
    std::cerr << "c24: " << e.what() << '\n';
    return 2;
  } catch (const AlreadyOrientable& e) {
    std::cerr << "c24: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "c24: " << e.what() << '\n';
    return 2;
  }
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (json ? r.to_json() : r.to_text());
  return r.passed() ? 0 : 1;
}
