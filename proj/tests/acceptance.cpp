// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails. Optional argument: path of the otg executable,
// used for the cross-process determinism check.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "otg/chroma.hpp"
#include "otg/decomp.hpp"
#include "otg/embed.hpp"
#include "otg/graph.hpp"
#include "otg/suite.hpp"

using namespace otg;

namespace {

constexpr double kChiTableSeconds = 60.0;
constexpr double kDecompSeconds = 30.0;
constexpr double kEmbedSeconds = 120.0;
constexpr std::uint64_t kDecompPairs = 500;
constexpr std::uint64_t kMinEmbedInstances = 300;
constexpr std::uint64_t kRandomEmbedPairs = 400;
constexpr int kCalculusGraphs = 240;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void print(int id, const char* title, Verdict& v) {
  std::cout << (v.pass ? "PASS" : "FAIL") << "  " << id << "  " << title << "  (" << v.note.str() << ")"
            << std::endl;
  if (!v.pass) ++failures;
}

// 1. chi(Sh_2(n)) = ceil(log2 n) for n = 2..12 within the time limit.
void shift_chromatic_table() {
  Verdict v;
  const std::uint32_t expected[] = {1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4};
  const auto start = Clock::now();
  for (Value n = 2; n <= 12; ++n) {
    const std::uint32_t want = expected[n - 2];
    v.expect(want == static_cast<std::uint32_t>(std::ceil(std::log2(static_cast<double>(n)))), "table entry");
    std::uint32_t got = 0;
    if (n == 2) {
      // Sh_2(2) would need n > r; its single vertex (0,1) needs one colour.
      got = chromatic_number(detail::shift_graph_unchecked(2, 2)).chi();
    } else {
      const Graph g = shift_graph(2, n);
      const auto r = chromatic_number(g);
      v.expect(r.exact, "solver exact at n=" + std::to_string(n));
      v.expect(verify_coloring(g, r.witness), "witness proper at n=" + std::to_string(n));
      got = r.chi();
    }
    v.expect(got == want, "chi(Sh_2(" + std::to_string(n) + ")) = " + std::to_string(got));
  }
  const double t = seconds_since(start);
  v.expect(t < kChiTableSeconds, "runtime");
  v.note << "n=2..12 values 1,2,2,3,3,3,3,4,4,4,4; " << t << " s < " << kChiTableSeconds << " s";
  print(1, "shift-graph chromatic table", v);
}

// 2. |V| = C(n,r), |E| = C(n,r+1), connected, for 1 <= r < n <= 9.
// Connectivity is checked as stated. For r >= 2 a tuple starting at 0 and
// ending at n-1 has no shift neighbour, so this part cannot hold; the note
// reports how far the finite graphs are from it.
void structure_counts() {
  Verdict v;
  int graphs = 0, counts_ok = 0, connected = 0, joined_later = 0, wide_checked = 0;
  std::string isolated;
  for (Value n = 2; n <= 9; ++n)
    for (std::size_t r = 1; r < n; ++r) {
      const Graph g = shift_graph(r, n);
      const std::string tag = "Sh_" + std::to_string(r) + "(" + std::to_string(n) + ")";
      const bool counts = g.order() == binomial(n, r) && g.size() == binomial(n, r + 1);
      v.expect(counts, tag + " counts");
      counts_ok += counts;
      const bool conn = is_connected(g);
      if (!conn && isolated.empty())
        for (Vertex u = 0; u < g.order(); ++u)
          if (g.degree(u) == 0) {
            isolated = g.label(u).to_string() + " isolated in " + tag;
            break;
          }
      v.expect(conn, tag + " connected");
      connected += conn;
      ++graphs;
      // All of Sh_r(n) inside one component of Sh_r(n + r - 1), where that
      // graph is under the vertex cap.
      if (binomial(n + r - 1, r) > kMaxVertices) continue;
      ++wide_checked;
      const Graph wide = shift_graph(r, n + r - 1);
      std::vector<bool> seen(wide.order(), false);
      std::vector<Vertex> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : wide.neighbours(u))
          if (!seen[w]) seen[w] = true, stack.push_back(w);
      }
      bool all = true;
      for (const auto& t : g.labels()) all = all && seen[*tuple_index(t, n + r - 1)];
      joined_later += all;
    }
  v.note << graphs << " graphs; counts exact for " << counts_ok << "; connected: " << connected << " of " << graphs
         << (isolated.empty() ? "" : ", " + isolated) << "; one component of Sh_r(n+r-1) holds Sh_r(n) for "
         << joined_later << " of " << wide_checked;
  print(2, "shift-graph structure counts and connectivity", v);
}

// 3. Decomposition invariants on seeded random pairs.
void decomposition_suite() {
  Verdict v;
  const auto start = Clock::now();
  SuiteConfig c;
  c.seed = 2024;
  c.count = kDecompPairs;
  c.caps = {8, 32};
  const SuiteReport report = run_suite(c);
  for (const char* name : {"sign_purity", "zero_singletons", "class_separation", "block_shift",
                           "zeta_inequalities", "gamma_search"}) {
    const auto it = std::find_if(report.tallies.begin(), report.tallies.end(),
                                 [&](const InvariantTally& t) { return t.name == name; });
    v.expect(it != report.tallies.end() && it->checked > 0 && it->failed == 0, name);
  }
  v.expect(report.tallies.size() > 0 && report.tallies[0].checked == kDecompPairs, "case count");
  // Class structure re-derived by the fixpoint oracle.
  std::uint64_t agreed = 0;
  for (std::uint64_t i = 0; i < kDecompPairs; ++i) {
    SplitMix64 rng(case_seed(c.seed, i));
    const auto [a, b] = random_pair(rng, c.caps);
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& cls : r_closure(a, b)) got.emplace_back(cls.lo, cls.hi);
    if (got == oracle::r_classes(a, b)) ++agreed;
  }
  v.expect(agreed == kDecompPairs, "closure oracle agreement");
  const double t = seconds_since(start);
  v.expect(t < kDecompSeconds, "runtime");
  v.note << kDecompPairs << " pairs, " << report.failures.size() << " failures, closure oracle agrees on " << agreed
         << "; " << t << " s < " << kDecompSeconds << " s";
  print(3, "decomposition invariant suite", v);
}

// 4. Canonical witness vs exhaustive cut-point search on every pattern of
// length <= 5 (merged image <= 10).
void oracle_equivalence() {
  Verdict v;
  std::uint64_t classes = 0, pairs = 0, discrepancies = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& [a, b] : oracle::all_patterns(n)) {
      ++pairs;
      const auto d = decompose(a, b);
      for (std::size_t i = 0; i < d.classes.size(); ++i) {
        if (!d.analyses[i]) continue;
        const ClassAnalysis& an = *d.analyses[i];
        IncreasingTuple x = a.slice(an.cls.lo, an.cls.hi), y = b.slice(an.cls.lo, an.cls.hi);
        if (an.swapped) std::swap(x, y);
        const std::size_t canonical = an.n_a();
        const auto witness = is_k_orderly(x, y, canonical);
        const bool canonical_ok = witness && validate_orderly_blocks(x, y, *witness) &&
                                  (canonical == 1 || !is_k_orderly(x, y, canonical - 1));
        const auto cuts = oracle::minimal_k_by_cuts(x, y, canonical + 1);
        ++classes;
        if (!canonical_ok || cuts != canonical) ++discrepancies;
      }
      // Whole pair: library least k against the cut oracle.
      const auto lib = minimal_orderly_k(a, b, 6);
      if (lib != oracle::minimal_k_by_cuts(a, b, 6)) ++discrepancies;
    }
  v.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  v.note << pairs << " patterns, " << classes << " classes, " << discrepancies << " discrepancies";
  print(4, "canonical orderly witness matches exhaustive search", v);
}

bool transfer_holds(const IncreasingTuple& x, const IncreasingTuple& y, const GSequence& g) {
  for (std::size_t i = 1; i < g.k; ++i)
    for (std::size_t p = 0; p < x.size(); ++p)
      for (std::size_t q = 0; q < x.size(); ++q) {
        if (g.level_of[p] != i || g.level_of[q] != i - 1) continue;
        const auto& gp = g.levels[i].at(p);
        const auto& gq = g.levels[i - 1].at(q);
        const int want = oracle::cmp(x[p], y[q]);
        const int got = gp < gq ? -1 : (gq < gp ? 1 : 0);
        if (want != got) return false;
      }
  return true;
}

// 5. Cover embedding on every pattern of length <= 5 plus seeded random
// pairs with values < 12, for N = 3, 4, 5.
void finite_embedding_check() {
  Verdict v;
  const auto start = Clock::now();
  std::vector<std::pair<IncreasingTuple, IncreasingTuple>> pairs;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& p : oracle::all_patterns(n)) pairs.push_back(std::move(p));
  const std::size_t exhaustive = pairs.size();
  SplitMix64 rng(12);
  for (std::uint64_t i = 0; i < kRandomEmbedPairs; ++i) pairs.push_back(random_pair(rng, {5, 12}));

  std::uint64_t instances = 0, failed = 0, sequences = 0, bad_sequences = 0;
  for (const auto& [a, b] : pairs) {
    try {
      const CoverWitness w = orderly_cover(a, b);
      for (const auto& piece : w.pieces) {
        if (piece.kind == PieceKind::equal_singleton) continue;
        IncreasingTuple x = a.slice(piece.lo, piece.hi), y = b.slice(piece.lo, piece.hi);
        if (piece.kind == PieceKind::ba_orderly) std::swap(x, y);
        ++sequences;
        if (!transfer_holds(x, y, build_g_sequence(x, y, piece.k, piece.blocks))) ++bad_sequences;
      }
      for (Value N = 3; N <= 5; ++N) {
        ++instances;
        const EmbeddingMap e = cover_embedding(a, b, w, N);
        const Digraph arcs = detail::lshift_digraph_unchecked(w.k, N);
        bool ok = e.images.size() == arcs.order() && std::get<Graph>(e.source) == arcs.symmetrize();
        for (auto [u, t] : arcs.arcs()) ok = ok && oracle::same_order_type(e.images[u], e.images[t], a, b);
        if (!ok) ++failed;
      }
    } catch (const std::exception& ex) {
      ++failed;
      v.expect(false, a.to_string() + " " + b.to_string() + ": " + ex.what());
    }
  }
  const double t = seconds_since(start);
  v.expect(failed == 0, std::to_string(failed) + " failed embeddings");
  v.expect(bad_sequences == 0, std::to_string(bad_sequences) + " g sequences break the transfer property");
  v.expect(instances >= kMinEmbedInstances, "instance count");
  v.expect(t < kEmbedSeconds, "runtime");
  v.note << instances << " instances (" << exhaustive << " patterns + " << kRandomEmbedPairs << " seeded pairs, x3 N), "
         << failed << " failures, " << sequences << " g sequences checked; " << t << " s < " << kEmbedSeconds << " s";
  print(5, "shift-graph embedding at finite scale", v);
}

// 6. The pattern of ((0,1),(1,2)) gives exactly the shift graph.
void pattern_identity() {
  Verdict v;
  const auto p = otp({0, 1}, {1, 2});
  for (Value n = 3; n <= 8; ++n) {
    const Graph o = order_type_graph(p, n);
    const Graph s = shift_graph(2, n);
    v.expect(o.labels() == s.labels() && o.edges() == s.edges(), "n=" + std::to_string(n));
  }
  // n = 2: one vertex, no edges on either side.
  v.expect(order_type_graph(p, 2).size() == 0 && order_type_graph(p, 2).order() == 1, "n=2");
  v.note << "n=2..8 edge sets identical";
  print(6, "order-type pattern identity with Sh_2", v);
}

// 7. Colouring calculus on random small graphs.
void colouring_calculus() {
  Verdict v;
  SplitMix64 rng(77);
  auto chi = [](const Graph& g) { return g.order() == 0 ? 0u : chromatic_number(g).chi(); };
  int checked = 0;
  for (int trial = 0; trial < kCalculusGraphs; ++trial) {
    const std::size_t n = 2 + rng.below(11);
    const Graph g = oracle::random_graph(rng, n, 20 + rng.below(60));
    const std::uint32_t chi_g = chi(g);
    v.expect(chi_g == oracle::chromatic(g), "exact solver vs brute force");

    // (1) vertex partition.
    const std::size_t parts = 2 + rng.below(2);
    std::vector<std::vector<Vertex>> part(parts);
    for (Vertex u = 0; u < n; ++u) part[rng.below(parts)].push_back(u);
    std::vector<VertexPiece> pieces;
    std::uint32_t sum = 0;
    for (const auto& p : part) {
      if (p.empty()) continue;
      const auto r = chromatic_number(g.induced(p));
      sum += r.chi();
      pieces.push_back({p, r.witness});
    }
    const Coloring s = sum_coloring(g, pieces);
    v.expect(verify_coloring(g, s) && s.palette <= sum && chi_g <= sum, "sum");

    // (2) symmetric edge cover.
    std::vector<std::vector<Edge>> cover(2);
    for (const Edge& e : g.edges()) {
      const auto where = rng.below(3);
      if (where != 1) cover[0].push_back(e);
      if (where != 0) cover[1].push_back(e);
    }
    std::vector<EdgePiece> edge_pieces;
    std::uint64_t product = 1;
    for (const auto& edges : cover) {
      const auto r = chromatic_number(Graph::unlabelled(n, edges));
      product *= r.chi();
      edge_pieces.push_back({edges, r.witness});
    }
    const Coloring p = product_coloring(g, edge_pieces);
    v.expect(verify_coloring(g, p) && p.palette <= product && chi_g <= product, "product");

    // (3) homomorphism pull-back.
    const std::size_t m = 1 + rng.below(12);
    VertexMap f(m);
    for (auto& x : f) x = static_cast<Vertex>(rng.below(n));
    std::vector<Edge> h_edges;
    for (Vertex x = 0; x < m; ++x)
      for (Vertex y = x + 1; y < m; ++y)
        if (g.adjacent(f[x], f[y]) && rng.below(4) != 0) h_edges.emplace_back(x, y);
    const Graph h = Graph::unlabelled(m, h_edges);
    v.expect(verify_homomorphism(f, h, g), "random map is a homomorphism");
    const Coloring back = pullback_coloring(f, h, g, chromatic_number(g).witness);
    v.expect(verify_coloring(h, back) && chi(h) <= chi_g, "pullback");

    // (4) strong surjective homomorphism from a blow-up.
    const std::size_t q = 1 + rng.below(6);
    const Graph base = oracle::random_graph(rng, q, 50);
    std::vector<std::uint32_t> copies(q);
    for (auto& c : copies) c = 1 + static_cast<std::uint32_t>(rng.below(2));
    const auto [blown, proj] = duplicate_vertices(base, copies);
    v.expect(blown.order() <= 12 && is_strong_surjective_homomorphism(proj, blown, base), "blow-up");
    v.expect(chi(blown) == chi(base), "strong surjective homomorphism keeps chi");
    ++checked;
  }
  v.note << checked << " random graphs, four operations each";
  print(7, "colouring calculus", v);
}

// 8. No triangle in Sh_2(n) for n <= 8; a 5-cycle inside Sh_2(5).
void triangles_and_odd_cycles() {
  Verdict v;
  const Graph k3 = Graph::unlabelled(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  for (Value n = 3; n <= 8; ++n) {
    const auto r = find_subgraph_embedding(k3, shift_graph(2, n), kDefaultBudget);
    v.expect(r.status == SearchStatus::absent, "K3 search at n=" + std::to_string(n));
  }
  const Graph c5 = Graph::unlabelled(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const Graph sh5 = shift_graph(2, 5);
  const auto r = find_subgraph_embedding(c5, sh5, kDefaultBudget);
  v.expect(r.status == SearchStatus::found && verify_homomorphism(r.map, c5, sh5), "C5 in Sh_2(5)");
  v.expect(chromatic_number(sh5).chi() == 3, "chi(Sh_2(5)) = 3");
  v.note << "K3 absent for n=3..8, C5 found, chi(Sh_2(5)) = 3";
  print(8, "triangle-freeness and odd cycles", v);
}

std::string run(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return out + "\nstatus " + std::to_string(status);
}

// 9. Byte-identical suite output across runs and thread counts.
void determinism(const char* cli) {
  Verdict v;
  SuiteConfig c;
  c.seed = 424242;
  c.count = 400;
  const std::string first = format_table(run_suite(c));
  const std::string second = format_table(run_suite(c));
  c.threads = 4;
  const std::string threaded = format_table(run_suite(c));
  v.expect(first == second, "two in-process runs");
  v.expect(first == threaded, "1 vs 4 threads in process");
  if (cli) {
    const std::string base = std::string("\"") + cli + "\" suite --seed 424242 --count 400";
    const std::string x = run(base + " --threads 1");
    const std::string y = run(base + " --threads 1");
    const std::string z = run(base + " --threads 4");
    v.expect(x == y, "two CLI runs");
    v.expect(x == z, "1 vs 4 threads via CLI");
    v.expect(x == first + "\nstatus 0", "CLI output equals library output");
    v.note << "CLI and library, ";
  }
  v.note << "seed 424242, 400 cases";
  print(9, "deterministic suite output", v);
}

}  // namespace

int main(int argc, char** argv) {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);
  shift_chromatic_table();
  structure_counts();
  decomposition_suite();
  oracle_equivalence();
  finite_embedding_check();
  pattern_identity();
  colouring_calculus();
  triangles_and_odd_cycles();
  determinism(argc > 1 ? argv[1] : nullptr);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
