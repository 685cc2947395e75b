// Command-line front end: instance generation, coloring, verification, the
// exact oracle and the benchmark harness.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfcolor/cfcolor.hpp"

namespace {

using namespace cfcolor;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct ColorOutcome {
  Coloring coloring;
  int k = 1;
};

// Picks the verification strength k per algorithm and runs the matching
// pipeline on a normalized instance.
ColorOutcome run_algorithm(const std::string& algo, const Instance& inst, int k_opt,
                           std::uint64_t seed) {
  if (algo == "circle-cf") {
    if (inst.kind != Instance::Kind::intervals)
      throw InputError("circle-cf expects an intervals instance");
    return {cf_color_circle_graph(inst.intervals), 1};
  }
  if (algo == "grounded-cf") {
    if (inst.kind != Instance::Kind::grounded_lshapes)
      throw InputError("grounded-cf expects a grounded_lshapes instance");
    return {cf_color_grounded(inst.grounded), 1};
  }
  if (algo == "lshapes-2cf") {
    if (inst.kind != Instance::Kind::corner_lshapes)
      throw InputError("lshapes-2cf expects a corner_lshapes instance");
    return {k_cf_color_lshapes(inst.corners), 2};
  }
  if (algo == "frames-4cf") {
    if (inst.kind != Instance::Kind::frames)
      throw InputError("frames-4cf expects a frames instance");
    return {k_cf_color_frames(inst.frames), 4};
  }
  if (algo == "pattern-scf") {
    PatternFamily fam;
    Coloring c;
    if (inst.kind == Instance::Kind::corner_lshapes)
      c = k_cf_color_lshapes(inst.corners, nullptr, &fam);
    else if (inst.kind == Instance::Kind::frames)
      c = k_cf_color_frames(inst.frames, nullptr, &fam);
    else
      throw InputError("pattern-scf expects corner_lshapes or frames");
    return {std::move(c), std::max(1, fam.s)};
  }
  if (algo == "bounded-chromatic") {
    if (inst.kind != Instance::Kind::strings)
      throw InputError("bounded-chromatic expects a strings instance");
    // The proper partition is an input to the library routine; the CLI
    // supplies the degeneracy-greedy coloring of the intersection graph.
    const Coloring classes = degeneracy_color(intersection_graph(inst.strings));
    return {cf_color_bounded_chromatic(inst.strings, classes.colors), 1};
  }
  if (algo == "general-kcf") {
    if (k_opt < 2) throw InputError("general-kcf needs --k of at least 2");
    return {k_cf_color_general(instance_hypergraph(inst), k_opt, RandomSeed{seed}), k_opt};
  }
  throw InputError("unknown algorithm: " + algo);
}

// First hyperedge without a color of multiplicity in [1, k], if any.
std::optional<std::size_t> first_violation(const Hypergraph& h, const Coloring& c, int k) {
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    Hypergraph one;
    one.n = h.n;
    one.edges.push_back(h.edges[i]);
    if (!verify_k_cf(one, c, k)) return i;
  }
  return std::nullopt;
}

std::string edge_to_string(const std::vector<VertexId>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

int cmd_gen(const std::string& kind, int n, int t, int k, int m, std::uint64_t seed,
            const std::string& out) {
  Instance inst;
  if (kind == "intervals-random") {
    inst.kind = Instance::Kind::intervals;
    inst.intervals = random_intervals(n, RandomSeed{seed});
  } else if (kind == "grounded-random") {
    inst.kind = Instance::Kind::grounded_lshapes;
    inst.grounded = random_grounded_lshapes(n, RandomSeed{seed});
  } else if (kind == "frames-random") {
    inst.kind = Instance::Kind::frames;
    inst.frames = random_frames(n, RandomSeed{seed});
  } else if (kind == "lshapes-random") {
    inst.kind = Instance::Kind::corner_lshapes;
    inst.corners = random_corner_lshapes(n, RandomSeed{seed});
  } else if (kind == "lb-circle") {
    inst.kind = Instance::Kind::intervals;
    inst.intervals = gen_circle_lower_bound(t, k);
  } else if (kind == "frames-gadget") {
    inst.kind = Instance::Kind::frames;
    inst.frames = gen_frames_clique_gadget(m);
  } else if (kind == "gbonc") {
    inst.kind = Instance::Kind::hypergraph;
    inst.hyper = gen_gbonc(complete_graph(t), k);
  } else if (kind == "filaments") {
    inst.kind = Instance::Kind::hypergraph;
    inst.hyper = gen_interval_filaments(t, k).hypergraph;
  } else {
    throw InputError("unknown generator kind: " + kind);
  }
  save_json_file(out, instance_to_json(inst));
  std::cout << "wrote " << kind_name(inst.kind) << " instance with " << inst.size()
            << " items to " << out << "\n";
  return kExitOk;
}

int cmd_color(const std::string& algo, const std::string& in, const std::string& out, int k,
              std::uint64_t seed) {
  const Instance inst = normalize(parse_instance(load_json_file(in)));
  ColorOutcome outcome = run_algorithm(algo, inst, k, seed);
  const Hypergraph h = instance_hypergraph(inst);
  const bool ok = verify_k_cf(h, outcome.coloring, outcome.k);
  if (!ok) {
    const auto bad = first_violation(h, outcome.coloring, outcome.k);
    std::cerr << "verification FAILED";
    if (bad) std::cerr << " on hyperedge " << edge_to_string(h.edges[*bad]);
    std::cerr << "; refusing to write\n";
    return kExitVerification;
  }
  ColoringFile cf;
  cf.coloring = std::move(outcome.coloring);
  cf.algo = algo;
  cf.k = outcome.k;
  cf.verified = true;
  save_json_file(out, coloring_to_json(cf));
  std::cout << "colored " << inst.size() << " items with " << cf.coloring.palette_size
            << " colors (k=" << cf.k << ", verified) -> " << out << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& in, const std::string& coloring_path, int k) {
  const Instance inst = normalize(parse_instance(load_json_file(in)));
  const ColoringFile cf = parse_coloring(load_json_file(coloring_path));
  const Hypergraph h = instance_hypergraph(inst);
  if (static_cast<int>(cf.coloring.colors.size()) != h.n)
    throw InputError("coloring length does not match the instance");
  const auto bad = first_violation(h, cf.coloring, k);
  if (bad) {
    std::cout << "FAIL: hyperedge " << edge_to_string(h.edges[*bad])
              << " has no color appearing at most " << k << " times\n";
    return kExitVerification;
  }
  std::cout << "PASS: " << h.edge_count() << " hyperedges satisfied with k=" << k << "\n";
  return kExitOk;
}

int cmd_exact(const std::string& in, int k, std::optional<int> limit) {
  const Instance inst = normalize(parse_instance(load_json_file(in)));
  const Hypergraph h = instance_hypergraph(inst);
  const ExactResult r = exact_k_cf_chromatic(h, k, limit);
  if (r.exceeded_limit)
    std::cout << "exceeds limit " << r.value << "\n";
  else
    std::cout << r.value << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& suite, const std::string& out, int seeds) {
  std::ofstream csv(out);
  if (!csv) throw InputError("cannot write file: " + out);
  csv << "suite,instance_kind,n,seed,algo,k,colors,verified,millis\n";
  auto row = [&](const std::string& kind, int n, std::uint64_t seed, const std::string& algo,
                 int k, const Coloring& c, bool verified, double ms) {
    csv << suite << ',' << kind << ',' << n << ',' << seed << ',' << algo << ',' << k << ','
        << c.palette_size << ',' << (verified ? "true" : "false") << ',' << ms << "\n";
  };
  auto timed = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Coloring c = fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::pair<Coloring, double>(
        std::move(c), std::chrono::duration<double, std::milli>(stop - start).count());
  };

  if (suite == "circle-growth") {
    for (int n : {16, 64, 256, 1024, 4096})
      for (int s = 0; s < seeds; ++s) {
        auto items = random_intervals(n, RandomSeed{static_cast<std::uint64_t>(s)});
        auto [c, ms] = timed([&] { return cf_color_circle_graph(items); });
        const bool ok = verify_k_cf(neighborhood_hypergraph(overlap_graph(items)), c, 1);
        row("intervals", n, s, "circle-cf", 1, c, ok, ms);
      }
  } else if (suite == "grounded-growth") {
    for (int n : {100, 500, 2000})
      for (int s = 0; s < seeds; ++s) {
        auto items = random_grounded_lshapes(n, RandomSeed{static_cast<std::uint64_t>(s)});
        auto [c, ms] = timed([&] { return cf_color_grounded(items); });
        const bool ok = verify_k_cf(neighborhood_hypergraph(intersection_graph(items)), c, 1);
        row("grounded_lshapes", n, s, "grounded-cf", 1, c, ok, ms);
      }
  } else if (suite == "lshapes-growth") {
    for (int n : {100, 500, 2000})
      for (int s = 0; s < seeds; ++s) {
        auto items = random_corner_lshapes(n, RandomSeed{static_cast<std::uint64_t>(s)});
        auto [c, ms] = timed([&] { return k_cf_color_lshapes(items); });
        const bool ok = verify_k_cf(neighborhood_hypergraph(intersection_graph(items)), c, 2);
        row("corner_lshapes", n, s, "lshapes-2cf", 2, c, ok, ms);
      }
  } else if (suite == "frames-growth") {
    for (int n : {100, 500, 2000})
      for (int s = 0; s < seeds; ++s) {
        auto items = random_frames(n, RandomSeed{static_cast<std::uint64_t>(s)});
        auto [c, ms] = timed([&] { return k_cf_color_frames(items); });
        const bool ok = verify_k_cf(neighborhood_hypergraph(intersection_graph(items)), c, 4);
        row("frames", n, s, "frames-4cf", 4, c, ok, ms);
      }
  } else if (suite == "general-kcf-growth") {
    for (int n : {50, 100, 200})
      for (int s = 0; s < seeds; ++s) {
        auto items = random_intervals(n, RandomSeed{static_cast<std::uint64_t>(s)});
        Hypergraph h = neighborhood_hypergraph(overlap_graph(items));
        auto [c, ms] = timed(
            [&] { return k_cf_color_general(h, 2, RandomSeed{static_cast<std::uint64_t>(s)}); });
        const bool ok = verify_k_cf(h, c, 2);
        row("hypergraph", n, s, "general-kcf", 2, c, ok, ms);
      }
  } else {
    throw InputError("unknown bench suite: " + suite +
                     " (have circle-growth, grounded-growth, lshapes-growth, frames-growth, "
                     "general-kcf-growth)");
  }
  std::cout << "wrote " << out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conflict-free coloring toolkit for geometric intersection graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_kind, gen_out;
  int gen_n = 0, gen_t = 2, gen_k = 1, gen_m = 2;
  std::uint64_t gen_seed = 0;
  gen->add_option("kind", gen_kind,
                  "intervals-random | grounded-random | frames-random | lshapes-random | "
                  "lb-circle | frames-gadget | gbonc | filaments")
      ->required();
  gen->add_option("--n", gen_n, "size for random kinds");
  gen->add_option("--t", gen_t, "t parameter (lb-circle, gbonc, filaments)");
  gen->add_option("--k", gen_k, "k parameter (lb-circle, gbonc, filaments)");
  gen->add_option("--m", gen_m, "m parameter (frames-gadget)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output file")->required();

  // color
  auto* color = app.add_subcommand("color", "run a coloring algorithm and verify the result");
  std::string color_algo, color_in, color_out;
  int color_k = 2;
  std::uint64_t color_seed = 0;
  color
      ->add_option("--algo", color_algo,
                   "circle-cf | grounded-cf | lshapes-2cf | frames-4cf | pattern-scf | "
                   "bounded-chromatic | general-kcf")
      ->required();
  color->add_option("--in", color_in, "instance file")->required();
  color->add_option("--out", color_out, "coloring file")->required();
  color->add_option("--k", color_k, "k for general-kcf");
  color->add_option("--seed", color_seed, "seed for randomized algorithms");

  // verify
  auto* verify = app.add_subcommand("verify", "check a coloring file against an instance");
  std::string verify_in, verify_coloring;
  int verify_k = 1;
  verify->add_option("--in", verify_in, "instance file")->required();
  verify->add_option("--coloring", verify_coloring, "coloring file")->required();
  verify->add_option("--k", verify_k, "k-CF strength");

  // exact
  auto* exact = app.add_subcommand("exact", "exact brute-force chromatic value");
  std::string exact_in;
  int exact_k = 1;
  int exact_limit = -1;
  exact->add_option("--in", exact_in, "instance file")->required();
  exact->add_option("--k", exact_k, "k-CF strength");
  exact->add_option("--limit", exact_limit, "color cap; exceeding it is reported, not an error");

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark suite and write CSV");
  std::string bench_suite, bench_out;
  int bench_seeds = 5;
  bench->add_option("--suite", bench_suite, "suite name")->required();
  bench->add_option("--out", bench_out, "CSV output file")->required();
  bench->add_option("--seeds", bench_seeds, "seeds per ladder point");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_t, gen_k, gen_m, gen_seed, gen_out);
    if (color->parsed()) return cmd_color(color_algo, color_in, color_out, color_k, color_seed);
    if (verify->parsed()) return cmd_verify(verify_in, verify_coloring, verify_k);
    if (exact->parsed())
      return cmd_exact(exact_in, exact_k,
                       exact_limit >= 0 ? std::optional<int>(exact_limit) : std::nullopt);
    if (bench->parsed()) return cmd_bench(bench_suite, bench_out, bench_seeds);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitOk;
}
