// cutwave: compress graph signals with signal-adapted wavelet trees.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cutwave/baselines.hpp"
#include "cutwave/basis.hpp"
#include "cutwave/bench.hpp"
#include "cutwave/errors.hpp"
#include "cutwave/formats.hpp"
#include "cutwave/graph.hpp"
#include "cutwave/io.hpp"
#include "cutwave/layout.hpp"
#include "cutwave/synth.hpp"
#include "cutwave/wavelet.hpp"

using namespace cutwave;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CutFlags {
  std::size_t q = 0;
  std::string algo = "fswt";
  double beta_max = 1000.0;
  int search_iters = 10;
  std::size_t cheb_p = 20;
  int power_iters = 10;
  std::uint64_t seed = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "Edge budget for signal-adapted cuts")->capture_default_str();
    cmd->add_option("--algo", algo, "Cut algorithm")->check(CLI::IsMember({"swt", "fswt"}))->capture_default_str();
    cmd->add_option("--beta-max", beta_max, "Upper end of the beta search (swt)")->capture_default_str();
    cmd->add_option("--search-iters", search_iters, "Interior golden-section probes (swt)")->capture_default_str();
    cmd->add_option("--cheb-p", cheb_p, "Chebyshev terms (fswt)")->capture_default_str();
    cmd->add_option("--power-iters", power_iters, "Power iterations (fswt)")->capture_default_str();
    cmd->add_option("--seed", seed, "Start-vector seed (fswt)")->capture_default_str();
  }

  SwtParams swt() const { return {beta_max, search_iters}; }
  FswtParams fswt() const { return {cheb_p, power_iters, seed}; }

  BasisConfig basis() const {
    BasisConfig cfg;
    cfg.q = q;
    cfg.algo = algo == "swt" ? CutAlgorithm::swt : CutAlgorithm::fswt;
    cfg.swt = swt();
    cfg.fswt = fswt();
    return cfg;
  }
};

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--grid: '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw UsageError("--grid is empty");
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// One line, tab separated: "error<TAB><kind><TAB><message>".
int report(const std::string& kind, const std::string& message, int code) {
  std::string flat = message;
  for (char& c : flat) {
    if (c == '\n' || c == '\t') c = ' ';
  }
  std::cerr << "error\t" << kind << '\t' << flat << '\n';
  return code;
}

Signal load_checked_signal(const Graph& g, const std::string& path) {
  Signal w = load_signal(path);
  try {
    check_signal(g, w);
  } catch (const std::exception& e) {
    throw DimensionError(path + ": " + e.what());
  }
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signal-adapted graph wavelet compression"};
  app.require_subcommand(1);

  // compress
  std::string graph_path, signal_path, out_path, tree_out;
  std::optional<std::size_t> keep;
  CutFlags cut;
  auto* compress_cmd = app.add_subcommand("compress", "Build a basis, keep the top coefficients, write a compressed file");
  compress_cmd->add_option("--graph", graph_path, "Edge-list file")->required();
  compress_cmd->add_option("--signal", signal_path, "Signal file")->required();
  compress_cmd->add_option("--keep", keep, "Coefficients to keep (default: all)");
  compress_cmd->add_option("--out", out_path, "Compressed output file")->required();
  compress_cmd->add_option("--tree-out", tree_out, "Also write the tree");
  cut.attach(compress_cmd);

  // decompress
  std::string compressed_path;
  auto* decompress_cmd = app.add_subcommand("decompress", "Rebuild a signal from a compressed file");
  decompress_cmd->add_option("--compressed", compressed_path, "Compressed file")->required();
  decompress_cmd->add_option("--graph", graph_path, "Edge-list file")->required();
  decompress_cmd->add_option("--out", out_path, "Signal output file")->required();

  // transform
  auto* transform_cmd = app.add_subcommand("transform", "Write the coefficients of a built basis");
  transform_cmd->add_option("--graph", graph_path, "Edge-list file")->required();
  transform_cmd->add_option("--signal", signal_path, "Signal file")->required();
  transform_cmd->add_option("--out", out_path, "Coefficient TSV")->required();
  transform_cmd->add_option("--tree-out", tree_out, "Also write the tree");
  cut.attach(transform_cmd);

  // bench
  std::string methods = "fswt,swt,gwt,gft";
  std::string grid = "0.02,0.05,0.1,0.2";
  bool no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "Error versus size for each method");
  bench_cmd->add_option("--graph", graph_path, "Edge-list file")->required();
  bench_cmd->add_option("--signal", signal_path, "Signal file")->required();
  bench_cmd->add_option("--methods", methods, "Comma list of fswt, swt, gwt, gft")->capture_default_str();
  bench_cmd->add_option("--grid", grid, "Comma list of size fractions")->capture_default_str();
  bench_cmd->add_option("--out", out_path, "TSV output")->required();
  bench_cmd->add_flag("--no-timing", no_timing, "Write 0 in the seconds column");
  cut.attach(bench_cmd);

  // layout
  std::string mode = "laplacian";
  auto* layout_cmd = app.add_subcommand("layout", "Spectral vertex coordinates");
  layout_cmd->add_option("--graph", graph_path, "Edge-list file")->required();
  layout_cmd->add_option("--signal", signal_path, "Signal file (wavelet mode)");
  layout_cmd->add_option("--mode", mode, "laplacian or wavelet")
      ->check(CLI::IsMember({"laplacian", "wavelet"}))
      ->capture_default_str();
  layout_cmd->add_option("--beta-max", cut.beta_max, "Regularization beta (wavelet mode)")->capture_default_str();
  layout_cmd->add_option("--out", out_path, "TSV output")->required();

  // synth
  SynthConfig synth;
  std::optional<double> sigma;
  std::string prefix;
  auto* synth_cmd = app.add_subcommand("synth", "Planted-cut synthetic instance");
  synth_cmd->set_help_flag("--help", "Print this help message and exit");
  synth_cmd->add_option("--n", synth.n, "Vertices (even)")->capture_default_str();
  synth_cmd->add_option("--m", synth.m, "Edges")->capture_default_str();
  synth_cmd->add_option("--h", synth.h, "Cross-edge probability")->capture_default_str();
  synth_cmd->add_option("--alpha", synth.alpha, "Planted cut energy")->capture_default_str();
  synth_cmd->add_option("--sigma", sigma, "Noise std (default: |mu|)");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--out", prefix, "Output prefix: <prefix>.graph, .signal, .planted")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report("usage", e.what(), 2);
  }

  try {
    if (compress_cmd->parsed()) {
      const Graph g = load_graph(graph_path);
      const Signal w = normalize_signal(load_checked_signal(g, signal_path));
      const WaveletTree t = build_basis(g, w, cut.basis());
      const CompressResult r = compress(g, t, w, keep.value_or(g.num_vertices()));
      if (r.keep_clamped) {
        std::cerr << "warning: --keep exceeds the " << g.num_vertices() << " coefficients; keeping all\n";
      }
      if (cut.q > 0 && r.compressed.cuts.empty()) {
        std::cerr << "warning: budget q=" << cut.q << " admitted no signal-adapted cut\n";
      }
      write_file_atomic(out_path, format_compressed(r.compressed));
      if (!tree_out.empty()) write_file_atomic(tree_out, format_tree(t));
      const double rel = r.signal_energy > 0.0 ? r.dropped_energy / r.signal_energy : 0.0;
      std::cout << "size_bits\t" << r.compressed.size_bits() << '\n'
                << "size_fraction\t" << fmt12(r.compressed.size_fraction()) << '\n'
                << "budget_used\t" << r.compressed.budget_used() << '\n'
                << "predicted_l2_error\t" << fmt12(std::sqrt(r.dropped_energy)) << '\n'
                << "predicted_relative_error\t" << fmt12(rel) << '\n';
    } else if (decompress_cmd->parsed()) {
      const Graph g = load_graph(graph_path);
      CompressedSignal c;
      try {
        c = parse_compressed(read_file(compressed_path));
      } catch (const ParseError& e) {
        throw ParseError(compressed_path, e);
      }
      write_file_atomic(out_path, format_signal(decompress(c, g)));
    } else if (transform_cmd->parsed()) {
      const Graph g = load_graph(graph_path);
      const Signal w = normalize_signal(load_checked_signal(g, signal_path));
      const WaveletTree t = build_basis(g, w, cut.basis());
      const Transform tr = transform(t, w);
      std::ostringstream os;
      os << "node\tlevel\tkind\tcoefficient\tenergy\n";
      os << "avg\t0\t-\t" << fmt12(tr.average) << '\t' << fmt12(average_energy(tr.average, g.num_vertices()))
         << '\n';
      for (const auto& [id, a] : tr.diffs) {
        const TreeNode& nd = t.node(id);
        const auto [l, r] = *nd.children;
        os << id << '\t' << nd.level << '\t' << (nd.kind == SplitKind::adapted ? "adapted" : "structural") << '\t'
           << fmt12(a) << '\t' << fmt12(coefficient_energy(a, t.node(l).members.size(), t.node(r).members.size()))
           << '\n';
      }
      write_file_atomic(out_path, os.str());
      if (!tree_out.empty()) write_file_atomic(tree_out, format_tree(t));
    } else if (bench_cmd->parsed()) {
      const Graph g = load_graph(graph_path);
      const Signal w = normalize_signal(load_checked_signal(g, signal_path));
      BenchConfig cfg;
      cfg.methods = split_list(methods);
      cfg.grid = parse_grid(grid);
      cfg.swt = cut.swt();
      cfg.fswt = cut.fswt();
      const auto records = run_bench(g, w, cfg);
      for (const auto& r : records) {
        if (r.failure) std::cerr << "warning: " << r.method << " at " << fmt12(r.target) << ": " << *r.failure << '\n';
      }
      write_file_atomic(out_path, format_bench(records, !no_timing));
    } else if (layout_cmd->parsed()) {
      const Graph g = load_graph(graph_path);
      Layout layout;
      if (mode == "wavelet") {
        if (signal_path.empty()) throw UsageError("layout --mode wavelet requires --signal");
        layout = wavelet_layout(g, load_checked_signal(g, signal_path), cut.beta_max);
      } else {
        layout = laplacian_layout(g);
      }
      write_file_atomic(out_path, format_layout(layout));
    } else if (synth_cmd->parsed()) {
      synth.sigma = sigma;
      const SynthInstance inst = generate(synth);
      write_file_atomic(prefix + ".graph", format_graph(inst.graph));
      write_file_atomic(prefix + ".signal", format_signal(inst.signal));
      write_file_atomic(prefix + ".planted", format_planted(inst.planted));
    }
  } catch (const UsageError& e) {
    return report("usage", e.what(), 2);
  } catch (const ParseError& e) {
    return report("parse", e.what(), 3);
  } catch (const ValidationError& e) {
    return report("validation", e.what(), 4);
  } catch (const FormatError& e) {
    return report("format", e.what(), 4);
  } catch (const DimensionError& e) {
    return report("dimension", e.what(), 4);
  } catch (const NumericalError& e) {
    return report("numerical", e.what(), 5);
  } catch (const std::exception& e) {
    return report("io", e.what(), 6);
  }
  return 0;
}
