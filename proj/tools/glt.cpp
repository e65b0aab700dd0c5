// glt: per-vertex graphlet frequency tables for sparse undirected graphs.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphlet/oracle.hpp"
#include "graphlet/transform.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitStructural = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitInconsistency = 4;
constexpr int kExitIo = 5;

struct RunConfig {
  std::string input_path;
  std::string format = "auto";  // edgelist|mtx|auto
  std::string dict_spec = "all";
  std::string output_path;  // empty: stdout
  std::string emit = "net";  // raw|net|both
  std::string separator = "tab";
  bool header = false;
  bool symmetrize = true;
  bool lenient = false;
  int threads = 0;
  bool timing = false;
  bool oracle = false;
};

bool looks_like_matrix_market(const std::string& text) {
  return text.rfind("%%MatrixMarket", 0) == 0;
}

void write_table(std::ostream& out, const graphlet::FrequencyField& field,
                 const RunConfig& cfg, graphlet::vertex_t label_base,
                 const char* column_prefix) {
  const char sep = cfg.separator == "comma" ? ',' : '\t';
  if (cfg.header) {
    out << 'v';
    for (int id : field.dictionary().ids()) out << sep << column_prefix << id;
    out << '\n';
  }
  for (graphlet::vertex_t v = 0; v < field.num_vertices(); ++v) {
    out << (v + label_base);
    for (std::size_t c = 0; c < field.num_columns(); ++c)
      out << sep << field.at(v, c);
    out << '\n';
  }
}

void emit_to(const std::string& path, const graphlet::FrequencyField& field,
             const RunConfig& cfg, graphlet::vertex_t label_base,
             const char* column_prefix) {
  if (path.empty()) {
    write_table(std::cout, field, cfg, label_base, column_prefix);
    return;
  }
  std::ofstream out(path);
  if (!out) throw graphlet::IoError("cannot open output file '" + path + "'");
  write_table(out, field, cfg, label_base, column_prefix);
  if (!out.good())
    throw graphlet::IoError("write failure on '" + path + "'");
}

int run(const RunConfig& cfg) {
  std::ifstream in(cfg.input_path, std::ios::binary);
  if (!in)
    throw graphlet::IoError("cannot open input file '" + cfg.input_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad())
    throw graphlet::IoError("read failure on '" + cfg.input_path + "'");
  std::string text = buffer.str();

  bool use_mtx;
  if (cfg.format == "mtx") {
    use_mtx = true;
  } else if (cfg.format == "edgelist") {
    use_mtx = false;
  } else {
    use_mtx = looks_like_matrix_market(text);
    if (!use_mtx) {
      auto dot = cfg.input_path.rfind('.');
      std::string ext =
          dot == std::string::npos ? "" : cfg.input_path.substr(dot);
      use_mtx = ext == ".mtx" || ext == ".mm";
    }
  }

  std::istringstream stream(text);
  graphlet::EdgeCollection ec =
      use_mtx ? graphlet::parse_matrix_market(stream)
              : graphlet::parse_edge_list(stream);
  const graphlet::vertex_t label_base = use_mtx ? 1 : 0;

  graphlet::SanitizeOptions sopt;
  sopt.symmetrize = cfg.symmetrize;
  auto [g, report] = graphlet::build_adjacency(ec, sopt);
  if (report.self_loops_dropped)
    std::cerr << "warning: dropped " << report.self_loops_dropped
              << " self-loop(s)\n";
  if (report.duplicates_merged)
    std::cerr << "warning: merged " << report.duplicates_merged
              << " duplicate edge(s)\n";

  auto parsed = graphlet::parse_dictionary(cfg.dict_spec);
  for (int id : parsed.implicitly_added)
    std::cerr << "note: graphlet " << id
              << " is mandatory and was added to the dictionary\n";
  for (const auto& adv : graphlet::warn_incomplete_family(parsed.dict))
    std::cerr << "warning: " << adv.message << "\n";

  int threads = cfg.threads;
  if (threads == 0) {
    if (const char* env = std::getenv("GLT_THREADS")) threads = std::atoi(env);
  }

  if (cfg.oracle) {
    graphlet::TransformOptions topt;
    topt.dict = graphlet::Dictionary::all();
    topt.threads = threads;
    topt.lenient = cfg.lenient;
    auto result = graphlet::transform(g, topt);
    auto check = graphlet::cross_check(g, result.raw, result.net);
    std::cout << check.summary() << "\n";
    return check.all_passed() ? 0 : kExitInconsistency;
  }

  graphlet::TransformOptions topt;
  topt.dict = parsed.dict;
  topt.threads = threads;
  topt.lenient = cfg.lenient;
  auto result = graphlet::transform(g, topt);

  if (cfg.emit == "net") {
    emit_to(cfg.output_path, result.net, cfg, label_base, "d");
  } else if (cfg.emit == "raw") {
    emit_to(cfg.output_path, result.raw, cfg, label_base, "dhat");
  } else {  // both
    if (cfg.output_path.empty()) {
      write_table(std::cout, result.raw, cfg, label_base, "dhat");
      std::cout << '\n';
      write_table(std::cout, result.net, cfg, label_base, "d");
    } else {
      emit_to(cfg.output_path + ".raw", result.raw, cfg, label_base, "dhat");
      emit_to(cfg.output_path + ".net", result.net, cfg, label_base, "d");
    }
  }

  if (cfg.timing) {
    std::cerr << "graph: n=" << g.num_vertices() << " m=" << g.num_edges()
              << " d_max=" << g.max_degree() << "\n";
    std::cerr << "threads: " << result.stats.threads_used << "\n";
    for (const auto& kt : result.stats.kernel_times)
      std::cerr << "kernel " << kt.name << ": " << kt.seconds * 1e3
                << " ms\n";
    if (result.stats.p2_touch_bound)
      std::cerr << "two-path row pass: " << result.stats.p2_row_touches
                << " accumulator touches (bound "
                << result.stats.p2_touch_bound << ")\n";
    std::cerr << "peak auxiliary scratch: " << result.stats.peak_aux_words
              << " words (largest single block "
              << result.stats.largest_aux_alloc_words << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "Exact per-vertex graphlet frequencies (raw and net) of a sparse "
      "undirected graph over the 16-graphlet dictionary"};
  app.add_option("input", cfg.input_path, "edge list or Matrix Market file")
      ->required();
  app.add_option("--format", cfg.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "mtx"}))
      ->capture_default_str();
  app.add_option("--dict", cfg.dict_spec,
                 "graphlet selection, e.g. 'all', '0-4', '0,1,4,15'")
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output_path,
                 "output file (default: stdout); with --emit both, writes "
                 "<output>.raw and <output>.net");
  app.add_option("--emit", cfg.emit, "which tables to write")
      ->check(CLI::IsMember({"raw", "net", "both"}))
      ->capture_default_str();
  app.add_option("--separator", cfg.separator, "column separator")
      ->check(CLI::IsMember({"tab", "comma"}))
      ->capture_default_str();
  app.add_flag("--header", cfg.header, "write a header row");
  app.add_flag("--symmetrize,!--no-symmetrize", cfg.symmetrize,
               "union-symmetrize one-sided input (default on); with "
               "--no-symmetrize, asymmetric input is an error");
  app.add_flag("--lenient", cfg.lenient,
               "rectify negative net intermediates to zero instead of "
               "failing (incomplete-family encodings)");
  app.add_option("--threads", cfg.threads,
                 "worker count (0 = GLT_THREADS env or hardware)")
      ->capture_default_str();
  app.add_flag("--timing", cfg.timing,
               "report per-kernel wall time and instrumentation to stderr");
  app.add_flag("--oracle", cfg.oracle,
               "verify the full-dictionary transform against the brute-force "
               "oracle (small graphs) and print the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return run(cfg);
  } catch (const graphlet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const graphlet::StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const graphlet::OverflowError& e) {
    std::cerr << "overflow error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const graphlet::InconsistencyError& e) {
    std::cerr << "inconsistency error: " << e.what() << "\n";
    return kExitInconsistency;
  } catch (const graphlet::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
