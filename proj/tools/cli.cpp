#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jsj/assembler.hpp"
#include "jsj/block.hpp"
#include "jsj/error.hpp"
#include "jsj/metadata.hpp"
#include "jsj/verification.hpp"

namespace jsj::cli {

namespace {

struct IoError : Error {
  using Error::Error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Io& io) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, Io& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
  if (!file) throw IoError("write to '" + path + "' failed");
}

bool looks_like_triangulation(const std::string& text) {
  std::istringstream s(text);
  std::string word;
  s >> word;
  return word == "tri";
}

Multigraph read_graph_or_dual(const std::string& text) {
  return looks_like_triangulation(text) ? dual_graph(read_triangulation(text)) : parse_graph(text);
}

std::string width_pair(const char* name, const WidthResult& r) {
  const char* rel = r.exactness == Exactness::exact ? "=" : r.exactness == Exactness::upper_bound ? "<=" : ">=";
  return std::string(name) + rel + std::to_string(r.value);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Build and check triangulated 3-manifolds with a prescribed JSJ graph"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress progress notes on stderr");

  // gen-graph
  auto* gen = app.add_subcommand("gen-graph", "Write a graph from a named family");
  std::string family, param, gen_out;
  gen->add_option("family", family, "binary-tree | grid | path | cycle | complete | star | from-file")->required();
  gen->add_option("param", param, "Height, side, node count, or input path")->required();
  gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

  // block
  auto* blk = app.add_subcommand("block", "Write the block with k boundary tori");
  int block_k = 0;
  std::string block_out, block_meta;
  blk->add_option("k", block_k, "Number of boundary tori")->required();
  blk->add_option("-o,--output", block_out, "Output path (default stdout)");
  blk->add_option("--meta", block_meta, "Write boundary torus data as JSON");

  // build
  auto* build = app.add_subcommand("build", "Assemble the manifold for a graph");
  std::string build_in, build_out, build_meta, width_mode_name = "auto";
  AssemblyConfig config;
  std::int64_t delta = 0;
  build->add_option("graph", build_in, "Graph file (default stdin)");
  build->add_option("--K", config.K, "Distance multiplier K (default 1)")->check(CLI::PositiveNumber);
  auto* delta_opt = build->add_option("--delta", delta, "Override delta")->check(CLI::PositiveNumber);
  build->add_option("--width-mode", width_mode_name, "auto | exact | heuristic")
      ->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  build->add_option("--exact-budget", config.exact_budget, "Largest graph solved exactly in auto mode");
  build->add_option("--seed", config.seed, "Selects among equally short gluing maps");
  build->add_option("-o,--output", build_out, "Triangulation path (default stdout)");
  build->add_option("--meta", build_meta, "Metadata path (default <output>.meta.json)");

  // width
  auto* width = app.add_subcommand("width", "Treewidth and pathwidth of a graph or of a triangulation's dual graph");
  std::string width_in;
  bool width_exact = false, width_bounds = false;
  int width_budget = kDefaultExactBudget;
  width->add_option("input", width_in, "Graph or triangulation (default stdin)");
  auto* exact_flag = width->add_flag("--exact", width_exact, "Always solve exactly (up to 64 nodes)");
  width->add_flag("--bounds", width_bounds, "Report lower and upper bounds")->excludes(exact_flag);
  width->add_option("--budget", width_budget, "Largest graph solved exactly by default");

  // verify
  auto* verify = app.add_subcommand("verify", "Check an assembled triangulation against its graph and metadata");
  std::string v_graph, v_tri, v_meta;
  bool v_json = false;
  verify->add_option("graph", v_graph, "Graph file")->required();
  verify->add_option("triangulation", v_tri, "Triangulation file")->required();
  verify->add_option("metadata", v_meta, "Metadata file")->required();
  verify->add_flag("--json", v_json, "Machine-readable report");

  // export
  auto* exp = app.add_subcommand("export", "Re-serialize a triangulation canonically");
  std::string e_in, e_out;
  bool e_dual = false;
  exp->add_option("triangulation", e_in, "Triangulation file (default stdin)");
  exp->add_flag("--dual", e_dual, "Write the dual graph as an edge list instead");
  exp->add_option("-o,--output", e_out, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    // --help and friends; CLI11 picks the right subcommand's text
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  auto note = [&](const std::string& s) {
    if (!quiet) err << s << '\n';
  };

  try {
    if (*gen) {
      Multigraph g;
      if (family == "from-file") {
        g = parse_graph(read_input(param, io));
      } else {
        int n = 0;
        try {
          std::size_t used = 0;
          n = std::stoi(param, &used);
          if (used != param.size()) throw std::invalid_argument(param);
        } catch (const std::exception&) {
          throw InputError("parameter '" + param + "' is not an integer");
        }
        if (n < 0) throw InputError("parameter must be non-negative");
        if (family == "binary-tree") g = complete_binary_tree(n);
        else if (family == "grid") g = grid_graph(n);
        else if (family == "path") g = path_graph(n);
        else if (family == "cycle") g = cycle_graph(n);
        else if (family == "complete") g = complete_graph(n);
        else if (family == "star") g = star_graph(n);
        else throw InputError("unknown family '" + family + "'");
      }
      write_output(gen_out, write_graph(g), io);
      return kExitOk;
    }

    if (*blk) {
      auto block = build_block(block_k);
      write_output(block_out, write_triangulation(block.triangulation), io);
      if (!block_meta.empty()) write_output(block_meta, to_json(block).dump(2) + "\n", io);
      note("block k=" + std::to_string(block_k) + ": " + std::to_string(block.triangulation.size()) + " tetrahedra");
      return kExitOk;
    }

    if (*build) {
      auto g = parse_graph(read_input(build_in, io));
      config.width_mode = *parse_width_mode(width_mode_name);
      if (*delta_opt) config.delta_override = delta;
      auto assembly = build_manifold(g, config);
      const auto& meta = assembly.metadata;
      write_output(build_out, write_triangulation(assembly.triangulation), io);
      std::string meta_path = build_meta;
      if (meta_path.empty() && !build_out.empty() && build_out != "-") meta_path = build_out + ".meta.json";
      if (!meta_path.empty()) write_output(meta_path, to_json(meta).dump(2) + "\n", io);
      note("tw=" + std::to_string(meta.treewidth) + " (" + std::string(to_string(meta.treewidth_exactness)) +
           ") pw=" + std::to_string(meta.pathwidth) + " (" + std::string(to_string(meta.pathwidth_exactness)) +
           ") delta=" + std::to_string(meta.delta) + " K=" + std::to_string(meta.K) + " tetrahedra=" +
           std::to_string(meta.total_tetrahedra));
      if (meta.K == 1 && !quiet)
        note("note: K=1 is a default; the multiplier that guarantees high distance is not known explicitly");
      return kExitOk;
    }

    if (*width) {
      auto g = read_graph_or_dual(read_input(width_in, io));
      if (width_bounds) {
        auto lo = treewidth_lower(g);
        auto tw = treewidth_upper(g);
        auto pw = pathwidth_upper(g);
        out << "tw in [" << lo.value << "," << tw.value << "] pw in [" << lo.value << "," << pw.value << "]\n";
        return kExitOk;
      }
      bool exact = width_exact || g.node_count() <= width_budget;
      if (exact) {
        int budget = std::max(width_budget, g.node_count());
        out << width_pair("tw", treewidth_exact(g, budget)) << ' ' << width_pair("pw", pathwidth_exact(g, budget))
            << '\n';
      } else {
        out << width_pair("tw", treewidth_upper(g)) << ' ' << width_pair("pw", pathwidth_upper(g)) << '\n';
      }
      return kExitOk;
    }

    if (*verify) {
      auto g = parse_graph(read_input(v_graph, io));
      auto t = read_triangulation(read_input(v_tri, io));
      AssemblyMetadata meta;
      try {
        meta = metadata_from_json(nlohmann::json::parse(read_input(v_meta, io)));
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("metadata is not JSON: ") + e.what());
      }
      VerificationReport report;
      try {
        report = verify_assembly(g, t, meta);
      } catch (const StructureError& e) {
        report.add("structure", false, e.what());
      }
      if (v_json) out << report.json().dump(2) << '\n';
      else out << report.text() << (report.passed() ? "all checks passed\n" : "verification FAILED\n");
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }

    if (*exp) {
      auto t = read_triangulation(read_input(e_in, io));
      write_output(e_out, e_dual ? write_graph(dual_graph(t)) : write_triangulation(t), io);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: line " << e.line() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace jsj::cli
