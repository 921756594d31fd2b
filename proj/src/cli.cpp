#include "qtree/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtree/generators.hpp"
#include "qtree/harness.hpp"

namespace qtree {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphOptions {
  std::string input;
  std::string generator;
  std::optional<std::uint64_t> seed;
};

void add_graph_options(CLI::App* cmd, GraphOptions& o) {
  auto* in = cmd->add_option("--input,-i", o.input, "edge-list file");
  auto* gen = cmd->add_option("--generate,-g", o.generator, "generator spec, e.g. cycle:8 or er:12,0.3");
  in->excludes(gen);
  cmd->add_option("--seed", o.seed, "seed appended to a random generator spec");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string spec_with_seed(std::string spec, const std::optional<std::uint64_t>& seed) {
  if (seed) spec += (spec.find(':') == std::string::npos ? ":" : ",") + std::to_string(*seed);
  return spec;
}

std::pair<Graph, std::string> load(const GraphOptions& o) {
  try {
    if (!o.input.empty()) return {load_graph(read_file(o.input)), o.input};
    if (!o.generator.empty()) {
      auto spec = spec_with_seed(o.generator, o.seed);
      return {generate(spec), spec};
    }
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("give --input or --generate");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

HarnessCaps caps_from(const std::string& spec) {
  HarnessCaps caps = HarnessCaps::from_env();
  try {
    caps.apply(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return caps;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qtree: chordality, separators, hyperbolicity and bottleneck analysis of finite graphs"};
  app.require_subcommand(1, 1);
  std::string format = "text", output, caps_spec;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format,-f", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("-o,--output", output, "write to a file instead of stdout");
    cmd->add_option("--caps", caps_spec, "enumeration caps, e.g. cycles=1000,geodesics=50");
  };

  GraphOptions gopt;
  int resolution = 4;
  auto* analyze_cmd = app.add_subcommand("analyze", "print the full profile of a graph");
  add_graph_options(analyze_cmd, gopt);
  add_common(analyze_cmd);
  analyze_cmd->add_option("--resolution,-t", resolution, "grid resolution for delta_hat")
      ->check(CLI::IsMember({1, 2, 4}));

  std::string check_id;
  auto* check_cmd = app.add_subcommand("check", "run one theorem check");
  check_cmd->add_option("check_id", check_id, "check id, e.g. thm_3_16")->required();
  add_graph_options(check_cmd, gopt);
  add_common(check_cmd);

  std::string gen_spec;
  auto* gen_cmd = app.add_subcommand("generate", "write a generated graph as an edge list");
  gen_cmd->add_option("spec", gen_spec, "generator spec")->required();
  gen_cmd->add_option("--seed", gopt.seed, "seed appended to a random generator spec");
  gen_cmd->add_option("-o,--output", output, "output file");

  std::string config_path;
  auto* corpus_cmd = app.add_subcommand("corpus", "run a corpus config file");
  corpus_cmd->add_option("config", config_path, "JSON corpus config")->required();
  add_common(corpus_cmd);

  app.add_subcommand("list", "list the check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) {
      auto [g, id] = load(gopt);
      GraphContext ctx(std::move(g), id, caps_from(caps_spec));
      json profile = analyze(ctx);
      if (resolution != 4) profile["hyperbolicity"] = to_json(delta_hat(ctx.graph(), resolution, &ctx.catalog()));
      emit(format == "json" ? profile.dump(2) + "\n" : analyze_text(profile), output, out);
      return 0;
    }
    if (*check_cmd) {
      if (!find_check(check_id)) throw UsageError("unknown check '" + check_id + "'");
      auto [g, id] = load(gopt);
      auto r = run_check(g, check_id, id, caps_from(caps_spec));
      emit(format == "json" ? to_json(r).dump(2) + "\n" : to_text(r), output, out);
      return r.status == Status::fail ? 1 : 0;
    }
    if (*gen_cmd) {
      Graph g = [&] {
        try {
          return generate(spec_with_seed(gen_spec, gopt.seed));
        } catch (const GraphError& e) {
          throw UsageError(e.what());
        }
      }();
      emit(to_edge_list(g), output, out);
      return 0;
    }
    if (*corpus_cmd) {
      CorpusConfig cfg;
      try {
        cfg = CorpusConfig::from_json(json::parse(read_file(config_path)));
        if (!caps_spec.empty()) cfg.caps.apply(caps_spec);
      } catch (const json::exception& e) {
        throw UsageError(std::string("bad corpus config: ") + e.what());
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad corpus config: ") + e.what());
      }
      if (output.empty()) output = cfg.output;
      auto res = run_corpus(cfg);
      emit(format == "json" ? to_json(res).dump(2) + "\n" : to_text(res), output, out);
      return res.total.fail ? 1 : 0;
    }
    for (const auto& c : check_registry()) out << c.id << "  " << c.statement << "\n";
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qtree
