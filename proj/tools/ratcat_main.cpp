// ratcat: exact statistics and generating functions for rational Dyck paths
// and rank words, with a verification harness for the underlying identities.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratcat/ratcat.hpp"

namespace {

using namespace ratcat;

std::string stats_line(const StatTriple& stats) {
  return "area=" + std::to_string(stats.area) + " dinv=" + std::to_string(stats.dinv) +
         " skips=" + std::to_string(stats.skips);
}

std::string cells_line(const std::vector<Cell>& cells) {
  if (cells.empty()) return "(none)";
  std::string out;
  for (const Cell& cell : cells) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(cell.col) + "," + std::to_string(cell.row) + ")";
  }
  return out;
}

void add_common_options(CLI::App* sub, RunConfig& config, std::string& format,
                        std::string& cache_dir, bool with_latex = false) {
  sub->add_option("--work-bound", config.work_bound,
                  "Maximum number of paths an enumeration job may visit")
      ->envname("RATCAT_WORK_BOUND");
  sub->add_option("--parallelism", config.parallelism, "Worker thread count")
      ->envname("RATCAT_PARALLELISM");
  sub->add_option("--cache-dir", cache_dir, "Directory for memoized polynomials")
      ->envname("RATCAT_CACHE_DIR");
  sub->add_option("--format", format,
                  with_latex ? "Output format: text, json or latex"
                             : "Output format: text or json");
}

RunConfig finish_config(RunConfig config, const std::string& format,
                        const std::string& cache_dir) {
  config.format = parse_format(format);
  if (!cache_dir.empty()) config.cache_dir = std::filesystem::path(cache_dir);
  config.validate();
  return config;
}

void require_text_or_json(const RunConfig& config) {
  if (config.format == OutputFormat::latex) {
    throw std::invalid_argument("latex output is only available for genfun");
  }
}

int run_enumerate(int m, int n, std::optional<std::int64_t> limit, const RunConfig& config) {
  const CoprimePair pair(m, n);
  std::int64_t total = 0;
  try {
    total = rational_catalan_number(pair);
  } catch (const std::overflow_error&) {
    throw WorkBoundError("path count exceeds 2^63");
  }
  const std::int64_t planned = limit ? std::min(*limit, total) : total;
  if (planned > config.work_bound) {
    throw WorkBoundError("planned output of " + std::to_string(planned) +
                         " paths exceeds the work bound " +
                         std::to_string(config.work_bound));
  }

  bool truncated = false;
  std::int64_t emitted = 0;
  Json rows = Json::array();
  PathEnumerator paths(pair);
  while (auto path = paths.next()) {
    if (limit && emitted == *limit) {
      truncated = true;
      break;
    }
    if (config.format == OutputFormat::json) {
      rows.push_back(Json{{"path", path_to_json(*path)}, {"stats", stats_to_json(stat_triple(*path))}});
    } else {
      std::cout << format_path(*path) << " " << stats_line(stat_triple(*path)) << "\n";
    }
    ++emitted;
  }
  if (config.format == OutputFormat::json) {
    Json doc{{"m", m}, {"n", n}, {"count", total}, {"truncated", truncated}, {"paths", rows}};
    std::cout << doc.dump(2) << "\n";
  } else if (truncated) {
    std::cerr << "output truncated after " << emitted << " of " << total << " paths\n";
  }
  return 0;
}

int run_stats(int m, int n, const std::string& shape_text, bool show_cells,
              const RunConfig& config) {
  const CoprimePair pair(m, n);
  const DyckPath path = parse_shape(pair, shape_text);
  const CellPartition parts = cell_partition(path);
  const StatTriple stats{static_cast<std::int64_t>(parts.area_cells.size()),
                         static_cast<std::int64_t>(parts.dinv_cells.size()),
                         static_cast<std::int64_t>(parts.skips_cells.size())};
  if (config.format == OutputFormat::json) {
    Json doc{{"path", path_to_json(path)},
             {"stats", stats_to_json(stats)},
             {"cells",
              Json{{"area", cells_to_json(parts.area_cells)},
                   {"dinv", cells_to_json(parts.dinv_cells)},
                   {"skips", cells_to_json(parts.skips_cells)}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << stats_line(stats) << "\n";
    if (show_cells) {
      std::cout << "area cells: " << cells_line(parts.area_cells) << "\n";
      std::cout << "dinv cells: " << cells_line(parts.dinv_cells) << "\n";
      std::cout << "skips cells: " << cells_line(parts.skips_cells) << "\n";
    }
  }
  return 0;
}

BqtPolynomial load_or_compute_genfun(const CoprimePair& pair, const RunConfig& config) {
  checked_path_count(pair, config.work_bound);
  if (!config.cache_dir) {
    return genfun_W(pair, config.work_bound, config.parallelism);
  }
  const std::filesystem::path file =
      *config.cache_dir /
      ("W_" + std::to_string(pair.m()) + "_" + std::to_string(pair.n()) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read cache file " + file.string());
    Json doc = Json::parse(in);
    if (doc.at("m").get<int>() != pair.m() || doc.at("n").get<int>() != pair.n()) {
      throw std::runtime_error("cache file " + file.string() + " is for another grid");
    }
    return poly_from_json(doc.at("terms"));
  }
  const BqtPolynomial poly = genfun_W(pair, config.work_bound, config.parallelism);
  std::filesystem::create_directories(*config.cache_dir);
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write cache file " + file.string());
  out << genfun_document(pair, poly);
  return poly;
}

int run_genfun(int m, int n, const std::string& var_spec, const RunConfig& config) {
  const CoprimePair pair(m, n);
  BqtPolynomial poly = load_or_compute_genfun(pair, config);
  std::string label = "W";
  if (!var_spec.empty()) {
    if (var_spec.size() != 3 || var_spec.substr(1) != "=1" ||
        (var_spec[0] != 'b' && var_spec[0] != 'q' && var_spec[0] != 't')) {
      throw std::invalid_argument("--var must be one of b=1, q=1, t=1");
    }
    const Var var = var_spec[0] == 'b' ? Var::b : var_spec[0] == 'q' ? Var::q : Var::t;
    poly = substitute(poly, var, 1);
    label = var == Var::b ? "C" : std::string("W(") + var_spec[0] + "=1)";
  }
  switch (config.format) {
    case OutputFormat::text:
      std::cout << to_text(poly) << "\n";
      break;
    case OutputFormat::latex:
      std::cout << to_latex(poly) << "\n";
      break;
    case OutputFormat::json: {
      Json doc{{"m", m}, {"n", n}, {"polynomial", label}, {"terms", poly_to_json(poly)}};
      std::cout << doc.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int run_verify(int m, int n, const std::string& checks_spec, const RunConfig& config) {
  require_text_or_json(config);
  const CoprimePair pair(m, n);
  std::vector<std::string> names;
  if (checks_spec == "all") {
    names = check_names(pair);
  } else {
    for (std::string_view token : detail::split(checks_spec, ',')) {
      if (!token.empty()) names.emplace_back(token);
    }
    if (names.empty()) throw std::invalid_argument("no checks requested");
  }

  bool all_passed = true;
  Json rows = Json::array();
  for (const std::string& name : names) {
    const CheckOutcome outcome = run_check(name, pair, config.work_bound, config.parallelism);
    all_passed = all_passed && outcome.passed;
    if (config.format == OutputFormat::json) {
      Json row{{"name", outcome.name},
               {"passed", outcome.passed},
               {"paths", outcome.items}};
      if (!outcome.note.empty()) row["note"] = outcome.note;
      if (outcome.counterexample) row["counterexample"] = *outcome.counterexample;
      rows.push_back(row);
      continue;
    }
    std::cout << outcome.name << ": " << (outcome.passed ? "PASS" : "FAIL");
    if (outcome.passed) {
      std::cout << " (all " << outcome.items << " paths";
      if (!outcome.note.empty()) std::cout << "; " << outcome.note;
      std::cout << ")";
    } else {
      if (outcome.counterexample) std::cout << " (counterexample " << *outcome.counterexample << ")";
      if (!outcome.note.empty()) std::cout << " (" << outcome.note << ")";
    }
    std::cout << "\n";
  }
  if (config.format == OutputFormat::json) {
    Json doc{{"m", m}, {"n", n}, {"passed", all_passed}, {"checks", rows}};
    std::cout << doc.dump(2) << "\n";
  }
  return all_passed ? 0 : 1;
}

int run_triple(std::int64_t a, std::int64_t d, std::int64_t s, const RunConfig& config) {
  require_text_or_json(config);
  const DyckTriple triple(a, d, s);
  const RankWord word = construct_word(triple);
  const DyckPath path = to_path(word);
  if (config.format == OutputFormat::json) {
    Json doc{{"triple", triple_to_json(triple)},
             {"word", word_to_json(word)},
             {"path", path_to_json(path)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "word: " << format_word(word) << "\n";
    std::cout << "path: " << format_path(path) << "\n";
    std::cout << "stats: " << stats_line(triple.stats()) << "\n";
  }
  return 0;
}

int run_swap(int m, int n, const std::string& shape_text, const RunConfig& config) {
  require_text_or_json(config);
  const CoprimePair pair(m, n);
  const DyckPath path = parse_shape(pair, shape_text);
  const DyckPath image = swap_bijection(path);
  if (config.format == OutputFormat::json) {
    Json doc{{"input", Json{{"path", path_to_json(path)},
                            {"stats", stats_to_json(stat_triple(path))}}},
             {"image", Json{{"path", path_to_json(image)},
                            {"stats", stats_to_json(stat_triple(image))}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "input: " << format_path(path) << " " << stats_line(stat_triple(path)) << "\n";
    std::cout << "image: " << format_path(image) << " " << stats_line(stat_triple(image)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Dyck path and rank word toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  int m = 0, n = 0;
  std::int64_t limit_value = 0;
  std::int64_t a = 0, d = 0, s = 0;
  std::string shape_text, checks_spec = "all", var_spec;
  bool show_cells = false;

  struct SubSettings {
    RunConfig config;
    std::string format = "text";
    std::string cache_dir;
  };
  // one settings block per subcommand, so option defaults stay independent
  std::vector<std::unique_ptr<SubSettings>> settings;
  auto common = [&](CLI::App* sub, bool with_latex = false) -> SubSettings& {
    settings.push_back(std::make_unique<SubSettings>());
    SubSettings& block = *settings.back();
    add_common_options(sub, block.config, block.format, block.cache_dir, with_latex);
    return block;
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "List every Dyck path with its statistics");
  enumerate->add_option("m", m, "Columns")->required();
  enumerate->add_option("n", n, "Rows")->required();
  CLI::Option* limit_opt = enumerate->add_option("--limit", limit_value, "Print at most this many paths");
  SubSettings& enumerate_settings = common(enumerate);
  enumerate->callback([&] {
    std::optional<std::int64_t> limit;
    if (limit_opt->count() > 0) {
      if (limit_value < 0) throw std::invalid_argument("--limit must be non-negative");
      limit = limit_value;
    }
    const RunConfig config = finish_config(enumerate_settings.config, enumerate_settings.format,
                                           enumerate_settings.cache_dir);
    require_text_or_json(config);
    exit_code = run_enumerate(m, n, limit, config);
  });

  CLI::App* stats = app.add_subcommand("stats", "Statistics and cell partition of one path");
  stats->add_option("m", m, "Columns")->required();
  stats->add_option("n", n, "Rows")->required();
  stats->add_option("--path", shape_text, "Shape as l_n,...,l_1 (top row first)")->required();
  stats->add_flag("--cells", show_cells, "Also list the area/dinv/skips cells");
  SubSettings& stats_settings = common(stats);
  stats->callback([&] {
    const RunConfig config =
        finish_config(stats_settings.config, stats_settings.format, stats_settings.cache_dir);
    require_text_or_json(config);
    exit_code = run_stats(m, n, shape_text, show_cells, config);
  });

  CLI::App* genfun = app.add_subcommand("genfun", "Generating function W(b,q,t), or C(q,t) at b=1");
  genfun->add_option("m", m, "Columns")->required();
  genfun->add_option("n", n, "Rows")->required();
  genfun->add_option("--var", var_spec, "Substitution, e.g. b=1");
  SubSettings& genfun_settings = common(genfun, /*with_latex=*/true);
  genfun->callback([&] {
    const RunConfig config =
        finish_config(genfun_settings.config, genfun_settings.format, genfun_settings.cache_dir);
    exit_code = run_genfun(m, n, var_spec, config);
  });

  CLI::App* verify = app.add_subcommand("verify", "Run the identity checks over every path");
  verify->add_option("m", m, "Columns")->required();
  verify->add_option("n", n, "Rows")->required();
  verify->add_option("--checks", checks_spec, "Comma-separated check names, or 'all'");
  SubSettings& verify_settings = common(verify);
  verify->callback([&] {
    const RunConfig config =
        finish_config(verify_settings.config, verify_settings.format, verify_settings.cache_dir);
    exit_code = run_verify(m, n, checks_spec, config);
  });

  CLI::App* triple = app.add_subcommand("triple", "Rank word and path built from a statistics triple");
  triple->add_option("area", a, "Area")->required();
  triple->add_option("dinv", d, "Dinv")->required();
  triple->add_option("skips", s, "Skips")->required();
  SubSettings& triple_settings = common(triple);
  triple->callback([&] {
    const RunConfig config =
        finish_config(triple_settings.config, triple_settings.format, triple_settings.cache_dir);
    exit_code = run_triple(a, d, s, config);
  });

  CLI::App* swap = app.add_subcommand("swap", "Image of a three-column path under the area/dinv involution");
  swap->add_option("m", m, "Columns (must be 3)")->required();
  swap->add_option("n", n, "Rows")->required();
  swap->add_option("--path", shape_text, "Shape as l_n,...,l_1 (top row first)")->required();
  SubSettings& swap_settings = common(swap);
  swap->callback([&] {
    const RunConfig config =
        finish_config(swap_settings.config, swap_settings.format, swap_settings.cache_dir);
    exit_code = run_swap(m, n, shape_text, config);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const WorkBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
