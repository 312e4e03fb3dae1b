#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "ratcat/polynomial.hpp"

namespace ratcat {

enum class OutputFormat { text, json, latex };

inline OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown format '" + name + "'");
}

/// Settings shared by all commands. Flags override environment variables,
/// which override these defaults.
struct RunConfig {
  std::int64_t work_bound = kDefaultWorkBound;
  OutputFormat format = OutputFormat::text;
  std::optional<std::filesystem::path> cache_dir;
  int parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  void validate() const {
    if (work_bound < 1) throw std::invalid_argument("work bound must be at least 1");
    if (parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
  }
};

}  // namespace ratcat
