#pragma once

// Subcommands of the pcmi tool. Each writes to the given streams and returns
// the process exit code.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcmi/axioms.hpp"
#include "pcmi/indices.hpp"

namespace pcmi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

enum class OutputFormat { kTable, kDocument };

struct ComputeOptions {
  std::filesystem::path matrix;
  std::vector<IndexId> indices;  // empty = all
  int digits = 9;
};

struct AxiomsOptions {
  std::vector<IndexId> indices;  // empty = all
  SuiteConfig config;
  std::optional<std::filesystem::path> out;
  OutputFormat format = OutputFormat::kTable;
  unsigned threads = 0;
};

enum class CurveMode { kIntensification, kPerturbation };

struct CurveOptions {
  IndexId index = IndexId::kK;
  std::filesystem::path matrix;
  CurveMode mode = CurveMode::kIntensification;
  std::vector<double> grid;
  std::optional<std::pair<std::size_t, std::size_t>> entry;  // zero-based
  std::optional<std::filesystem::path> out;
};

struct SearchOptions {
  IndexId index = IndexId::kK;
  Property property = Property::kP1;
  SuiteConfig config;  // trials_per_check is the escalation ceiling
  std::optional<std::filesystem::path> out;
};

int run_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int run_axioms(const AxiomsOptions& opts, std::ostream& out, std::ostream& err);
int run_curve(const CurveOptions& opts, std::ostream& out, std::ostream& err);
int run_search(const SearchOptions& opts, std::ostream& out, std::ostream& err);

/// Evenly spaced points from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, std::size_t steps);

/// Comma separated index names; "all" selects every index.
std::vector<IndexId> parse_index_list(const std::string& text);

/// Text of a witness as a matrix file: '#' lines for the metadata, then
/// the matrix rows.
std::string render_witness(IndexId id, Property p, const Witness& w);

}  // namespace pcmi::cli
