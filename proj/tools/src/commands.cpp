#include "pcmi_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pcmi/error.hpp"
#include "pcmi/io.hpp"

namespace pcmi::cli {
namespace {

std::vector<IndexId> all_indices() {
  std::vector<IndexId> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  return ids;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidConfig:
      return kExitUsage;
    case ErrorCode::kNonSquare:
    case ErrorCode::kOrderTooSmall:
    case ErrorCode::kNonPositiveEntry:
    case ErrorCode::kNonFiniteEntry:
    case ErrorCode::kReciprocityViolation:
    case ErrorCode::kOrderMismatch:
    case ErrorCode::kInvalidPermutation:
    case ErrorCode::kDiagonalEntry:
    case ErrorCode::kUnitEntry:
    case ErrorCode::kInconsistentBase:
    case ErrorCode::kParseError:
      return kExitInput;
    case ErrorCode::kZeroDenominator:
      return kExitInternal;
  }
  return kExitInternal;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  f << text;
  if (!f.flush()) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
}

void emit(const std::optional<std::filesystem::path>& path, const std::string& text,
          std::ostream& out) {
  if (path) {
    write_file(*path, text);
  } else {
    out << text;
  }
}

}  // namespace

std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
  if (steps < 2 || !(lo < hi)) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid needs lo < hi and at least 2 steps");
  }
  std::vector<double> grid(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    grid[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  grid.back() = hi;
  return grid;
}

std::vector<IndexId> parse_index_list(const std::string& text) {
  std::vector<IndexId> ids;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (name == "all" || name == "ALL") {
      for (IndexId id : all_indices()) ids.push_back(id);
      continue;
    }
    const auto id = parse_index_id(name);
    if (!id) throw Error(ErrorCode::kInvalidArgument, "unknown index '" + name + "'");
    ids.push_back(*id);
  }
  return ids;
}

std::string render_witness(IndexId id, Property p, const Witness& w) {
  std::ostringstream out;
  out.precision(17);
  out << "# index " << to_string(id) << '\n';
  out << "# property " << to_string(p) << '\n';
  if (!w.note.empty()) out << "# note " << w.note << '\n';
  for (const auto& [k, v] : w.parameters) out << "# " << k << ' ' << v << '\n';
  for (const auto& [k, v] : w.observed) out << "# observed " << k << ' ' << v << '\n';
  if (!w.permutation.empty()) {
    out << "# permutation";
    for (std::size_t i : w.permutation) out << ' ' << i;
    out << '\n';
  }
  out << render_matrix(w.matrix);
  return out.str();
}

int run_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Pcm m = read_matrix_file(opts.matrix);
    const auto ids = opts.indices.empty() ? all_indices() : opts.indices;
    for (IndexId id : ids) {
      const IndexDescriptor& d = lookup(id);
      out << d.name << ' ';
      try {
        out << format_value(evaluate(id, m), opts.digits);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kZeroDenominator) throw;
        out << "undefined";
      }
      out << " nu=" << format_value(d.nu, 0) << ' ' << to_string(d.orientation) << '\n';
    }
    return kExitOk;
  });
}

int run_axioms(const AxiomsOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    opts.config.validate();
    const auto ids = opts.indices.empty() ? all_indices() : opts.indices;
    const AxiomReport report = run_suite(ids, opts.config, opts.threads);
    const std::string doc = report_to_document(report);
    if (opts.out) write_file(*opts.out, doc);
    if (opts.format == OutputFormat::kDocument) {
      out << doc;
    } else {
      out << render_table(report);
    }
    return kExitOk;
  });
}

int run_curve(const CurveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Pcm m = read_matrix_file(opts.matrix);
    CurveSeries series = [&] {
      if (opts.mode == CurveMode::kIntensification) {
        return curve_intensification(opts.index, m, opts.grid);
      }
      if (!opts.entry) {
        throw Error(ErrorCode::kInvalidArgument, "delta curves need --p and --q");
      }
      return curve_perturbation(opts.index, m, opts.entry->first,
                                opts.entry->second, opts.grid);
    }();
    emit(opts.out, curve_to_csv(series), out);
    return kExitOk;
  });
}

int run_search(const SearchOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    opts.config.validate();
    const std::size_t ceiling = opts.config.trials_per_check;
    SuiteConfig cfg = opts.config;
    cfg.trials_per_check = std::min<std::size_t>(100, ceiling);
    while (true) {
      const PropertyVerdict v = check_property(opts.index, opts.property, cfg);
      if (v.status == VerdictStatus::kViolationFound && v.witness) {
        emit(opts.out, render_witness(opts.index, opts.property, *v.witness), out);
        return kExitOk;
      }
      if (cfg.trials_per_check >= ceiling) break;
      cfg.trials_per_check = std::min(cfg.trials_per_check * 10, ceiling);
    }
    emit(opts.out, "none found\n", out);
    return kExitOk;
  });
}

}  // namespace pcmi::cli
