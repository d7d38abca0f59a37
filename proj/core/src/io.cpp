#include "pcmi/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcmi/error.hpp"
#include "pcmi/version.hpp"

namespace pcmi {
namespace {

using Json = nlohmann::json;

constexpr std::string_view kReportFormat = "pcmi-axiom-report";
constexpr int kReportFormatVersion = 1;
constexpr std::uint64_t kMaxExactInteger = std::uint64_t{1} << 53;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct RowText {
  std::size_t line;
  std::vector<Token> tokens;
};

[[noreturn]] void parse_error(const std::string& what, std::size_t line,
                              std::size_t column) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what,
              std::nullopt, TextLocation{line, column});
}

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == ',' || c == '\r';
}

std::vector<RowText> tokenize(std::string_view text) {
  std::vector<RowText> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    RowText row{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_separator(line[i])) ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_separator(line[i])) ++i;
      if (i > start) row.tokens.push_back({line.substr(start, i - start), start + 1});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t parse_positive_integer(std::string_view s, const Token& tok,
                                     std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    parse_error("'" + std::string(tok.text) + "' is not a valid rational",
                line, tok.column);
  }
  if (v == 0) {
    parse_error("rational '" + std::string(tok.text) +
                    "' needs a positive numerator and denominator",
                line, tok.column);
  }
  if (v > kMaxExactInteger) {
    parse_error("rational '" + std::string(tok.text) + "' has a component above 2^53",
                line, tok.column);
  }
  return v;
}

double parse_entry(const Token& tok, std::size_t line) {
  const std::string_view s = tok.text;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto p = parse_positive_integer(s.substr(0, slash), tok, line);
    const auto q = parse_positive_integer(s.substr(slash + 1), tok, line);
    return static_cast<double>(p) / static_cast<double>(q);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    parse_error("'" + std::string(s) + "' is not a number", line, tok.column);
  }
  return v;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string_view established_name(Established e) {
  switch (e) {
    case Established::kSatisfied: return "satisfied";
    case Established::kViolated: return "violated";
    case Established::kUnknown: return "unknown";
  }
  return "unknown";
}

// ---- report document ------------------------------------------------------

Json matrix_json(const Pcm& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (double v : m.row(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json witness_json(const Witness& w) {
  Json j;
  j["matrix"] = matrix_json(w.matrix);
  j["note"] = w.note;
  j["observed"] = Json::object();
  for (const auto& [k, v] : w.observed) j["observed"][k] = v;
  j["parameters"] = Json::object();
  for (const auto& [k, v] : w.parameters) j["parameters"][k] = v;
  j["permutation"] = w.permutation;
  return j;
}

Json config_json(const SuiteConfig& c) {
  Json j;
  j["seed"] = c.seed;
  j["trials_per_check"] = c.trials_per_check;
  j["orders"] = c.orders;
  j["b_grid"] = c.b_grid;
  j["delta_grid"] = c.delta_grid;
  j["nu_tolerance"] = c.nu_tolerance;
  j["equality_tolerance"] = c.equality_tolerance;
  j["monotonicity_slack"] = c.monotonicity_slack;
  return j;
}

[[noreturn]] void document_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, "report document: " + what);
}

Pcm matrix_from_json(const Json& j) {
  return Pcm::from_rows(j.get<std::vector<std::vector<double>>>());
}

Witness witness_from_json(const Json& j) {
  Witness w{matrix_from_json(j.at("matrix")), {}, {}, {}, {}};
  w.permutation = j.at("permutation").get<std::vector<std::size_t>>();
  w.parameters = j.at("parameters").get<std::map<std::string, double>>();
  w.observed = j.at("observed").get<std::map<std::string, double>>();
  w.note = j.at("note").get<std::string>();
  return w;
}

SuiteConfig config_from_json(const Json& j) {
  SuiteConfig c;
  c.seed = j.at("seed").get<std::uint64_t>();
  c.trials_per_check = j.at("trials_per_check").get<std::size_t>();
  c.orders = j.at("orders").get<std::vector<std::size_t>>();
  c.b_grid = j.at("b_grid").get<std::vector<double>>();
  c.delta_grid = j.at("delta_grid").get<std::vector<double>>();
  c.nu_tolerance = j.at("nu_tolerance").get<double>();
  c.equality_tolerance = j.at("equality_tolerance").get<double>();
  c.monotonicity_slack = j.at("monotonicity_slack").get<double>();
  return c;
}

// ---- table ----------------------------------------------------------------

std::string_view verdict_symbol(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kNoViolationFound: return "✓";
    case VerdictStatus::kViolationFound: return "✗";
    case VerdictStatus::kHeuristic: return "~";
    case VerdictStatus::kNotApplicable: return "-";
  }
  return "-";
}

std::string_view established_symbol(Established e) {
  switch (e) {
    case Established::kSatisfied: return "✓";
    case Established::kViolated: return "✗";
    case Established::kUnknown: return "?";
  }
  return "?";
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (s.size() < width) out.append(width - s.size(), ' ');
  return out;
}

std::string table_header(std::size_t name_width) {
  std::string line = pad("index", name_width);
  for (Property p : kAllProperties) line += " " + pad(to_string(p), 3);
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line + "\n";
}

std::string describe(const std::map<std::string, double>& values) {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += ", ";
    out += k + "=" + shortest(v);
  }
  return out;
}

}  // namespace

Pcm parse_matrix(std::string_view text) {
  const std::vector<RowText> rows = tokenize(text);
  if (rows.empty()) parse_error("no matrix rows found", 1, 1);
  const std::size_t n = rows.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const RowText& row : rows) {
    if (row.tokens.size() != n) {
      throw Error(ErrorCode::kNonSquare,
                  "line " + std::to_string(row.line) + ": row has " +
                      std::to_string(row.tokens.size()) +
                      " entries but the matrix has " + std::to_string(n) +
                      " rows",
                  std::nullopt, TextLocation{row.line, 1});
    }
    for (const Token& tok : row.tokens) entries.push_back(parse_entry(tok, row.line));
  }
  try {
    return Pcm::from_entries(n, std::move(entries));
  } catch (const Error& e) {
    if (!e.entry()) throw;
    const auto [i, j] = *e.entry();
    const RowText& row = rows[i];
    const std::size_t column = row.tokens[j].column;
    throw Error(e.code(),
                "line " + std::to_string(row.line) + ", column " +
                    std::to_string(column) + ": " + e.message(),
                e.entry(), TextLocation{row.line, column});
  }
}

Pcm read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot read " + path.string(),
                std::nullopt, TextLocation{0, 0});
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string render_matrix(const Pcm& m) {
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      if (j > 0) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string format_value(double v, int digits) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string report_to_document(const AxiomReport& report) {
  Json doc;
  doc["format"] = kReportFormat;
  doc["format_version"] = kReportFormatVersion;
  doc["tool_version"] = kVersion;
  doc["config"] = config_json(report.config);
  Json results = Json::array();
  for (const auto& row : report.rows) {
    const IndexDescriptor& d = lookup(row.id);
    Json r;
    r["index"] = d.name;
    r["nu"] = d.nu;
    r["orientation"] = to_string(d.orientation);
    for (Property p : kAllProperties) {
      const auto k = static_cast<std::size_t>(p);
      const std::string key(to_string(p));
      r["established"][key] = established_name(d.established[k]);
      const PropertyVerdict& v = row.by_property[k];
      Json cell;
      cell["status"] = to_string(v.status);
      cell["trials"] = v.trials;
      cell["witness"] = v.witness ? witness_json(*v.witness) : Json(nullptr);
      r["verdicts"][key] = std::move(cell);
    }
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  return doc.dump(2) + "\n";
}

AxiomReport report_from_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    document_error(e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kReportFormat ||
        doc.at("format_version").get<int>() != kReportFormatVersion) {
      document_error("unsupported format");
    }
    AxiomReport report{config_from_json(doc.at("config")), {}};
    for (const Json& r : doc.at("results")) {
      const auto id = parse_index_id(r.at("index").get<std::string>());
      if (!id) document_error("unknown index " + r.at("index").dump());
      IndexVerdicts row{*id, {}};
      for (Property p : kAllProperties) {
        const Json& cell = r.at("verdicts").at(std::string(to_string(p)));
        auto& v = row.by_property[static_cast<std::size_t>(p)];
        const auto status = parse_verdict_status(cell.at("status").get<std::string>());
        if (!status) document_error("unknown status " + cell.at("status").dump());
        v.status = *status;
        v.trials = cell.at("trials").get<std::size_t>();
        if (!cell.at("witness").is_null()) {
          v.witness = witness_from_json(cell.at("witness"));
        }
      }
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const Json::exception& e) {
    document_error(e.what());
  }
}

std::string render_table(const AxiomReport& report) {
  std::size_t width = 7;
  for (const auto& row : report.rows) {
    width = std::max(width, to_string(row.id).size() + 2);
  }
  std::ostringstream out;
  const SuiteConfig& c = report.config;
  out << "Empirical verdicts (seed " << c.seed << ", " << c.trials_per_check
      << " trials per order, orders";
  for (std::size_t n : c.orders) out << ' ' << n;
  out << ")\n" << table_header(width);
  for (const auto& row : report.rows) {
    std::string line = pad(to_string(row.id), width);
    for (const auto& v : row.by_property) {
      line += " " + std::string(verdict_symbol(v.status)) + "  ";
    }
    while (line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << "✓ no violation found  ✗ violation found  ~ heuristic pass  "
         "- not applicable\n\n";

  out << "Established analytical results\n" << table_header(width);
  for (const auto& row : report.rows) {
    std::string line = pad(to_string(row.id), width);
    for (Established e : lookup(row.id).established) {
      line += " " + std::string(established_symbol(e)) + "  ";
    }
    while (line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << "✓ satisfied  ✗ violated  ? unknown\n";

  bool header = false;
  for (const auto& row : report.rows) {
    for (Property p : kAllProperties) {
      const auto& v = row.by_property[static_cast<std::size_t>(p)];
      if (!v.witness) continue;
      if (!header) {
        out << "\nWitnesses\n";
        header = true;
      }
      out << to_string(row.id) << ' ' << to_string(p) << ": " << v.witness->note;
      const std::string params = describe(v.witness->parameters);
      const std::string seen = describe(v.witness->observed);
      if (!params.empty()) out << " [" << params << "]";
      if (!seen.empty()) out << " {" << seen << "}";
      out << '\n';
    }
  }
  return out.str();
}

std::string curve_to_csv(const CurveSeries& series) {
  std::string out = "param,value\n";
  for (const auto& s : series.samples) {
    out += shortest(s.parameter) + "," + shortest(s.value) + "\n";
  }
  return out;
}

}  // namespace pcmi
