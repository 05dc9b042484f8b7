#pragma once

#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "centra/analysis.hpp"
#include "centra/group.hpp"
#include "centra/permutation.hpp"
#include "centra/verify.hpp"

namespace centra {

/// One line of a corpus file:
///   {"name": "S3", "degree": 3, "generators": [[1,0,2],[1,2,0]]}
/// Points are 0-based. An empty generator list denotes the trivial group.
struct CorpusRecord {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<Point>> generators;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

class CorpusParseError : public std::runtime_error {
 public:
  CorpusParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n") == std::string_view::npos; }

inline CorpusRecord parse_corpus_line(const std::string& text, std::size_t line_no) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CorpusParseError(line_no, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw CorpusParseError(line_no, "expected an object");
  if (j.size() != 3 || !j.contains("name") || !j.contains("degree") || !j.contains("generators"))
    throw CorpusParseError(line_no, "keys must be exactly name, degree, generators");
  if (!j["name"].is_string()) throw CorpusParseError(line_no, "name must be a string");
  if (!j["degree"].is_number_integer() || j["degree"].get<std::int64_t>() < 1)
    throw CorpusParseError(line_no, "degree must be an integer >= 1");
  if (!j["generators"].is_array()) throw CorpusParseError(line_no, "generators must be an array");

  CorpusRecord r;
  r.name = j["name"].get<std::string>();
  if (r.name.empty()) throw CorpusParseError(line_no, "name must be non-empty");
  r.degree = j["degree"].get<std::size_t>();
  std::size_t index = 0;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) throw CorpusParseError(line_no, "generator " + std::to_string(index) + " is not an array");
    if (g.size() != r.degree)
      throw CorpusParseError(line_no, "generator " + std::to_string(index) + " has length " +
                                          std::to_string(g.size()) + ", degree is " + std::to_string(r.degree));
    std::vector<Point> images;
    images.reserve(g.size());
    for (const auto& p : g) {
      if (!p.is_number_integer() || p.get<std::int64_t>() < 0 ||
          p.get<std::int64_t>() >= static_cast<std::int64_t>(r.degree))
        throw CorpusParseError(line_no, "generator " + std::to_string(index) + " has an image out of range");
      images.push_back(p.get<Point>());
    }
    if (!is_bijection(images))
      throw CorpusParseError(line_no, "generator " + std::to_string(index) + " is not a bijection");
    r.generators.push_back(std::move(images));
    ++index;
  }
  return r;
}

}  // namespace detail

/// Reads one record per non-blank line, in file order.
inline std::vector<CorpusRecord> parse_corpus(std::istream& in) {
  std::vector<CorpusRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::blank(line)) continue;
    out.push_back(detail::parse_corpus_line(line, line_no));
  }
  return out;
}

inline std::vector<CorpusRecord> parse_corpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in);
}

inline void write_corpus_record(std::ostream& out, const CorpusRecord& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["degree"] = r.degree;
  j["generators"] = r.generators;
  out << j.dump() << '\n';
}

inline FiniteGroup group_from_record(const CorpusRecord& r, GroupLimits limits = {}) {
  std::vector<Permutation> gens;
  for (const auto& g : r.generators) gens.emplace_back(g);
  if (gens.empty()) gens.push_back(Permutation::identity(r.degree));
  return enumerate_group(r.name, std::move(gens), limits);
}

// ---------------------------------------------------------------------------
// Report serialization
//
// JSON lines: one object per record, keys in the column order below, absent
// optionals as null. CSV: a header row and one row per record; absent
// optionals are empty cells, booleans are true/false. Floating values use
// fixed 6-decimal formatting in both.

inline const std::vector<std::string>& invariant_columns() {
  static const std::vector<std::string> cols = {
      "name",          "order",           "n_centralizers",  "center_order",     "involution_count",
      "soluble",       "nilpotent",       "simple",          "semisimple",       "derived_length",
      "a_measure",     "n_measure",       "center_index",    "nilpotency_class", "a_measure_exact",
      "n_measure_exact", "pyber_ratio"};
  return cols;
}

inline const std::vector<std::string>& verification_columns() {
  static const std::vector<std::string> cols = {"claim",  "group",  "hypothesis_held",
                                                "conclusion_held", "status", "detail"};
  return cols;
}

namespace detail {

// Each cell is already-rendered JSON (string, number, bool or null).
inline std::vector<std::string> invariant_cells(const InvariantReport& r) {
  using nlohmann::json;
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("null"); };
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  std::string ratio = "null";
  if (r.pyber_ratio) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", *r.pyber_ratio);
    ratio = buf;
  }
  return {json(r.name).dump(),
          std::to_string(r.order),
          std::to_string(r.n_centralizers),
          std::to_string(r.center_order),
          std::to_string(r.involution_count),
          b(r.soluble),
          b(r.nilpotent),
          b(r.simple),
          b(r.semisimple),
          opt(r.derived_length),
          opt(r.a_measure),
          opt(r.n_measure),
          std::to_string(r.center_index),
          opt(r.nilpotency_class),
          b(r.a_measure_exact),
          b(r.n_measure_exact),
          ratio};
}

inline std::vector<std::string> verification_cells(const VerificationResult& v) {
  using nlohmann::json;
  return {json(std::string(claim_name(v.claim))).dump(),
          json(v.group).dump(),
          v.hypothesis_held ? "true" : "false",
          v.conclusion_held ? "true" : "false",
          json(std::string(status_name(v.status))).dump(),
          json(v.detail).dump()};
}

inline void write_json_object(std::ostream& out, const std::vector<std::string>& keys,
                              const std::vector<std::string>& cells) {
  out << '{';
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) out << ',';
    out << '"' << keys[i] << "\":" << cells[i];
  }
  out << "}\n";
}

inline std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// JSON cell -> CSV cell: strings unquoted, null empty.
inline std::string csv_cell(const std::string& json_cell) {
  if (json_cell == "null") return "";
  if (!json_cell.empty() && json_cell.front() == '"')
    return csv_escape(nlohmann::json::parse(json_cell).get<std::string>());
  return json_cell;
}

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << '\n';
}

}  // namespace detail

inline void write_json_line(std::ostream& out, const InvariantReport& r) {
  detail::write_json_object(out, invariant_columns(), detail::invariant_cells(r));
}

inline void write_json_line(std::ostream& out, const VerificationResult& v) {
  detail::write_json_object(out, verification_columns(), detail::verification_cells(v));
}

inline void write_csv_header(std::ostream& out, const std::vector<std::string>& columns) {
  detail::write_csv_row(out, columns);
}

inline void write_csv_row(std::ostream& out, const InvariantReport& r) {
  std::vector<std::string> cells;
  for (const auto& c : detail::invariant_cells(r)) cells.push_back(detail::csv_cell(c));
  detail::write_csv_row(out, cells);
}

inline void write_csv_row(std::ostream& out, const VerificationResult& v) {
  std::vector<std::string> cells;
  for (const auto& c : detail::verification_cells(v)) cells.push_back(detail::csv_cell(c));
  detail::write_csv_row(out, cells);
}

enum class ReportFormat { json_lines, csv };

template <typename Record>
void write_report(std::ostream& out, const std::vector<Record>& records, ReportFormat format) {
  if (format == ReportFormat::csv) {
    if constexpr (std::is_same_v<Record, InvariantReport>)
      write_csv_header(out, invariant_columns());
    else
      write_csv_header(out, verification_columns());
    for (const auto& r : records) write_csv_row(out, r);
  } else {
    for (const auto& r : records) write_json_line(out, r);
  }
}

/// Census CSV: invariant columns followed by one status column per claim.
inline std::vector<std::string> census_columns() {
  auto cols = invariant_columns();
  for (auto id : all_claims) cols.emplace_back(claim_name(id));
  return cols;
}

inline void write_census_csv_row(std::ostream& out, const InvariantReport& r,
                                 const std::vector<VerificationResult>& results) {
  std::vector<std::string> cells;
  for (const auto& c : detail::invariant_cells(r)) cells.push_back(detail::csv_cell(c));
  for (auto id : all_claims) {
    std::string status;
    for (const auto& v : results)
      if (v.claim == id) status = status_name(v.status);
    cells.push_back(status);
  }
  detail::write_csv_row(out, cells);
}

// ---------------------------------------------------------------------------
// Parsing reports back

class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline nlohmann::json parse_object(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ReportParseError(e.what());
  }
  if (!j.is_object()) throw ReportParseError("expected a JSON object");
  return j;
}

inline std::optional<std::uint64_t> opt_u64(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<std::uint64_t>();
}

}  // namespace detail

inline InvariantReport parse_invariant_report(std::string_view line) {
  const auto j = detail::parse_object(line);
  try {
    InvariantReport r;
    r.name = j.at("name").get<std::string>();
    r.order = j.at("order").get<std::uint64_t>();
    r.n_centralizers = j.at("n_centralizers").get<std::uint64_t>();
    r.center_order = j.at("center_order").get<std::uint64_t>();
    r.center_index = j.at("center_index").get<std::uint64_t>();
    r.involution_count = j.at("involution_count").get<std::uint64_t>();
    r.soluble = j.at("soluble").get<bool>();
    r.derived_length = detail::opt_u64(j, "derived_length");
    r.nilpotent = j.at("nilpotent").get<bool>();
    r.nilpotency_class = detail::opt_u64(j, "nilpotency_class");
    r.simple = j.at("simple").get<bool>();
    r.semisimple = j.at("semisimple").get<bool>();
    r.a_measure = detail::opt_u64(j, "a_measure");
    r.a_measure_exact = j.at("a_measure_exact").get<bool>();
    r.n_measure = detail::opt_u64(j, "n_measure");
    r.n_measure_exact = j.at("n_measure_exact").get<bool>();
    if (!j.at("pyber_ratio").is_null()) r.pyber_ratio = j.at("pyber_ratio").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ReportParseError(e.what());
  }
}

inline VerificationResult parse_verification_result(std::string_view line) {
  const auto j = detail::parse_object(line);
  try {
    VerificationResult v;
    const auto claim = parse_claim(j.at("claim").get<std::string>());
    const auto status = parse_status(j.at("status").get<std::string>());
    if (!claim) throw ReportParseError("unknown claim id");
    if (!status) throw ReportParseError("unknown status");
    v.claim = *claim;
    v.group = j.at("group").get<std::string>();
    v.hypothesis_held = j.at("hypothesis_held").get<bool>();
    v.conclusion_held = j.at("conclusion_held").get<bool>();
    v.status = *status;
    v.detail = j.at("detail").get<std::string>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ReportParseError(e.what());
  }
}

using ReportRecord = std::variant<InvariantReport, VerificationResult>;

/// Parses a mixed json-lines report stream (as written by the census).
inline std::vector<ReportRecord> parse_report(std::istream& in) {
  std::vector<ReportRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (detail::blank(line)) continue;
    if (line.find("\"claim\"") != std::string::npos && detail::parse_object(line).contains("claim"))
      out.emplace_back(parse_verification_result(line));
    else
      out.emplace_back(parse_invariant_report(line));
  }
  return out;
}

}  // namespace centra
