#pragma once

// Problem specifications, report assembly and the artifact writers used by
// the knitwall command-line tool.

#include "knitwall/chambers.hpp"
#include "knitwall/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace knitwall {

/// Distinct failure categories for problem-spec parsing.
enum class InputErrorCode {
  MalformedJson,
  UnknownField,
  MissingField,
  BadFieldType,
  UnknownDiagram,
  UnknownVertex,
  DuplicateVertex,
  ExtendedVertex,
  EmptyRetained,
};

std::string to_string(InputErrorCode code);

class InputError : public Error {
 public:
  InputError(InputErrorCode code, std::string context, const std::string& message);
  InputErrorCode code() const { return code_; }
  /// "line N" or the JSON field path the error refers to.
  const std::string& context() const { return context_; }

 private:
  InputErrorCode code_;
  std::string context_;
};

struct SpecOptions {
  bool oracle = true;
  bool svg = false;
  bool dot = false;
  std::uint64_t seed = 1;
  friend bool operator==(const SpecOptions&, const SpecOptions&) = default;
};

struct ProblemSpec {
  DynkinType diagram{Family::A, 1};
  std::vector<Vertex> retained;
  /// The labels as written in the input (aliases preserved).
  std::vector<std::string> retained_labels;
  SpecOptions options;
};

/// Version of the built-in alias tables.
inline constexpr int kAliasTableVersion = 1;

/// Module-name aliases for the worked examples (e.g. E7 "B2", "D").
/// Returns an empty map for diagrams without an alias table.
const std::map<std::string, Vertex>& alias_table(const DynkinType& type);

/// Parses a JSON problem spec such as {"diagram":"E7","retained":["B2","D"]}.
/// Retained entries may be integers, canonical labels or aliases.
ProblemSpec parse_spec(const std::string& text);
ProblemSpec load_spec(const std::filesystem::path& path);

struct ExchangeRow {
  std::size_t slot = 0;  // 1-based
  Vertex vertex = 0;
  std::map<Vertex, int> b;
  Vertex new_vertex = 0;
  friend bool operator==(const ExchangeRow&, const ExchangeRow&) = default;
};

struct ChamberRow {
  std::size_t id = 0;
  std::vector<std::size_t> word;  // 1-based slots
  std::vector<Vertex> config;
  std::vector<std::pair<Vertex, Vertex>> dual_graph_edges;
  std::vector<std::pair<IntVector, int>> inequalities;
  std::vector<Rational> interior_point;
  friend bool operator==(const ChamberRow&, const ChamberRow&) = default;
};

struct EdgeRow {
  std::size_t a = 0;
  std::size_t b = 0;
  IntVector wall;
  std::size_t slot_from_a = 0;  // 1-based
  std::size_t slot_from_b = 0;  // 1-based
  bool configuration_changing = false;
  friend bool operator==(const EdgeRow&, const EdgeRow&) = default;
};

struct ClassRow {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> dual_graph_edges;
  std::size_t multiplicity = 0;
  friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

struct OracleRow {
  std::vector<IntVector> walls;
  bool walls_match = false;
  std::optional<std::uint64_t> whitney_count;
  std::optional<std::uint64_t> sign_vector_count;
  std::uint64_t bfs_count = 0;
  bool match = false;
  friend bool operator==(const OracleRow&, const OracleRow&) = default;
};

struct CoverageRow {
  std::uint64_t seed = 0;
  std::size_t points = 0;
  bool all_in_exactly_one = false;
  friend bool operator==(const CoverageRow&, const CoverageRow&) = default;
};

struct Report {
  std::string diagram;
  std::vector<Vertex> retained;
  std::vector<std::string> retained_labels;
  SpecOptions options;
  std::vector<ExchangeRow> exchanges;
  std::vector<IntVector> walls;
  std::vector<ChamberRow> chambers;
  std::vector<EdgeRow> skeleton;
  std::vector<ClassRow> config_classes;
  Bounds bounds;
  std::optional<OracleRow> oracle;
  CoverageRow coverage;
  std::map<std::string, std::string> files;
  std::vector<std::string> notices;
  friend bool operator==(const Report&, const Report&) = default;
};

constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const Report& report);
/// Throws InputError(BadFieldType/MissingField) on malformed reports.
Report report_from_json(const nlohmann::json& j);

/// Computes everything for `spec` without writing files.
Report build_report(const ProblemSpec& spec, ChamberStructure* structure_out = nullptr);

/// Graphviz rendering of the skeleton; edges carry the mutated slots.
std::string skeleton_dot(const ChamberStructure& structure);

/// SVG fan plot for two slots: one <line class="wall"> per wall. Throws
/// ArgumentError for other dimensions.
std::string chambers_svg(const ChamberStructure& structure);

/// Text description of the canonical labeling of a diagram.
std::string describe(const DynkinType& type);

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Builds the report and writes report.json plus the requested graphs
/// into `out_dir`.
Report run_report(const ProblemSpec& spec, const std::filesystem::path& out_dir);

}  // namespace knitwall
