#include "knitwall/report.hpp"

#include "knitwall/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace knitwall {

using nlohmann::json;

std::string to_string(InputErrorCode code) {
  switch (code) {
    case InputErrorCode::MalformedJson: return "malformed-json";
    case InputErrorCode::UnknownField: return "unknown-field";
    case InputErrorCode::MissingField: return "missing-field";
    case InputErrorCode::BadFieldType: return "bad-field-type";
    case InputErrorCode::UnknownDiagram: return "unknown-diagram";
    case InputErrorCode::UnknownVertex: return "unknown-vertex";
    case InputErrorCode::DuplicateVertex: return "duplicate-vertex";
    case InputErrorCode::ExtendedVertex: return "extended-vertex";
    case InputErrorCode::EmptyRetained: return "empty-retained";
  }
  return "unknown";
}

InputError::InputError(InputErrorCode code, std::string context, const std::string& message)
    : Error(to_string(code) + " at " + context + ": " + message), code_(code), context_(std::move(context)) {}

const std::map<std::string, Vertex>& alias_table(const DynkinType& type) {
  static const std::map<std::string, Vertex> none;
  static const std::map<std::string, Vertex> d4 = {{"R", 0}, {"A1", 1}, {"M", 2}, {"A2", 3}, {"A3", 4}};
  static const std::map<std::string, Vertex> d5 = {{"R", 0},  {"A1", 1}, {"B1", 2},
                                                   {"B2", 3}, {"A2", 4}, {"A3", 5}};
  static const std::map<std::string, Vertex> e7 = {{"R", 0},  {"S", 0},  {"B1", 1}, {"C1", 2}, {"D", 3},
                                                   {"C2", 4}, {"B2", 5}, {"A2", 6}, {"B3", 7}};
  if (type == DynkinType(Family::D, 4)) return d4;
  if (type == DynkinType(Family::D, 5)) return d5;
  if (type == DynkinType(Family::E, 7)) return e7;
  return none;
}

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Vertex resolve_vertex(const DynkinDiagram& diagram, const json& entry, const std::string& field,
                      std::string& label_out) {
  if (entry.is_number_integer()) {
    const auto v = entry.get<std::int64_t>();
    label_out = std::to_string(v);
    if (v == 0) throw InputError(InputErrorCode::ExtendedVertex, field, "vertex 0 is the extended vertex");
    if (v < 0 || v >= diagram.vertex_count())
      throw InputError(InputErrorCode::UnknownVertex, field,
                       "vertex " + std::to_string(v) + " is not in " + diagram.type().name());
    return static_cast<Vertex>(v);
  }
  if (!entry.is_string())
    throw InputError(InputErrorCode::BadFieldType, field, "retained entries must be integers or strings");
  label_out = entry.get<std::string>();
  const auto& aliases = alias_table(diagram.type());
  std::optional<Vertex> v;
  if (auto it = aliases.find(label_out); it != aliases.end())
    v = it->second;
  else
    v = diagram.find_label(label_out);
  if (!v)
    throw InputError(InputErrorCode::UnknownVertex, field,
                     "'" + label_out + "' is not a vertex label of " + diagram.type().name());
  if (*v == 0)
    throw InputError(InputErrorCode::ExtendedVertex, field, "'" + label_out + "' is the extended vertex");
  return *v;
}

bool read_bool(const json& j, const std::string& field) {
  if (!j.is_boolean()) throw InputError(InputErrorCode::BadFieldType, field, "expected a boolean");
  return j.get<bool>();
}

}  // namespace

ProblemSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(InputErrorCode::MalformedJson, "line " + std::to_string(line_of(text, e.byte)), e.what());
  }
  if (!doc.is_object()) throw InputError(InputErrorCode::BadFieldType, "$", "spec must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "diagram" && key != "retained" && key != "options")
      throw InputError(InputErrorCode::UnknownField, "$." + key, "unknown field");

  if (!doc.contains("diagram")) throw InputError(InputErrorCode::MissingField, "$.diagram", "required");
  if (!doc["diagram"].is_string()) throw InputError(InputErrorCode::BadFieldType, "$.diagram", "expected a string");
  ProblemSpec spec;
  try {
    spec.diagram = DynkinType::parse(doc["diagram"].get<std::string>());
  } catch (const ArgumentError& e) {
    throw InputError(InputErrorCode::UnknownDiagram, "$.diagram", e.what());
  }
  const DynkinDiagram diagram(spec.diagram);

  if (!doc.contains("retained")) throw InputError(InputErrorCode::MissingField, "$.retained", "required");
  const auto& retained = doc["retained"];
  if (!retained.is_array()) throw InputError(InputErrorCode::BadFieldType, "$.retained", "expected an array");
  if (retained.empty()) throw InputError(InputErrorCode::EmptyRetained, "$.retained", "at least one vertex needed");
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < retained.size(); ++i) {
    const std::string field = "$.retained[" + std::to_string(i) + "]";
    std::string label;
    const Vertex v = resolve_vertex(diagram, retained[i], field, label);
    if (!seen.insert(v).second)
      throw InputError(InputErrorCode::DuplicateVertex, field, "vertex " + diagram.label(v) + " listed twice");
    spec.retained.push_back(v);
    spec.retained_labels.push_back(label);
  }

  if (doc.contains("options")) {
    const auto& opts = doc["options"];
    if (!opts.is_object()) throw InputError(InputErrorCode::BadFieldType, "$.options", "expected an object");
    for (const auto& [key, value] : opts.items()) {
      const std::string field = "$.options." + key;
      if (key == "oracle")
        spec.options.oracle = read_bool(value, field);
      else if (key == "svg")
        spec.options.svg = read_bool(value, field);
      else if (key == "dot")
        spec.options.dot = read_bool(value, field);
      else if (key == "seed") {
        if (!value.is_number_unsigned())
          throw InputError(InputErrorCode::BadFieldType, field, "expected a nonnegative integer");
        spec.options.seed = value.get<std::uint64_t>();
      } else {
        throw InputError(InputErrorCode::UnknownField, field, "unknown option");
      }
    }
  }
  return spec;
}

ProblemSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(InputErrorCode::MalformedJson, path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

// ---------------------------------------------------------------------------
// Report assembly

namespace {

std::vector<std::size_t> one_based(const std::vector<std::size_t>& word) {
  std::vector<std::size_t> out;
  for (auto s : word) out.push_back(s + 1);
  return out;
}

CoverageRow generic_point_check(const ChamberStructure& cs, std::uint64_t seed, std::size_t points) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-1000000, 1000000);
  const std::size_t r = cs.config.size();
  CoverageRow row{seed, points, true};
  std::size_t taken = 0;
  while (taken < points) {
    IntVector p(r);
    for (auto& x : p) x = coord(rng);
    bool on_wall = false;
    for (const auto& w : cs.walls) on_wall = on_wall || dot(w.coeffs(), p) == 0;
    if (on_wall) continue;
    ++taken;
    if (chambers_containing(cs, p).size() != 1) row.all_in_exactly_one = false;
  }
  return row;
}

}  // namespace

Report build_report(const ProblemSpec& spec, ChamberStructure* structure_out) {
  const Configuration config(spec.diagram, spec.retained);
  Report rep;
  rep.diagram = spec.diagram.name();
  rep.retained = spec.retained;
  rep.retained_labels = spec.retained_labels;
  rep.options = spec.options;

  for (std::size_t s = 0; s < config.size(); ++s) {
    const auto ex = knit(config, s);
    rep.exchanges.push_back({s + 1, ex.pivot_vertex, ex.b, ex.new_vertex});
  }

  EnumerateOptions opts;
  opts.oracle = spec.options.oracle;
  auto cs = enumerate_chambers(config, opts);

  for (const auto& w : cs.walls) rep.walls.push_back(w.coeffs());
  for (const auto& ch : cs.chambers) {
    ChamberRow row;
    row.id = ch.id;
    row.word = one_based(ch.word);
    row.config = ch.config;
    row.dual_graph_edges = ch.dual_graph.edges;
    for (const auto& ineq : ch.inequalities) row.inequalities.emplace_back(ineq.covector.coeffs(), ineq.sign);
    row.interior_point = ch.interior_point;
    rep.chambers.push_back(std::move(row));
  }
  for (const auto& e : cs.skeleton)
    rep.skeleton.push_back(
        {e.a, e.b, cs.walls[e.wall].coeffs(), e.slot_from_a + 1, e.slot_from_b + 1, e.configuration_changing});
  for (const auto& c : cs.config_classes)
    rep.config_classes.push_back({{c.vertices.begin(), c.vertices.end()}, c.dual_graph.edges, c.multiplicity});
  rep.bounds = bounds(cs);

  if (spec.options.oracle) {
    const auto arr = restricted_walls(config.diagram(), config.slots());
    OracleRow o;
    for (const auto& c : arr.covectors) o.walls.push_back(c.coeffs());
    o.walls_match = arr.covectors == cs.walls;
    if (cs.oracle) {
      o.whitney_count = cs.oracle->whitney_count;
      o.sign_vector_count = cs.oracle->sign_vector_count;
    }
    if (!o.whitney_count && arr.covectors.size() <= kSubsetBudget) o.whitney_count = count_regions(arr);
    if (!o.sign_vector_count) o.sign_vector_count = sign_vectors(arr, 64).size();
    o.bfs_count = cs.chambers.size();
    o.match = o.walls_match && (!o.whitney_count || *o.whitney_count == o.bfs_count) &&
              *o.sign_vector_count == o.bfs_count;
    if (!o.match) throw ConsistencyError("oracle disagrees with the mutation search");
    rep.oracle = std::move(o);
  }
  rep.coverage = generic_point_check(cs, spec.options.seed, 1000);
  if (!rep.coverage.all_in_exactly_one)
    throw ConsistencyError("a generic point did not lie in exactly one chamber");

  if (structure_out) *structure_out = std::move(cs);
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json edges_json(const std::vector<std::pair<Vertex, Vertex>>& edges) {
  json a = json::array();
  for (const auto& [u, v] : edges) a.push_back({u, v});
  return a;
}

std::vector<std::pair<Vertex, Vertex>> edges_from(const json& j) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return out;
}

json b_json(const std::map<Vertex, int>& b) {
  json o = json::object();
  for (const auto& [v, c] : b) o[std::to_string(v)] = c;
  return o;
}

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json optional_count(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::uint64_t> count_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::uint64_t>();
}

}  // namespace

json to_json(const Report& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = {{"diagram", r.diagram},
                {"retained", r.retained},
                {"retained_labels", r.retained_labels},
                {"options",
                 {{"oracle", r.options.oracle},
                  {"svg", r.options.svg},
                  {"dot", r.options.dot},
                  {"seed", r.options.seed}}}};

  json ex = json::array();
  for (const auto& e : r.exchanges)
    ex.push_back({{"slot", e.slot}, {"vertex", e.vertex}, {"b", b_json(e.b)}, {"new_vertex", e.new_vertex}});
  j["exchanges"] = ex;
  j["walls"] = r.walls;

  json chambers = json::array();
  for (const auto& c : r.chambers) {
    json ineqs = json::array();
    for (const auto& [cov, sign] : c.inequalities) ineqs.push_back({{"covector", cov}, {"sign", sign}});
    chambers.push_back({{"id", c.id},
                        {"word", c.word},
                        {"config", c.config},
                        {"dual_graph_edges", edges_json(c.dual_graph_edges)},
                        {"inequalities", ineqs},
                        {"interior_point", rationals_json(c.interior_point)}});
  }
  j["chambers"] = chambers;

  json skel = json::array();
  for (const auto& e : r.skeleton)
    skel.push_back({{"a", e.a},
                    {"b", e.b},
                    {"wall", e.wall},
                    {"slot_from_a", e.slot_from_a},
                    {"slot_from_b", e.slot_from_b},
                    {"configuration_changing", e.configuration_changing}});
  j["skeleton"] = skel;

  json classes = json::array();
  for (const auto& c : r.config_classes)
    classes.push_back({{"vertices", c.vertices},
                       {"dual_graph_edges", edges_json(c.dual_graph_edges)},
                       {"multiplicity", c.multiplicity}});
  j["config_classes"] = classes;
  j["counts"] = {{"chambers", r.chambers.size()}, {"walls", r.walls.size()}, {"skeleton_edges", r.skeleton.size()}};
  j["bounds"] = {{"lower", r.bounds.lower}, {"upper", r.bounds.upper}};

  if (r.oracle) {
    const auto& o = *r.oracle;
    j["oracle"] = {{"walls", o.walls},
                   {"walls_match", o.walls_match},
                   {"whitney_count", optional_count(o.whitney_count)},
                   {"sign_vector_count", optional_count(o.sign_vector_count)},
                   {"bfs_count", o.bfs_count},
                   {"match", o.match}};
  } else {
    j["oracle"] = nullptr;
  }
  j["coverage"] = {{"seed", r.coverage.seed},
                   {"points", r.coverage.points},
                   {"all_in_exactly_one", r.coverage.all_in_exactly_one}};
  j["files"] = r.files;
  j["notices"] = r.notices;
  return j;
}

Report report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion)
      throw InputError(InputErrorCode::BadFieldType, "$.schema_version", "unsupported schema version");
    Report r;
    const auto& in = j.at("input");
    r.diagram = in.at("diagram").get<std::string>();
    r.retained = in.at("retained").get<std::vector<Vertex>>();
    r.retained_labels = in.at("retained_labels").get<std::vector<std::string>>();
    const auto& o = in.at("options");
    r.options = {o.at("oracle").get<bool>(), o.at("svg").get<bool>(), o.at("dot").get<bool>(),
                 o.at("seed").get<std::uint64_t>()};

    for (const auto& e : j.at("exchanges")) {
      ExchangeRow row{e.at("slot").get<std::size_t>(), e.at("vertex").get<Vertex>(), {},
                      e.at("new_vertex").get<Vertex>()};
      for (const auto& [k, v] : e.at("b").items()) row.b[std::stoi(k)] = v.get<int>();
      r.exchanges.push_back(std::move(row));
    }
    r.walls = j.at("walls").get<std::vector<IntVector>>();
    for (const auto& c : j.at("chambers")) {
      ChamberRow row;
      row.id = c.at("id").get<std::size_t>();
      row.word = c.at("word").get<std::vector<std::size_t>>();
      row.config = c.at("config").get<std::vector<Vertex>>();
      row.dual_graph_edges = edges_from(c.at("dual_graph_edges"));
      for (const auto& i : c.at("inequalities"))
        row.inequalities.emplace_back(i.at("covector").get<IntVector>(), i.at("sign").get<int>());
      for (const auto& x : c.at("interior_point")) row.interior_point.push_back(parse_rational(x.get<std::string>()));
      r.chambers.push_back(std::move(row));
    }
    for (const auto& e : j.at("skeleton"))
      r.skeleton.push_back({e.at("a").get<std::size_t>(), e.at("b").get<std::size_t>(), e.at("wall").get<IntVector>(),
                            e.at("slot_from_a").get<std::size_t>(), e.at("slot_from_b").get<std::size_t>(),
                            e.at("configuration_changing").get<bool>()});
    for (const auto& c : j.at("config_classes"))
      r.config_classes.push_back({c.at("vertices").get<std::vector<Vertex>>(), edges_from(c.at("dual_graph_edges")),
                                  c.at("multiplicity").get<std::size_t>()});
    r.bounds = {j.at("bounds").at("lower").get<std::size_t>(), j.at("bounds").at("upper").get<std::size_t>()};
    if (!j.at("oracle").is_null()) {
      const auto& oj = j.at("oracle");
      r.oracle = OracleRow{oj.at("walls").get<std::vector<IntVector>>(), oj.at("walls_match").get<bool>(),
                           count_from(oj.at("whitney_count")), count_from(oj.at("sign_vector_count")),
                           oj.at("bfs_count").get<std::uint64_t>(), oj.at("match").get<bool>()};
    }
    const auto& cov = j.at("coverage");
    r.coverage = {cov.at("seed").get<std::uint64_t>(), cov.at("points").get<std::size_t>(),
                  cov.at("all_in_exactly_one").get<bool>()};
    r.files = j.at("files").get<std::map<std::string, std::string>>();
    r.notices = j.at("notices").get<std::vector<std::string>>();
    return r;
  } catch (const json::out_of_range& e) {
    throw InputError(InputErrorCode::MissingField, "report", e.what());
  } catch (const json::type_error& e) {
    throw InputError(InputErrorCode::BadFieldType, "report", e.what());
  }
}

// ---------------------------------------------------------------------------
// Graph and plot writers

namespace {

std::string word_label(const std::vector<std::size_t>& word) {
  if (word.empty()) return "C+";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "." : "") + std::to_string(word[i] + 1);
  return s;
}

std::string vertex_set_label(const DynkinDiagram& d, const std::vector<Vertex>& config) {
  std::set<Vertex> sorted(config.begin(), config.end());
  std::string s = "{";
  bool first = true;
  for (Vertex v : sorted) {
    s += (first ? "" : ",") + d.label(v);
    first = false;
  }
  return s + "}";
}

}  // namespace

std::string skeleton_dot(const ChamberStructure& cs) {
  const auto& d = cs.config.diagram();
  std::ostringstream os;
  os << "graph skeleton {\n";
  os << "  // " << d.type().name() << " retained " << vertex_set_label(d, cs.config.slots()) << ": "
     << cs.chambers.size() << " chambers, " << cs.walls.size() << " walls\n";
  os << "  node [shape=ellipse, fontsize=10];\n";
  for (const auto& ch : cs.chambers)
    os << "  c" << ch.id << " [label=\"" << word_label(ch.word) << "\\n" << vertex_set_label(d, ch.config) << "\"];\n";
  for (const auto& e : cs.skeleton) {
    os << "  c" << e.a << " -- c" << e.b << " [label=\"ν" << e.slot_from_a + 1;
    if (e.slot_from_b != e.slot_from_a) os << "/ν" << e.slot_from_b + 1;
    os << "\"";
    if (e.configuration_changing) os << ", style=bold, color=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string chambers_svg(const ChamberStructure& cs) {
  if (cs.config.size() != 2)
    throw ArgumentError("fan plots need exactly 2 slots, have " + std::to_string(cs.config.size()));
  constexpr double size = 400.0, centre = 200.0, radius = 170.0;
  const auto fmt = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 20 * cs.walls.size()
     << "\" viewBox=\"0 0 " << size << ' ' << size + 20 * cs.walls.size() << "\">\n";
  os << "  <circle cx=\"" << centre << "\" cy=\"" << centre << "\" r=\"" << radius
     << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n";
  for (std::size_t i = 0; i < cs.walls.size(); ++i) {
    const auto& w = cs.walls[i];
    // Direction of the line w . ϑ = 0; screen y grows downwards.
    const double dx = -static_cast<double>(w[1]);
    const double dy = static_cast<double>(w[0]);
    const double n = std::hypot(dx, dy);
    const double ux = dx / n * radius, uy = dy / n * radius;
    os << "  <line class=\"wall\" data-covector=\"" << w[0] << ',' << w[1] << "\" x1=\"" << fmt(centre - ux)
       << "\" y1=\"" << fmt(centre + uy) << "\" x2=\"" << fmt(centre + ux) << "\" y2=\"" << fmt(centre - uy)
       << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"10\" y=\"" << size + 20 * i + 14 << "\" font-size=\"12\">" << w.pretty()
       << " = 0</text>\n";
  }
  const auto& plus = cs.chambers.front().interior_point;
  const double px = plus[0].convert_to<double>(), py = plus[1].convert_to<double>();
  const double pn = std::hypot(px, py);
  os << "  <text x=\"" << fmt(centre + px / pn * radius * 0.6) << "\" y=\"" << fmt(centre - py / pn * radius * 0.6)
     << "\" font-size=\"12\">C+</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string describe(const DynkinType& type) {
  const DynkinDiagram d(type);
  std::ostringstream os;
  os << "diagram " << type.name() << " (affine, " << d.vertex_count() << " vertices; vertex 0 is extended)\n";
  os << "vertex  label  delta  neighbours\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    char head[64];
    std::snprintf(head, sizeof head, "%-7d %-6s %-6d", v, d.label(v).c_str(), d.delta(v));
    os << head;
    bool first = true;
    for (Vertex w : d.neighbours(v)) {
      os << (first ? "" : " ") << d.label(w);
      if (d.multiplicity(v, w) > 1) os << "(x" << d.multiplicity(v, w) << ")";
      first = false;
    }
    os << '\n';
  }
  os << "edges\n";
  for (const auto& [u, v, m] : d.edges()) {
    os << "  " << d.label(u) << (m == 2 ? " == " : " -- ") << d.label(v);
    if (m == 2) os << "  (double edge)";
    os << '\n';
  }
  const auto& aliases = alias_table(type);
  if (!aliases.empty()) {
    os << "aliases (table v" << kAliasTableVersion << ")\n";
    for (const auto& [name, v] : aliases) os << "  " << name << " = " << d.label(v) << '\n';
  }
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Report run_report(const ProblemSpec& spec, const std::filesystem::path& out_dir) {
  ChamberStructure cs{Configuration(spec.diagram, spec.retained), {}, {}, {}, {}, std::nullopt};
  Report rep = build_report(spec, &cs);
  std::filesystem::create_directories(out_dir);
  if (spec.options.dot) {
    write_atomic(out_dir / "skeleton.dot", skeleton_dot(cs));
    rep.files["dot"] = "skeleton.dot";
  }
  if (spec.options.svg) {
    if (cs.config.size() == 2) {
      write_atomic(out_dir / "chambers.svg", chambers_svg(cs));
      rep.files["svg"] = "chambers.svg";
    } else {
      rep.notices.push_back("svg skipped: fan plots are drawn only for 2 slots (this configuration has " +
                            std::to_string(cs.config.size()) + ")");
    }
  }
  rep.files["report"] = "report.json";
  write_atomic(out_dir / "report.json", to_json(rep).dump(2) + "\n");
  return rep;
}

}  // namespace knitwall
