#include "cartdec/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "cartdec/error.hpp"
#include "json.hpp"

namespace cartdec {

namespace {

using Json = nlohmann::ordered_json;

struct Line {
  std::size_t number = 0;
  std::string keyword;
  std::string rest;
};

std::string trim(std::string const &s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos)
    return {};
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

/// Non-empty lines with comments removed, split at the first blank.
std::vector<Line> significant_lines(std::string const &text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos)
      raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty())
      continue;
    auto space = line.find_first_of(" \t");
    Line l{number, line.substr(0, space), {}};
    if (space != std::string::npos)
      l.rest = trim(line.substr(space));
    out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(Line const &line, std::string const &message) {
  throw InputError("line " + std::to_string(line.number) + ": " + message);
}

std::size_t parse_count(Line const &line) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(line.rest, &pos);
  } catch (std::exception const &) {
    fail(line, "expected a number after '" + line.keyword + "'");
  }
  if (pos != line.rest.size())
    fail(line, "trailing text after the number");
  return value;
}

Permutation parse_generator(std::size_t degree, Line const &line) {
  try {
    return parse_cycles(degree, line.rest);
  } catch (InputError const &e) {
    fail(line, e.what());
  }
}

std::size_t parse_degree_line(std::vector<Line> const &lines) {
  if (lines.empty() || lines.front().keyword != "degree")
    throw InputError(lines.empty() ? "empty input" : "line " +
                                                         std::to_string(lines.front().number) +
                                                         ": expected 'degree N' first");
  std::size_t degree = parse_count(lines.front());
  if (degree == 0)
    fail(lines.front(), "degree must be positive");
  return degree;
}

/// Consecutive `gen` lines starting at `k`; advances `k` past them.
PermGroup parse_gen_block(std::size_t degree, std::vector<Line> const &lines, std::size_t &k) {
  std::vector<Permutation> gens;
  while (k < lines.size() && lines[k].keyword == "gen")
    gens.push_back(parse_generator(degree, lines[k++]));
  return PermGroup(degree, std::move(gens));
}

void append_gens(std::ostringstream &out, PermGroup const &group) {
  for (auto const &g : group.generators())
    out << "gen " << to_cycle_string(g) << '\n';
}

Json order_json(BigInt const &order) {
  if (order <= std::numeric_limits<std::uint64_t>::max())
    return Json(static_cast<std::uint64_t>(order));
  return Json(order.str());
}

Json subgroup_json(PermGroup const &group) {
  Json gens = Json::array();
  for (auto const &g : group.generators())
    gens.push_back(to_cycle_string(g));
  return Json{{"order", order_json(group.order())}, {"generators", gens}};
}

Json cells_json(NormalWitness const &cells) {
  Json out = Json::array();
  for (auto const &cell : cells) {
    Json c = Json::array();
    for (auto f : cell)
      c.push_back(f + 1);
    out.push_back(c);
  }
  return out;
}

template <class T> Json optional_json(std::optional<T> const &value) {
  return value ? Json(*value) : Json(nullptr);
}

} // namespace

PermGroup parse_group(std::string const &text) {
  auto lines = significant_lines(text);
  std::size_t degree = parse_degree_line(lines);
  std::size_t k = 1;
  PermGroup group = parse_gen_block(degree, lines, k);
  if (k != lines.size())
    fail(lines[k], "unexpected '" + lines[k].keyword + "' in a group file");
  return group;
}

std::string format_group(PermGroup const &group, std::string const &comment) {
  std::ostringstream out;
  if (!comment.empty())
    out << "# " << comment << '\n';
  out << "degree " << group.degree() << '\n';
  append_gens(out, group);
  return out.str();
}

Partition parse_partition(std::size_t degree, std::string const &text) {
  std::vector<std::vector<Point>> parts;
  for (auto const &line : significant_lines(text)) {
    std::vector<Point> part;
    std::istringstream fields(line.keyword + line.rest);
    std::string field;
    while (std::getline(fields, field, ',')) {
      field = trim(field);
      std::size_t pos = 0;
      unsigned long p = 0;
      try {
        p = std::stoul(field, &pos);
      } catch (std::exception const &) {
        fail(line, "bad point '" + field + "'");
      }
      if (pos != field.size() || p == 0 || p > degree)
        fail(line, "point '" + field + "' out of range 1.." + std::to_string(degree));
      part.push_back(static_cast<Point>(p - 1));
    }
    parts.push_back(std::move(part));
  }
  return Partition(degree, std::move(parts));
}

std::string format_partition(Partition const &partition) {
  std::ostringstream out;
  for (auto const &part : partition.parts()) {
    for (std::size_t j = 0; j < part.size(); ++j)
      out << (j ? "," : "") << part[j] + 1;
    out << '\n';
  }
  return out.str();
}

CartesianDecomposition parse_decomposition(std::size_t degree, std::string const &text) {
  std::istringstream in(text);
  std::string raw;
  std::optional<std::size_t> ell;
  std::vector<std::string> chunks(1);
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty())
      continue;
    if (!ell) {
      Line header{number, line.substr(0, line.find(' ')), {}};
      if (header.keyword != "ell" || line.find(' ') == std::string::npos)
        fail(header, "expected 'ell K' first");
      header.rest = trim(line.substr(line.find(' ')));
      ell = parse_count(header);
    } else if (line == "--") {
      chunks.emplace_back();
    } else {
      chunks.back() += line + '\n';
    }
  }
  if (!ell)
    throw InputError("empty decomposition file");
  if (chunks.size() != *ell)
    throw InputError("header says ell " + std::to_string(*ell) + " but the file has " +
                     std::to_string(chunks.size()) + " partitions");
  std::vector<Partition> partitions;
  for (auto const &chunk : chunks)
    partitions.push_back(parse_partition(degree, chunk));
  return CartesianDecomposition(std::move(partitions));
}

std::string format_decomposition(CartesianDecomposition const &decomposition) {
  std::ostringstream out;
  out << "ell " << decomposition.arity() << '\n';
  for (std::size_t i = 0; i < decomposition.arity(); ++i) {
    if (i)
      out << "--\n";
    out << format_partition(decomposition.partitions()[i]);
  }
  return out.str();
}

SystemFile parse_system(std::size_t degree, std::string const &text) {
  auto lines = significant_lines(text);
  SystemFile out;
  std::size_t k = 0;
  while (k < lines.size()) {
    Line const &line = lines[k++];
    if (line.keyword == "omega") {
      std::size_t p = parse_count(line);
      if (p == 0 || p > degree)
        fail(line, "omega out of range 1.." + std::to_string(degree));
      out.omega = static_cast<Point>(p - 1);
      continue;
    }
    if (!line.rest.empty())
      fail(line, "'" + line.keyword + "' takes no arguments");
    PermGroup block = parse_gen_block(degree, lines, k);
    if (line.keyword == "subgroup")
      out.subgroups.push_back(std::move(block));
    else if (line.keyword == "plinth")
      out.plinth = std::move(block);
    else if (line.keyword == "stabilizer")
      out.stabilizer = std::move(block);
    else if (line.keyword == "gomega")
      out.g_omega = std::move(block);
    else
      fail(line, "unknown keyword '" + line.keyword + "'");
  }
  if (out.subgroups.empty())
    throw InputError("system file has no subgroup blocks");
  if (!out.omega && !out.stabilizer)
    throw InputError("system file needs an 'omega' line or a 'stabilizer' block");
  return out;
}

std::string format_system(SystemFile const &system) {
  std::ostringstream out;
  if (system.omega)
    out << "omega " << *system.omega + 1 << '\n';
  auto block = [&](char const *name, PermGroup const &g) {
    out << name << '\n';
    append_gens(out, g);
  };
  if (system.plinth)
    block("plinth", *system.plinth);
  if (system.stabilizer)
    block("stabilizer", *system.stabilizer);
  if (system.g_omega)
    block("gomega", *system.g_omega);
  for (auto const &k : system.subgroups)
    block("subgroup", k);
  return out.str();
}

FactorParams parse_params(std::string const &text) {
  auto lines = significant_lines(text);
  std::size_t degree = parse_degree_line(lines);
  std::optional<PermGroup> t;
  std::vector<PermGroup> subgroups;
  std::size_t k = 1;
  while (k < lines.size()) {
    Line const &line = lines[k++];
    PermGroup block = parse_gen_block(degree, lines, k);
    if (line.keyword == "t" && !t)
      t = std::move(block);
    else if (line.keyword == "subgroup")
      subgroups.push_back(std::move(block));
    else
      fail(line, "expected a 't' block followed by 'subgroup' blocks");
  }
  if (!t)
    throw InputError("parameter file has no 't' block");
  return FactorParams{*t, std::move(subgroups)};
}

std::string read_text_file(std::filesystem::path const &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(std::filesystem::path const &path, std::string const &text) {
  std::ofstream out(path);
  if (!out || !(out << text))
    throw InputError("cannot write " + path.string());
}

std::string report_json(ClassificationReport const &report, int indent) {
  Json sets = Json::array();
  for (auto const &fs : report.factor_sets) {
    Json members = Json::array();
    for (auto const &s : fs.subgroups)
      members.push_back(subgroup_json(s));
    sets.push_back(Json{{"factor", fs.factor + 1}, {"subgroups", members}});
  }
  Json pairs = Json::array();
  for (auto const &d : report.diagonal_pairs)
    pairs.push_back(Json{{"factors", {d.first + 1, d.second + 1}},
                         {"subgroup", d.system_index + 1}});
  Json out{{"ell", report.ell},
           {"homogeneous", optional_json(report.homogeneous)},
           {"g_transitive", optional_json(report.g_transitive)},
           {"normal_cells", report.normal_cells ? cells_json(*report.normal_cells)
                                                : Json(nullptr)},
           {"factor_set_size", report.factor_set_size},
           {"factor_sets", sets},
           {"diagonal_pairs", pairs},
           {"smf_detected", report.smf_detected}};
  return out.dump(indent);
}

std::string system_report_json(SystemReport const &report, int indent) {
  Json cs2 = Json::array();
  for (bool b : report.cs2)
    cs2.push_back(b);
  Json out{{"cs1", report.cs1},
           {"cs2", cs2},
           {"gomega_closed", optional_json(report.gomega_closed)}};
  return out.dump(indent);
}

std::string expected_json(ExpectedFields const &x, int indent) {
  Json out = Json::object();
  auto put_order = [&](char const *key, std::optional<BigInt> const &v) {
    if (v)
      out[key] = order_json(*v);
  };
  auto put = [&](char const *key, auto const &v) {
    if (v)
      out[key] = *v;
  };
  put_order("group_order", x.group_order);
  put_order("plinth_order", x.plinth_order);
  put("degree", x.degree);
  if (!x.subgroup_orders.empty()) {
    Json orders = Json::array();
    for (auto const &o : x.subgroup_orders)
      orders.push_back(order_json(o));
    out["subgroup_orders"] = orders;
  }
  put_order("stabilizer_order", x.stabilizer_order);
  put("innately_transitive", x.innately_transitive);
  put("homogeneous", x.homogeneous);
  put("invariant", x.invariant);
  put("g_transitive", x.g_transitive);
  put("normal", x.normal);
  if (x.normal_cells)
    out["normal_cells"] = cells_json(*x.normal_cells);
  put("factor_set_size", x.factor_set_size);
  put("diagonal_pair_count", x.diagonal_pair_count);
  put("smf_detected", x.smf);
  put_order("ambient_stabilizer_order", x.ambient_stabilizer_order);
  return out.dump(indent);
}

} // namespace cartdec
