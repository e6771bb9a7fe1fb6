#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cartdec/blocks.hpp"
#include "cartdec/catalog.hpp"
#include "cartdec/classify.hpp"
#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"
#include "cartdec/io.hpp"
#include "json.hpp"

using namespace cartdec;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kViolated = 1, kInputError = 2, kCapExceeded = 3 };

struct RunConfig {
  std::size_t max_partitions = kDefaultPartitionCap;
  std::size_t max_degree = kDefaultMaxDegree;
  std::size_t max_elements = kDefaultElementCap;
  std::size_t max_ell = 8;
  std::string format = "text";
  std::string out;

  bool json() const { return format == "json"; }
  SearchCaps search_caps() const {
    SearchCaps caps;
    caps.max_partitions = max_partitions;
    caps.max_ell = max_ell;
    return caps;
  }
};

Json order_json(BigInt const &order) {
  if (order <= std::numeric_limits<std::uint64_t>::max())
    return Json(static_cast<std::uint64_t>(order));
  return Json(order.str());
}

Json partition_json(Partition const &p) {
  Json parts = Json::array();
  for (auto const &part : p.parts()) {
    Json q = Json::array();
    for (auto x : part)
      q.push_back(x + 1);
    parts.push_back(q);
  }
  return parts;
}

std::string join_sizes(std::vector<std::size_t> const &xs, char const *sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

PermGroup load_group(std::string const &path) { return parse_group(read_text_file(path)); }

/// `auto` takes the first plinth, `group` the group itself, a number the
/// plinth with that 1-based index, anything else a group file.
PermGroup select_plinth(PermGroup const &group, std::string const &choice,
                        RunConfig const &config) {
  if (choice == "group")
    return group;
  bool numeric = !choice.empty() && choice.find_first_not_of("0123456789") == std::string::npos;
  if (choice == "auto" || numeric) {
    auto found = plinths(group, config.max_elements);
    if (found.empty())
      throw StructureError("the group is not innately transitive; it has no plinth");
    std::size_t index = choice == "auto" ? 1 : std::stoul(choice);
    if (index == 0 || index > found.size())
      throw InputError("plinth index " + choice + " out of range 1.." +
                       std::to_string(found.size()));
    return found[index - 1];
  }
  PermGroup plinth = load_group(choice);
  if (plinth.degree() != group.degree() || !group.contains_group(plinth))
    throw InputError("plinth file is not a subgroup of the group");
  if (!is_normal_subgroup(group, plinth) || !plinth.is_transitive())
    throw StructureError("the supplied plinth is not a transitive normal subgroup");
  return plinth;
}

void require_transitive(PermGroup const &group) {
  if (!group.is_transitive())
    throw InputError("the group is not transitive");
}

std::string cells_text(NormalWitness const &cells) {
  std::string out;
  for (auto const &cell : cells) {
    out += out.empty() ? "{" : " {";
    for (std::size_t j = 0; j < cell.size(); ++j)
      out += (j ? "," : "") + std::to_string(cell[j] + 1);
    out += "}";
  }
  return out;
}

std::string yes_no(std::optional<bool> const &b) {
  return b ? (*b ? "yes" : "no") : "not evaluated";
}

int cmd_analyze(std::string const &path, RunConfig const &config, std::ostream &out) {
  PermGroup g = load_group(path);
  auto minimal = minimal_normal_subgroups(g, config.max_elements);
  std::vector<std::size_t> plinth_indices;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if (minimal[i].is_transitive())
      plinth_indices.push_back(i + 1);
  }
  bool innate = g.is_transitive() && !plinth_indices.empty();
  if (config.json()) {
    Json subs = Json::array();
    for (auto const &n : minimal) {
      Json gens = Json::array();
      for (auto const &s : n.generators())
        gens.push_back(to_cycle_string(s));
      subs.push_back(Json{{"order", order_json(n.order())},
                          {"transitive", n.is_transitive()},
                          {"abelian", n.is_abelian()},
                          {"generators", gens}});
    }
    Json j{{"degree", g.degree()},
           {"order", order_json(g.order())},
           {"transitive", g.is_transitive()},
           {"minimal_normal_subgroups", subs},
           {"plinths", plinth_indices},
           {"innately_transitive", innate}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "degree " << g.degree() << '\n'
      << "order " << g.order() << '\n'
      << "transitive " << (g.is_transitive() ? "yes" : "no") << '\n'
      << "minimal normal subgroups " << minimal.size() << '\n';
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    out << "  " << i + 1 << ": order " << minimal[i].order() << ", "
        << (minimal[i].is_transitive() ? "transitive" : "intransitive")
        << (minimal[i].is_abelian() ? ", abelian" : "") << '\n';
  }
  out << "plinths " << plinth_indices.size();
  if (!plinth_indices.empty())
    out << " (" << join_sizes(plinth_indices, ", ") << ")";
  out << '\n' << (innate ? "innately transitive" : "not innately transitive") << '\n';
  return kOk;
}

void print_decompositions(PermGroup const &g, std::vector<CartesianDecomposition> const &list,
                          RunConfig const &config, std::ostream &out) {
  if (config.json()) {
    Json items = Json::array();
    for (auto const &e : list) {
      auto symmetry = decomposition_symmetry(g, e);
      Json parts = Json::array();
      for (auto const &p : e.partitions())
        parts.push_back(partition_json(p));
      items.push_back(Json{{"ell", e.arity()},
                           {"part_counts", e.part_counts()},
                           {"homogeneous", e.is_homogeneous()},
                           {"g_transitive", symmetry.transitive},
                           {"partitions", parts}});
    }
    out << Json{{"degree", g.degree()}, {"count", list.size()}, {"decompositions", items}}.dump(2)
        << '\n';
    return;
  }
  out << "decompositions " << list.size() << '\n';
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto const &e = list[i];
    std::vector<std::size_t> sizes;
    for (auto const &p : e.partitions())
      sizes.push_back(e.degree() / p.size());
    auto symmetry = decomposition_symmetry(g, e);
    out << "E" << i + 1 << ": ell " << e.arity() << ", part counts "
        << join_sizes(e.part_counts(), "x") << ", part sizes " << join_sizes(sizes, ",") << ", "
        << (e.is_homogeneous() ? "homogeneous" : "inhomogeneous") << ", "
        << (symmetry.transitive ? "G-transitive" : "not G-transitive") << '\n';
  }
}

int cmd_decomps(std::string const &path, std::string const &plinth_choice,
                RunConfig const &config, std::ostream &out) {
  PermGroup g = load_group(path);
  require_transitive(g);
  PermGroup m = select_plinth(g, plinth_choice, config);
  auto list = find_invariant_decompositions(g, m, 0, config.search_caps());
  print_decompositions(g, list, config, out);
  return kOk;
}

int cmd_oracle(std::string const &path, std::string const &plinth_choice,
               RunConfig const &config, std::ostream &out) {
  PermGroup g = load_group(path);
  require_transitive(g);
  if (g.degree() > 36)
    throw CapExceeded("the oracle is limited to degree 36");
  PermGroup m = select_plinth(g, plinth_choice, config);
  auto oracle = oracle_invariant_decompositions(g, m);
  auto search = find_invariant_decompositions(g, m, 0, config.search_caps());
  bool agree = oracle == search;
  if (config.json()) {
    out << Json{{"degree", g.degree()},
                {"oracle_count", oracle.size()},
                {"search_count", search.size()},
                {"agree", agree}}
               .dump(2)
        << '\n';
  } else {
    out << "oracle " << oracle.size() << ", search " << search.size() << ", "
        << (agree ? "agree" : "DIFFER") << '\n';
  }
  return agree ? kOk : kViolated;
}

void print_report(ClassificationReport const &r, RunConfig const &config, std::ostream &out) {
  if (config.json()) {
    out << report_json(r) << '\n';
    return;
  }
  out << "ell " << r.ell << '\n'
      << "homogeneous: " << yes_no(r.homogeneous) << '\n'
      << "G-transitive: " << yes_no(r.g_transitive) << '\n'
      << "M-normal: "
      << (r.normal_cells ? "yes, cells " + cells_text(*r.normal_cells) : std::string("no"))
      << '\n'
      << "|F_i| = " << r.factor_set_size << '\n';
  for (auto const &fs : r.factor_sets) {
    if (fs.subgroups.empty())
      continue;
    out << "  F_" << fs.factor + 1 << ": orders";
    for (auto const &s : fs.subgroups)
      out << ' ' << s.order();
    out << '\n';
  }
  out << "diagonal pairs " << r.diagonal_pairs.size() << '\n';
  for (auto const &d : r.diagonal_pairs)
    out << "  K_" << d.system_index + 1 << " on factors (" << d.first + 1 << ","
        << d.second + 1 << ")\n";
  out << "strong multiple factorisation: " << (r.smf_detected ? "yes" : "no") << '\n';
}

int cmd_classify(std::string const &path, std::string const &system_path,
                 std::string const &decomp_path, std::string const &plinth_choice,
                 std::size_t omega_1based, RunConfig const &config, std::ostream &out) {
  PermGroup g = load_group(path);
  if (system_path.empty() == decomp_path.empty())
    throw InputError("give exactly one of --system and --decomp");
  if (omega_1based == 0 || omega_1based > g.degree())
    throw InputError("--omega out of range");

  CartesianSystem system;
  std::optional<PermGroup> g_omega;
  if (!system_path.empty()) {
    SystemFile file = parse_system(g.degree(), read_text_file(system_path));
    PermGroup m = file.plinth ? *file.plinth
                              : (plinth_choice == "group" ? g : select_plinth(g, plinth_choice, config));
    if (!g.contains_group(m))
      throw InputError("the plinth is not a subgroup of the group");
    for (auto const &k : file.subgroups) {
      if (!m.contains_group(k))
        throw InputError("a system subgroup is not contained in the plinth");
    }
    if (file.omega) {
      system = make_system(m, *file.omega, file.subgroups);
    } else {
      if (!file.g_omega)
        throw InputError("a system without omega needs a 'gomega' block");
      system = CartesianSystem{m, std::nullopt, *file.stabilizer, file.subgroups};
      g_omega = file.g_omega;
    }
  } else {
    CartesianDecomposition e =
        parse_decomposition(g.degree(), read_text_file(decomp_path));
    require_transitive(g);
    PermGroup m = select_plinth(g, plinth_choice, config);
    system = system_from_decomposition(m, e, static_cast<Point>(omega_1based - 1));
  }

  SystemReport check = verify_cartesian_system(
      system, g_omega ? g_omega
                      : std::optional<PermGroup>(point_stabilizer(g, *system.omega)));
  if (!check.passed()) {
    if (config.json())
      out << system_report_json(check) << '\n';
    else
      out << "not a Cartesian system\n" << system_report_json(check) << '\n';
    return kViolated;
  }
  ClassifyOptions options;
  options.max_degree = config.max_degree;
  auto report = classify_system(g, system, g_omega, options);
  print_report(report, config, out);
  return kOk;
}

Instance build_named(std::string const &name, std::string const &params_path,
                     RunConfig const &config) {
  BuildOptions options{config.max_degree};
  if (params_path.empty())
    return build_instance(name, options);
  return build_instance(name, parse_params(read_text_file(params_path)), options);
}

int cmd_catalog_list(RunConfig const &config, std::ostream &out) {
  auto names = catalog_names();
  if (config.json()) {
    out << Json(names).dump(2) << '\n';
    return kOk;
  }
  for (auto const &n : names)
    out << n << (n == "ex65" ? "  (needs --params)" : "") << '\n';
  return kOk;
}

int cmd_catalog_export(std::string const &name, std::string const &params_path,
                       RunConfig const &config, std::ostream &out) {
  Instance instance = build_named(name, params_path, config);
  fs::path dir = config.out.empty() ? fs::path(name) : fs::path(config.out);
  fs::create_directories(dir);
  std::vector<std::string> written;
  auto write = [&](std::string const &file, std::string const &text) {
    write_text_file(dir / file, text);
    written.push_back((dir / file).string());
  };

  if (instance.points) {
    auto const &p = *instance.points;
    write("group.txt", format_group(p.group, instance.name + ": " + instance.description));
    write("decomposition.txt", format_decomposition(p.decomposition));
    if (p.plinth)
      write("plinth.txt", format_group(*p.plinth, instance.name + " plinth"));
    if (p.system) {
      SystemFile file{p.omega, p.plinth, std::nullopt, std::nullopt, p.system->subgroups};
      write("system.txt", format_system(file));
    }
  } else {
    write("group.txt", format_group(instance.group, instance.name + ": " + instance.description));
    if (instance.plinth)
      write("plinth.txt", format_group(*instance.plinth, instance.name + " plinth"));
    if (instance.system) {
      SystemFile file{std::nullopt, instance.plinth, instance.system->stabilizer,
                      instance.g_omega, instance.system->subgroups};
      write("system.txt", format_system(file));
    }
  }
  write("expected.json", expected_json(instance.expected) + "\n");
  if (config.json()) {
    out << Json{{"instance", instance.name}, {"files", written}}.dump(2) << '\n';
  } else {
    for (auto const &w : written)
      out << w << '\n';
  }
  return kOk;
}

int cmd_catalog_check(std::string const &name, std::string const &params_path,
                      RunConfig const &config, std::ostream &out) {
  Instance instance = build_named(name, params_path, config);
  auto diffs = validate_instance(instance);
  if (config.json()) {
    out << Json{{"instance", instance.name}, {"ok", diffs.empty()}, {"diffs", diffs}}.dump(2)
        << '\n';
  } else {
    out << instance.name << ": " << (diffs.empty() ? "ok" : "MISMATCH") << '\n';
    for (auto const &d : diffs)
      out << "  " << d << '\n';
  }
  return diffs.empty() ? kOk : kViolated;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cartesian decompositions preserved by permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  app.add_option("--max-partitions", config.max_partitions, "Cap on invariant partitions")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", config.max_degree, "Largest action built by coset action")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-elements", config.max_elements, "Cap on element enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-ell", config.max_ell, "Largest number of partitions searched")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", config.out, "Output file (directory for catalog export)");

  std::string group_path, plinth_choice = "auto", system_path, decomp_path, name, params_path;
  std::size_t omega = 1;

  auto *analyze = app.add_subcommand("analyze", "Order, minimal normal subgroups and plinths");
  analyze->add_option("group", group_path, "Group file")->required();

  auto *decomps = app.add_subcommand("decomps", "Search for invariant Cartesian decompositions");
  decomps->add_option("group", group_path, "Group file")->required();
  decomps->add_option("--plinth", plinth_choice, "auto, group, a plinth index, or a file");

  auto *classify = app.add_subcommand("classify", "Classify a Cartesian system");
  classify->add_option("group", group_path, "Group file")->required();
  classify->add_option("--system", system_path, "System file");
  classify->add_option("--decomp", decomp_path, "Decomposition file");
  classify->add_option("--plinth", plinth_choice, "auto, group, a plinth index, or a file");
  classify->add_option("--omega", omega, "Base point for --decomp (1-based)");

  auto *oracle = app.add_subcommand("oracle", "Compare the search with exhaustive enumeration");
  oracle->add_option("group", group_path, "Group file")->required();
  oracle->add_option("--plinth", plinth_choice, "auto, group, a plinth index, or a file");

  auto *catalog = app.add_subcommand("catalog", "Built-in example instances");
  catalog->require_subcommand(1);
  auto *list = catalog->add_subcommand("list", "Instance names");
  auto *exp = catalog->add_subcommand("export", "Write an instance's files into a directory");
  exp->add_option("name", name, "Instance name")->required();
  exp->add_option("--params", params_path, "Parameter file");
  auto *check = catalog->add_subcommand("check", "Rebuild an instance and compare");
  check->add_option("name", name, "Instance name")->required();
  check->add_option("--params", params_path, "Parameter file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  std::ostringstream out;
  int code = kOk;
  try {
    if (*analyze)
      code = cmd_analyze(group_path, config, out);
    else if (*decomps)
      code = cmd_decomps(group_path, plinth_choice, config, out);
    else if (*classify)
      code = cmd_classify(group_path, system_path, decomp_path, plinth_choice, omega, config,
                          out);
    else if (*oracle)
      code = cmd_oracle(group_path, plinth_choice, config, out);
    else if (*list)
      code = cmd_catalog_list(config, out);
    else if (*exp)
      code = cmd_catalog_export(name, params_path, config, out);
    else if (*check)
      code = cmd_catalog_check(name, params_path, config, out);
  } catch (InputError const &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (CapExceeded const &e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (StructureError const &e) {
    std::cerr << "property violated: " << e.what() << '\n';
    return kViolated;
  } catch (std::filesystem::filesystem_error const &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }

  bool to_file = !config.out.empty() && !*exp;
  if (to_file) {
    try {
      write_text_file(config.out, out.str());
    } catch (InputError const &e) {
      std::cerr << "input error: " << e.what() << '\n';
      return kInputError;
    }
  } else {
    std::cout << out.str();
  }
  return code;
}
