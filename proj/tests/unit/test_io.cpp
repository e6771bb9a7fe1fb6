#include <doctest.h>

#include "cartdec/catalog.hpp"
#include "cartdec/error.hpp"
#include "cartdec/io.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace cartdec;
using fixtures::alternating;

TEST_CASE("group files") {
  PermGroup g = parse_group("# Alt(5)\n\ndegree 5\ngen (1,2,3,4,5)\ngen (1,2,3)  # 3-cycle\n");
  CHECK(g.order() == 60);
  CHECK(parse_group(format_group(g, "comment")).same_group(g));
  CHECK(parse_group("degree 3\n").order() == 1);

  CHECK_THROWS_AS(parse_group(""), InputError);
  CHECK_THROWS_AS(parse_group("gen (1,2)\n"), InputError);
  CHECK_THROWS_AS(parse_group("degree 0\n"), InputError);
  CHECK_THROWS_AS(parse_group("degree x\n"), InputError);
  CHECK_THROWS_AS(parse_group("degree 3\ngen (1,4)\n"), InputError);
  CHECK_THROWS_AS(parse_group("degree 3\nsubgroup\n"), InputError);
  try {
    parse_group("degree 3\n\ngen (1,2\n");
    FAIL("expected an error");
  } catch (InputError const &e) {
    CHECK(std::string(e.what()).find("line 3") == 0);
  }
}

TEST_CASE("partition and decomposition files") {
  Partition p = parse_partition(6, "1,2,3\n4, 5, 6\n");
  CHECK(p == Partition(6, {{0, 1, 2}, {3, 4, 5}}));
  CHECK(format_partition(p) == "1,2,3\n4,5,6\n");
  CHECK_THROWS_AS(parse_partition(6, "1,2,3\n4,5,7\n"), InputError);
  CHECK_THROWS_AS(parse_partition(6, "1,2,3\n3,4,5,6\n"), InputError);
  CHECK_THROWS_AS(parse_partition(6, "1,2\n"), InputError);

  Instance grid = build_grid_2x3();
  std::string text = format_decomposition(grid.points->decomposition);
  CHECK(text == "ell 2\n1,2,3\n4,5,6\n--\n1,4\n2,5\n3,6\n");
  CHECK(parse_decomposition(6, text) == grid.points->decomposition);
  CHECK_THROWS_AS(parse_decomposition(6, "ell 3\n1,2,3\n4,5,6\n--\n1,4\n2,5\n3,6\n"),
                  InputError);
  CHECK_THROWS_AS(parse_decomposition(6, "1,2,3\n"), InputError);
  CHECK_THROWS_AS(parse_decomposition(6, "ell 2\n1,2,3\n4,5,6\n--\n1,2,3\n4,5,6\n"),
                  StructureError);
}

TEST_CASE("system files") {
  Instance a6 = build_a6_on_36();
  SystemFile file{0, a6.points->plinth, std::nullopt, std::nullopt, a6.points->system->subgroups};
  std::string text = format_system(file);
  SystemFile back = parse_system(36, text);
  REQUIRE(back.omega);
  CHECK(*back.omega == 0);
  REQUIRE(back.plinth);
  CHECK(back.plinth->same_group(*a6.points->plinth));
  CHECK(same_subgroup_set(back.subgroups, file.subgroups));

  SystemFile sub = parse_system(4, "stabilizer\nsubgroup\ngen (1,2)\nsubgroup\ngen (3,4)\n"
                                   "gomega\ngen (1,3)(2,4)\n");
  CHECK_FALSE(sub.omega);
  CHECK(sub.stabilizer->order() == 1);
  CHECK(sub.g_omega->order() == 2);
  CHECK(sub.subgroups.size() == 2);

  CHECK_THROWS_AS(parse_system(4, "omega 1\n"), InputError);
  CHECK_THROWS_AS(parse_system(4, "subgroup\ngen (1,2)\n"), InputError);
  CHECK_THROWS_AS(parse_system(4, "omega 5\nsubgroup\n"), InputError);
  CHECK_THROWS_AS(parse_system(4, "omega 1\nblock\n"), InputError);
}

TEST_CASE("parameter files") {
  FactorParams p = parse_params("degree 5\nt\ngen (1,2,3,4,5)\ngen (1,2,3)\n"
                                "subgroup\ngen (1,2,3)\ngen (1,2)(3,4)\n");
  CHECK(p.t.order() == 60);
  REQUIRE(p.subgroups.size() == 1);
  CHECK(p.subgroups[0].order() == 12);
  CHECK_THROWS_AS(parse_params("degree 5\nsubgroup\ngen (1,2,3)\n"), InputError);
}

TEST_CASE("report json") {
  Instance ex64 = build_instance("ex64");
  ClassifyOptions options;
  options.factorization = ex64.factorization;
  auto report = classify_system(ex64.group, *ex64.system, ex64.g_omega, options);
  std::string text = report_json(report);
  CHECK(text == report_json(report));
  auto j = nlohmann::json::parse(text);
  std::vector<std::string> keys;
  auto ordered = nlohmann::ordered_json::parse(text);
  for (auto it = ordered.begin(); it != ordered.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"ell", "homogeneous", "g_transitive", "normal_cells",
                                         "factor_set_size", "factor_sets", "diagonal_pairs",
                                         "smf_detected"});
  CHECK(j["factor_set_size"] == 2);
  CHECK(j["normal_cells"].is_null());
  CHECK(j["factor_sets"][0]["subgroups"].size() == 2);

  Instance ex61 = build_instance("ex61");
  options.factorization = ex61.factorization;
  auto r61 = nlohmann::json::parse(
      report_json(classify_system(ex61.group, *ex61.system, ex61.g_omega, options)));
  CHECK(r61["normal_cells"] == nlohmann::json::parse("[[1,2],[3,4]]"));
  CHECK(r61["diagonal_pairs"][0]["factors"] == nlohmann::json::parse("[1,2]"));

  auto sr = nlohmann::json::parse(system_report_json(verify_cartesian_system(*ex64.system)));
  CHECK(sr["cs1"] == true);
  CHECK(sr["cs2"].size() == 2);
  CHECK(sr["gomega_closed"].is_null());

  auto x = nlohmann::json::parse(expected_json(build_instance("ex63").expected));
  CHECK(x["plinth_order"] == 16796160000ULL);
  CHECK(x["degree"] == 167961600);
}
