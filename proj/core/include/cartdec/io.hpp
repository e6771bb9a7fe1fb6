#ifndef CARTDEC_IO_HPP
#define CARTDEC_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cartdec/cartesian.hpp"
#include "cartdec/catalog.hpp"
#include "cartdec/classify.hpp"

namespace cartdec {

// All text formats use 1-based points. Blank lines and '#' comments are
// skipped. Parse failures throw InputError naming the offending line.

/// `degree N` followed by `gen <cycles>` lines.
PermGroup parse_group(std::string const &text);
std::string format_group(PermGroup const &group, std::string const &comment = {});

/// One part per line, points separated by commas.
Partition parse_partition(std::size_t degree, std::string const &text);
std::string format_partition(Partition const &partition);

/// `ell K`, then the K partitions separated by `--` lines.
CartesianDecomposition parse_decomposition(std::size_t degree, std::string const &text);
std::string format_decomposition(CartesianDecomposition const &decomposition);

/// A system as read from disk. Either `omega` is set, or `stabilizer` is
/// (the subgroup-level form, which then also wants `g_omega`).
struct SystemFile {
  std::optional<Point> omega;
  std::optional<PermGroup> plinth;
  std::optional<PermGroup> stabilizer;
  std::optional<PermGroup> g_omega;
  std::vector<PermGroup> subgroups;
};

/// Lines `omega p`, then blocks opened by `plinth`, `stabilizer`, `gomega`
/// or `subgroup`, each followed by its `gen` lines.
SystemFile parse_system(std::size_t degree, std::string const &text);
std::string format_system(SystemFile const &system);

/// `degree N`, a `t` block with the simple group, then `subgroup` blocks.
FactorParams parse_params(std::string const &text);

std::string read_text_file(std::filesystem::path const &path);
void write_text_file(std::filesystem::path const &path, std::string const &text);

/// Orders that fit in 64 bits become JSON numbers, larger ones strings.
std::string report_json(ClassificationReport const &report, int indent = 2);
std::string system_report_json(SystemReport const &report, int indent = 2);
std::string expected_json(ExpectedFields const &expected, int indent = 2);

} // namespace cartdec

#endif
