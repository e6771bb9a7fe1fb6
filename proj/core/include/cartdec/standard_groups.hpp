#ifndef CARTDEC_STANDARD_GROUPS_HPP
#define CARTDEC_STANDARD_GROUPS_HPP

#include <cstddef>

#include "cartdec/perm_group.hpp"

namespace cartdec {

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
/// Regular cyclic group generated by (0 1 ... n-1).
PermGroup cyclic_group(std::size_t n);

enum class LineGroup { psl, pgl, pgammal };

/// PSL(2,9), PGL(2,9) or PGammaL(2,9) on the 10 points of the projective
/// line over GF(9). Points 0..8 are field elements a + b*i (index a + 3b,
/// i^2 = -1); point 9 is infinity.
PermGroup projective_line_group_9(LineGroup kind);

} // namespace cartdec

#endif
