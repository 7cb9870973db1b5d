#pragma once

#include "cskit/rational.hpp"
#include "cskit/transforms.hpp"

namespace cskit {

inline constexpr int kNonCrossingCap = 12;

// m_n = sum over non-crossing partitions pi of {1..n} of prod_{B in pi}
// kappa_{|B|}, by explicit recursive enumeration over the first-block
// structure. Deliberately independent of the series-based conversion so the
// two paths can check each other; capped because it enumerates Catalan(n)
// partitions.
Rational moments_via_noncrossing(const FreeCumulantSequence& k, int n);

} // namespace cskit
