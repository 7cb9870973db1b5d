#pragma once

#include <vector>

#include "cskit/rational.hpp"

namespace cskit {

// Classification of a list of leading principal minors. Indices are 0-based
// into the minors list (index i is the (i+1)x(i+1) minor).
struct PsdVerdict {
    enum class Kind { Positive, Refuted, Degenerate };
    Kind kind = Kind::Positive;
    int index = -1;      // first offending minor for Refuted/Degenerate
    Rational value = 0;  // its exact value (Refuted only)

    bool operator==(const PsdVerdict& o) const {
        return kind == o.kind && index == o.index && value == o.value;
    }
};

// Leading principal minors of the Hankel matrix H[i][j] = s_{i+j+shift},
// together with the positivity verdict over them.
struct HankelReport {
    int shift = 0;
    int size = 0;
    std::vector<Rational> minors;
    PsdVerdict verdict;
};

// Exact minors via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix; survives zero pivots by row exchange.
// Needs sequence entries up to index 2(size-1)+shift.
HankelReport hankel_minors(const std::vector<Rational>& seq, int shift, int size);

// POSITIVE if all minors > 0; REFUTED at the first negative minor;
// DEGENERATE if a zero minor appears before any negative one. A zero minor
// is not a refutation: finitely atomic measures produce exactly that.
PsdVerdict psd_verdict(const std::vector<Rational>& minors);

// Exact determinant of a general square rational matrix (used for Gram and
// Hankel checks alike).
Rational exact_determinant(const std::vector<std::vector<Rational>>& a);

} // namespace cskit
