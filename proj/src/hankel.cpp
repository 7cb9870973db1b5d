#include "cskit/hankel.hpp"

#include <stdexcept>
#include <utility>

#include "cskit/errors.hpp"

namespace cskit {

namespace {

Integer lcm_int(const Integer& a, const Integer& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

// Bareiss fraction-free elimination with row pivoting. All interior
// divisions are exact; this is asserted rather than assumed so that any
// logic error surfaces as a loud failure instead of a wrong determinant.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (int col = 0; col + 1 < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                Integer num = a[col][col] * a[i][j] - a[i][col] * a[col][j];
                Integer q, r;
                boost::multiprecision::divide_qr(num, prev, q, r);
                if (r != 0) throw std::logic_error("inexact division in Bareiss elimination");
                a[i][j] = std::move(q);
            }
            a[i][col] = 0;
        }
        prev = a[col][col];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace

Rational exact_determinant(const std::vector<std::vector<Rational>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Integer den = 1;
    for (const auto& row : m)
        for (const auto& entry : row) den = lcm_int(den, denominator(entry));
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n),
                                        std::vector<Integer>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& e = m[i][j];
            a[i][j] = numerator(e) * (den / denominator(e));
        }
    Integer det = bareiss_determinant(std::move(a));
    Integer scale = 1;
    for (int i = 0; i < n; ++i) scale *= den;
    return Rational(det, scale);
}

HankelReport hankel_minors(const std::vector<Rational>& seq, int shift, int size) {
    if (shift < 0 || size < 1)
        throw Error(errc::InvalidInput, "hankel needs shift >= 0 and size >= 1");
    const int top = 2 * (size - 1) + shift;
    if (top >= static_cast<int>(seq.size()))
        throw Error(errc::InsufficientSequence,
                    "hankel of size " + std::to_string(size) + " with shift " +
                        std::to_string(shift) + " needs entries through index " +
                        std::to_string(top));
    HankelReport report;
    report.shift = shift;
    report.size = size;
    report.minors.reserve(static_cast<std::size_t>(size));
    for (int k = 1; k <= size; ++k) {
        std::vector<std::vector<Rational>> sub(static_cast<std::size_t>(k),
                                               std::vector<Rational>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                sub[i][j] = seq[static_cast<std::size_t>(i + j + shift)];
        report.minors.push_back(exact_determinant(sub));
    }
    report.verdict = psd_verdict(report.minors);
    return report;
}

PsdVerdict psd_verdict(const std::vector<Rational>& minors) {
    PsdVerdict v;
    for (std::size_t i = 0; i < minors.size(); ++i) {
        if (minors[i] < 0) {
            v.kind = PsdVerdict::Kind::Refuted;
            v.index = static_cast<int>(i);
            v.value = minors[i];
            return v;
        }
        if (minors[i] == 0) {
            v.kind = PsdVerdict::Kind::Degenerate;
            v.index = static_cast<int>(i);
            return v;
        }
    }
    return v;
}

} // namespace cskit
