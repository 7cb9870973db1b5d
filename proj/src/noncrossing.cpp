#include "cskit/noncrossing.hpp"

#include "cskit/errors.hpp"

namespace cskit {

namespace {

class Enumerator {
public:
    explicit Enumerator(const FreeCumulantSequence& k) : k_(k) {}

    // Sum of prod kappa_{|B|} over all non-crossing partitions of an
    // interval of `len` points. The first block holds the leftmost point;
    // the stretches between its consecutive elements are filled
    // independently, which is exactly the non-crossing condition.
    Rational interval(int len) {
        if (len == 0) return 1;
        total_ = 0;
        extend(len, 0, 1, Rational(1));
        return total_;
    }

private:
    // last: position of the newest first-block element; size: current first
    // block size; acc: product of kappa values from the gaps already filled.
    void extend(int len, int last, int size, const Rational& acc) {
        // close the first block here; the tail past `last` is one more gap
        total_ += acc * k_.kappa(size) * interval_memoless(len - 1 - last);
        for (int q = last + 1; q < len; ++q)
            extend(len, q, size + 1, acc * interval_memoless(q - last - 1));
    }

    // Fresh sub-enumeration; no caching anywhere, this oracle is meant to be
    // dumb and independent of the series algebra.
    Rational interval_memoless(int len) {
        Enumerator sub(k_);
        return sub.interval(len);
    }

    const FreeCumulantSequence& k_;
    Rational total_ = 0;
};

} // namespace

Rational moments_via_noncrossing(const FreeCumulantSequence& k, int n) {
    if (n < 0) throw Error(errc::InvalidInput, "negative moment index");
    if (n == 0) return 1;
    if (n > kNonCrossingCap)
        throw Error(errc::OracleCapExceeded,
                    "non-crossing oracle capped at n = " + std::to_string(kNonCrossingCap));
    if (k.order() < n)
        throw Error(errc::InsufficientSequence,
                    "oracle needs cumulants through order " + std::to_string(n));
    Enumerator e(k);
    return e.interval(n);
}

} // namespace cskit
