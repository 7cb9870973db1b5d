#include "cskit/jacobi.hpp"

#include "cskit/errors.hpp"

namespace cskit {

Rational apply_moment_functional(const MomentSequence& m, const Polynomial& p) {
    if (p.degree() > m.order())
        throw Error(errc::InsufficientMoments,
                    "functional needs moments through order " + std::to_string(p.degree()));
    Rational acc = 0;
    for (int k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * m[k];
    return acc;
}

JacobiCoefficients jacobi_from_moments(const MomentSequence& m) {
    JacobiCoefficients jc;
    const int N = m.order();
    Polynomial prev;                          // p_{-1} = 0
    Polynomial cur = Polynomial::constant(1); // p_0
    Rational norm = 1;                        // <p_0, p_0> = m_0
    const Polynomial x = Polynomial::x();
    for (int n = 0;; ++n) {
        if (2 * n + 1 > N) break; // b_n needs moments through 2n+1
        Rational bn = apply_moment_functional(m, x * cur * cur) / norm;
        jc.b.push_back(bn);
        Polynomial next = (x - Polynomial::constant(bn)) * cur;
        if (n > 0) next = next - jc.c.back() * prev;
        if (2 * n + 2 > N) break; // the next norm needs moments through 2n+2
        Rational next_norm = apply_moment_functional(m, next * next);
        if (next_norm < 0)
            throw Error(errc::NotAMomentSequence,
                        "negative norm at degree " + std::to_string(n + 1));
        Rational cn = next_norm / norm;
        jc.c.push_back(cn);
        if (cn == 0) {
            jc.terminated = true; // finite support: the recursion ends here
            break;
        }
        prev = cur;
        cur = next;
        norm = next_norm;
    }
    return jc;
}

} // namespace cskit
