#pragma once

#include <string>
#include <vector>

#include "cskit/rational.hpp"

namespace cskit {

// Polynomial in x, coefficients lowest degree first. Trailing zeros are
// stripped so degree() is honest; the zero polynomial is the empty list.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        std::vector<Rational> v(a.coeffs_);
        for (auto& t : v) t *= c;
        return Polynomial(std::move(v));
    }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k) s += ' ';
            s += coeffs_[k].str();
        }
        return s;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace cskit
