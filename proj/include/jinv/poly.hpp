#pragma once

// Dense univariate polynomial arithmetic with exact integer coefficients.
// Every identity in this library bottoms out here, so all operations are
// exact: no floating point, no modular shortcuts, no silent overflow (the
// default coefficient type has arbitrary precision).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jinv/errors.hpp"

namespace jinv {

using BigInt = boost::multiprecision::cpp_int;

// Canonical form: coeffs()[i] is the coefficient of t^i, the leading
// coefficient is nonzero, and the zero polynomial is the empty sequence.
template <class Coeff = BigInt>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Coeff> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<Coeff> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly constant(Coeff c) {
        Poly p;
        p.coeffs_.push_back(std::move(c));
        p.trim();
        return p;
    }

    static Poly one() { return constant(Coeff(1)); }

    // c * t^e
    static Poly monomial(std::size_t e, Coeff c = Coeff(1)) {
        Poly p;
        if (c != 0) {
            p.coeffs_.assign(e + 1, Coeff(0));
            p.coeffs_[e] = std::move(c);
        }
        return p;
    }

    // t^a - 1
    static Poly power_minus_one(std::size_t a) {
        if (a == 0) return Poly();
        Poly p;
        p.coeffs_.assign(a + 1, Coeff(0));
        p.coeffs_[0] = Coeff(-1);
        p.coeffs_[a] = Coeff(1);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is not defined; callers check is_zero().
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    Coeff coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
    }

    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    const Coeff& leading() const { return coeffs_.back(); }

    bool operator==(const Poly&) const = default;

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        r += o;
        return r;
    }

    Poly operator-(const Poly& o) const {
        Poly r = *this;
        r -= o;
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        // Convolve from the factor with the smaller support; geometric
        // factors like t^a - 1 are huge but have two terms.
        const Poly& a = nonzero_count() <= o.nonzero_count() ? *this : o;
        const Poly& b = nonzero_count() <= o.nonzero_count() ? o : *this;
        std::vector<Coeff> out(coeffs_.size() + o.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Exact evaluation (Horner).
    Coeff eval(const Coeff& x) const {
        Coeff acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Coeff operator()(const Coeff& x) const { return eval(x); }

    // coefficient i equals coefficient (deg - i); true for the zero polynomial
    bool is_palindromic() const {
        for (std::size_t i = 0, j = coeffs_.size(); i < j; ++i)
            if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
        return true;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Coeff& c = coeffs_[i];
            if (c == 0) continue;
            Coeff a = c < 0 ? Coeff(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || i == 0) os << a;
            if (i > 0) {
                if (a != 1) os << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const Coeff& c : coeffs_)
            if (c != 0) ++n;
        return n;
    }

    std::vector<Coeff> coeffs_;
};

using IntPoly = Poly<BigInt>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const Poly<Coeff>& p) {
    return os << p.to_string();
}

// Exact quotient: returns r with divisor * r == dividend. Long division over
// the coefficient ring, failing fast on the first fractional coefficient
// rather than computing a pseudo-remainder.
template <class Coeff>
Poly<Coeff> exact_div(const Poly<Coeff>& dividend, const Poly<Coeff>& divisor) {
    if (divisor.is_zero()) throw InvalidInputError("exact_div: division by the zero polynomial");
    if (dividend.is_zero()) return Poly<Coeff>();
    if (dividend.degree() < divisor.degree())
        throw NotDivisibleError("exact_div: dividend degree below divisor degree",
                                dividend.to_string(), divisor.to_string());

    const Coeff& lead = divisor.leading();
    std::vector<Coeff> rem(dividend.coeffs());
    std::vector<Coeff> quot(dividend.degree() - divisor.degree() + 1, Coeff(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Coeff c = rem[divisor.degree() + k];
        if (c == 0) continue;
        if (c % lead != 0)
            throw NotDivisibleError("exact_div: fractional coefficient at t^" +
                                        std::to_string(divisor.degree() + k),
                                    dividend.to_string(), divisor.to_string());
        Coeff q = c / lead;
        quot[k] = q;
        for (std::size_t i = 0; i < divisor.coeffs().size(); ++i) {
            if (divisor.coeffs()[i] == 0) continue;
            rem[i + k] -= q * divisor.coeffs()[i];
        }
    }
    for (const Coeff& c : rem)
        if (c != 0)
            throw NotDivisibleError("exact_div: nonzero remainder", dividend.to_string(),
                                    divisor.to_string());
    return Poly<Coeff>(std::move(quot));
}

// (t^a - 1) / (t^b - 1) = 1 + t^b + t^{2b} + ... + t^{a-b}; requires b | a.
template <class Coeff = BigInt>
Poly<Coeff> geom_quotient(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw InvalidInputError("geom_quotient: arguments must be positive");
    if (a % b != 0)
        throw NotDivisibleError("geom_quotient: " + std::to_string(b) + " does not divide " +
                                    std::to_string(a),
                                "t^" + std::to_string(a) + " - 1",
                                "t^" + std::to_string(b) + " - 1");
    std::vector<Coeff> cs(a - b + 1, Coeff(0));
    for (std::uint64_t i = 0; i <= a - b; i += b) cs[i] = Coeff(1);
    return Poly<Coeff>(std::move(cs));
}

}  // namespace jinv
