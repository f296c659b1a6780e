#pragma once

#include "rig/rational.hpp"

#include <ostream>

namespace rig {

/// Element of Q[i]: complex number with exact rational real and
/// imaginary parts. The coefficient field of the whole engine.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2, a nonnegative rational.
    Rational norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm2();
        if (n == 0) throw std::domain_error("division by zero in Q[i]");
        GaussianRational num = a * b.conj();
        return {num.re / n, num.im / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        os << z.re.get_str();
        if (z.im != 0) os << (z.im > 0 ? "+" : "") << z.im.get_str() << "i";
        return os;
    }
};

// Field helpers shared by the matrix templates. Rational and
// GaussianRational are the only two scalar types in play.
inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline Rational field_conj(const Rational& x) { return x; }
inline GaussianRational field_conj(const GaussianRational& x) { return x.conj(); }

}  // namespace rig
