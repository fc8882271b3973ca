#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ech {

// Exact arithmetic backend. All polynomial identities in this library are
// verified over Q(i); tolerances are reserved for the transcendental solves.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double to_double(const Rational& r);

// Complex number with exact rational real and imaginary parts.
struct ComplexQ {
    Rational re;
    Rational im;

    ComplexQ() = default;
    ComplexQ(Rational r) : re(std::move(r)) {}
    ComplexQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexQ(int r) : re(r) {}
    ComplexQ(int r, int i) : re(r), im(i) {}
    ComplexQ(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ComplexQ conj() const { return {re, -im}; }
    // |z|^2, exact.
    Rational norm_sq() const { return re * re + im * im; }

    ComplexQ& operator+=(const ComplexQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexQ& operator-=(const ComplexQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ComplexQ& operator*=(const ComplexQ& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    ComplexQ& operator/=(const ComplexQ& o);

    friend ComplexQ operator+(ComplexQ a, const ComplexQ& b) { return a += b; }
    friend ComplexQ operator-(ComplexQ a, const ComplexQ& b) { return a -= b; }
    friend ComplexQ operator*(ComplexQ a, const ComplexQ& b) { return a *= b; }
    friend ComplexQ operator/(ComplexQ a, const ComplexQ& b) { return a /= b; }
    friend ComplexQ operator-(const ComplexQ& a) { return {-a.re, -a.im}; }
    friend bool operator==(const ComplexQ& a, const ComplexQ& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexQ& a, const ComplexQ& b) { return !(a == b); }
};

ComplexQ pow_int(ComplexQ base, unsigned exp);

std::complex<double> to_complex(const ComplexQ& z);

// Text form "a/b" or "a/b+c/di"; real numbers drop the imaginary part.
std::string to_string(const Rational& r);
std::string to_string(const ComplexQ& z);

// Complex literal parser for CLI and JSON inputs. Accepts "a+bi" where each
// part is an integer, a rational "p/q", or a decimal like "-1.25" (converted
// exactly). "i", "-i", "2i" and purely real inputs are fine. Throws Error on
// malformed input.
ComplexQ parse_complex(const std::string& text);
Rational parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const ComplexQ& z);

}  // namespace ech
