#include "ech/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "ech/errors.hpp"

namespace ech {

double to_double(const Rational& r) { return r.convert_to<double>(); }

ComplexQ& ComplexQ::operator/=(const ComplexQ& o) {
    Rational n = o.norm_sq();
    if (n == 0) throw DegenerateInput("complex division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
}

ComplexQ pow_int(ComplexQ base, unsigned exp) {
    ComplexQ out{1};
    while (exp > 0) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

std::complex<double> to_complex(const ComplexQ& z) {
    return {to_double(z.re), to_double(z.im)};
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const ComplexQ& z) {
    if (z.im == 0) return to_string(z.re);
    std::string out = to_string(z.re);
    if (z.im > 0) out += "+";
    out += to_string(z.im) + "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const ComplexQ& z) {
    return os << to_string(z);
}

namespace {

// One signed real literal: integer, "p/q", or decimal. Consumes from pos.
Rational parse_real_part(const std::string& s, size_t& pos) {
    bool negative = false;
    bool signed_literal = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        signed_literal = true;
        ++pos;
    }
    size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string int_digits = s.substr(digits_begin, pos - digits_begin);

    Rational magnitude;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (den_begin == pos || int_digits.empty())
            throw Error("malformed rational in '" + s + "'");
        BigInt den(s.substr(den_begin, pos - den_begin));
        if (den == 0) throw Error("zero denominator in '" + s + "'");
        magnitude = Rational(BigInt(int_digits), den);
    } else if (pos < s.size() && s[pos] == '.') {
        ++pos;
        size_t frac_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string digits = int_digits + s.substr(frac_begin, pos - frac_begin);
        if (digits.empty()) throw Error("malformed decimal in '" + s + "'");
        BigInt den = 1;
        for (size_t k = frac_begin; k < pos; ++k) den *= 10;
        magnitude = Rational(BigInt(digits), den);
    } else if (int_digits.empty()) {
        // Bare sign (as in "+i"/"-i"): magnitude 1.
        if (!signed_literal) throw Error("expected number in '" + s + "'");
        magnitude = 1;
    } else {
        magnitude = Rational(BigInt(int_digits));
    }
    return negative ? -magnitude : magnitude;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    size_t pos = 0;
    Rational r = parse_real_part(text, pos);
    if (pos != text.size()) throw Error("trailing characters in rational '" + text + "'");
    return r;
}

ComplexQ parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error("empty complex literal");

    if (s == "i") return ComplexQ(0, 1);
    if (s == "-i") return ComplexQ(0, -1);
    if (s == "+i") return ComplexQ(0, 1);

    size_t pos = 0;
    Rational first = parse_real_part(s, pos);
    if (pos == s.size()) return ComplexQ(first);
    if (s[pos] == 'i') {
        if (pos + 1 != s.size()) throw Error("trailing characters in '" + text + "'");
        return ComplexQ(Rational(0), first);
    }
    // Second part must be the imaginary term.
    Rational second = parse_real_part(s, pos);
    if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size())
        throw Error("malformed complex literal '" + text + "'");
    return ComplexQ(first, second);
}

}  // namespace ech
