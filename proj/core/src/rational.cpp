#include "martex/rational.hpp"

#include "martex/error.hpp"

#include <cctype>
#include <ostream>

namespace martex {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error("parse", "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("arith", "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    // strip surrounding blanks
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw Error("parse", "empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.erase(s.begin());
    }

    auto fail = [&] { throw Error("parse", "bad rational literal '" + std::string(text) + "'"); };

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        mpz_class n(num), d(den);
        if (d == 0) fail();
        value = mpq_class(n, d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || !all_digits(whole) || !all_digits(frac)) fail();
        mpz_class scale(1);
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class n = mpz_class(whole) * scale + mpz_class(frac);
        value = mpq_class(n, scale);
    } else {
        if (!all_digits(s)) fail();
        value = mpq_class(mpz_class(s));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(std::move(value));
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

size_t Rational::hash() const {
    // FNV over the canonical text; rationals are canonical so this is stable.
    std::string s = str();
    size_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace martex
