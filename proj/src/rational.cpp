// SPDX-License-Identifier: Apache-2.0
#include "bellspace/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "bellspace/errors.hpp"

namespace bellspace {

Rat rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_exact(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite double cannot be a rational");
    return Rat(x); // mpq_class(double) is exact
}

Rat rationalize(double x, long den) {
    if (den <= 0) throw DomainError("rationalize: denominator must be positive");
    if (!std::isfinite(x)) throw DomainError("rationalize: non-finite input");
    const double scaled = x * static_cast<double>(den);
    if (std::abs(scaled) > 9.0e18) throw DomainError("rationalize: value out of range");
    Rat q(std::llround(scaled), den);
    q.canonicalize();
    return q;
}

double to_double(const Rat& q) { return q.get_d(); }

std::string rat_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_or_ratio(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    const bool neg = num < 0;
    if (neg) num = -num;
    // scale numerator by 10 until the denominator divides it, up to 9 digits
    mpz_class scaled = num;
    for (int digits = 1; digits <= 9; ++digits) {
        scaled *= 10;
        if (scaled % den == 0) {
            mpz_class whole = scaled / den;
            std::string s = whole.get_str();
            if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
            s.insert(s.size() - digits, ".");
            while (s.back() == '0') s.pop_back();
            if (s.back() == '.') s.pop_back();
            return neg ? "-" + s : s;
        }
    }
    return rat_string(q);
}

Rat parse_rat(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + s + "'");
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        const auto dot = s.find('.');
        if (dot == std::string::npos) {
            return Rat(mpz_class(s), 1);
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t frac = s.size() - dot - 1;
        if (frac == 0 || digits.empty()) throw ParseError("malformed decimal '" + s + "'");
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        Rat q(mpz_class(digits), den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal '" + s + "'");
    }
}

} // namespace bellspace
