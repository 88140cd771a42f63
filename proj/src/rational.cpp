#include "recur/rational.hpp"

#include <cctype>

namespace recur {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator) {
    if (denominator.is_zero()) {
        throw BadParam("rational denominator must be nonzero");
    }
    if (denominator.sign() < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    v_ = boost::multiprecision::cpp_rational(std::move(numerator), std::move(denominator));
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num_part = body;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
        throw ParseError("bad rational '" + std::string(text) + "': expected \"p\" or \"p/q\"");
    }
    BigInt num{std::string(num_part)};
    BigInt den = has_den ? BigInt{std::string(den_part)} : BigInt(1);
    if (den.is_zero()) {
        throw ParseError("bad rational '" + std::string(text) + "': zero denominator");
    }
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    return v_.str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    v_ += rhs.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    v_ -= rhs.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    v_ *= rhs.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw BadParam("rational division by zero");
    }
    v_ /= rhs.v_;
    return *this;
}

}  // namespace recur
