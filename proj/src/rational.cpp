#include <susa/rational.hpp>

namespace susa {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const BigInt g = gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(const std::string& text) {
    if (text.empty())
        throw Error(ErrorCode::EmptyInput, "empty fraction literal");
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) -> BigInt {
        if (part.empty() || part == "-")
            throw Error(ErrorCode::MalformedSeparators, "bad integer in '" + text + "'");
        for (std::size_t i = (part[0] == '-' ? 1 : 0); i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw Error(ErrorCode::MalformedSeparators, "bad integer in '" + text + "'");
        return BigInt(part);
    };
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    if (text.find('/', slash + 1) != std::string::npos)
        throw Error(ErrorCode::MalformedSeparators, "multiple '/' in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1)
        s += "/" + den_.str();
    return s;
}

Rational operator+(const Rational& lhs, const Rational& rhs) {
    return Rational(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

Rational operator-(const Rational& lhs, const Rational& rhs) {
    return Rational(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

Rational operator*(const Rational& lhs, const Rational& rhs) {
    return Rational(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
    if (rhs.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero");
    return Rational(lhs.num_ * rhs.den_, lhs.den_ * rhs.num_);
}

Rational square(const Rational& v) {
    return v * v;
}

Rational reciprocal(const Rational& v) {
    if (v.is_zero())
        throw Error(ErrorCode::ZeroHasNoReciprocal, "reciprocal of zero");
    return Rational(v.den(), v.num());
}

BigInt isqrt(const BigInt& n) {
    if (n < 0)
        throw Error(ErrorCode::NegativeValue, "isqrt of negative integer");
    if (n < 2)
        return n;
    // Newton: start above the root, descend monotonically.
    BigInt x = BigInt(1) << (msb(n) / 2 + 1);
    while (true) {
        const BigInt y = (x + n / x) / 2;
        if (y >= x)
            return x;
        x = y;
    }
}

std::optional<Rational> sqrt_exact(const Rational& v) {
    if (v.is_negative())
        throw Error(ErrorCode::NegativeValue, "square root of negative value");
    const BigInt rn = isqrt(v.num());
    if (rn * rn != v.num())
        return std::nullopt;
    const BigInt rd = isqrt(v.den());
    if (rd * rd != v.den())
        return std::nullopt;
    return Rational(rn, rd);
}

bool is_regular(const Rational& v) {
    if (v.is_zero())
        throw Error(ErrorCode::ZeroIsNeitherRegularNorIrregular, "regularity of zero");
    BigInt d = v.den();
    for (int p : {2, 3, 5})
        while (d % p == 0)
            d /= p;
    return d == 1;
}

} // namespace susa
