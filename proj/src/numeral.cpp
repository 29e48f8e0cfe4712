#include <susa/numeral.hpp>

#include <cctype>

namespace susa {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_group(const std::string& group, const std::string& whole) {
    if (group.empty())
        throw Error(ErrorCode::MalformedSeparators,
                    "empty digit group in '" + whole + "'");
    for (char ch : group)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error(ErrorCode::MalformedSeparators,
                        "unexpected character '" + std::string(1, ch) + "' in '" + whole + "'");
    if (group.size() > 2 || std::stoi(group) > 59)
        throw Error(ErrorCode::DigitOutOfRange,
                    "group '" + group + "' is not in 0..59 in '" + whole + "'");
    return std::stoi(group);
}

std::string render(const std::vector<int>& integer_digits,
                   const std::vector<int>& fraction_digits,
                   bool no_semicolon_integer_style) {
    std::string s;
    for (std::size_t i = 0; i < integer_digits.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(integer_digits[i]);
    }
    if (!fraction_digits.empty()) {
        s += ';';
        for (std::size_t i = 0; i < fraction_digits.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(fraction_digits[i]);
        }
    } else if (!no_semicolon_integer_style) {
        s += ";0";
    }
    return s;
}

} // namespace

Rational Numeral::value() const {
    BigInt ip = 0;
    for (int g : integer_digits)
        ip = ip * 60 + g;
    Rational v(ip);
    Rational place(1);
    const Rational sixtieth(1, 60);
    for (int g : fraction_digits) {
        place *= sixtieth;
        v += Rational(g) * place;
    }
    return v;
}

Numeral parse_numeral_parts(const std::string& text) {
    if (text.empty())
        throw Error(ErrorCode::EmptyInput, "empty numeral");
    const auto halves = split(text, ';');
    if (halves.size() > 2)
        throw Error(ErrorCode::MalformedSeparators, "more than one ';' in '" + text + "'");
    Numeral n;
    for (const auto& group : split(halves[0], ','))
        n.integer_digits.push_back(parse_group(group, text));
    if (halves.size() == 2)
        for (const auto& group : split(halves[1], ','))
            n.fraction_digits.push_back(parse_group(group, text));
    n.canonical = (format_numeral(n.value()) == text);
    return n;
}

Rational parse_numeral(const std::string& text) {
    return parse_numeral_parts(text).value();
}

std::string format_numeral(const Rational& value, bool no_semicolon_integer_style) {
    if (value.is_negative())
        throw Error(ErrorCode::NegativeValue, "cannot render " + value.to_string());
    if (!value.is_zero() && !is_regular(value))
        throw Error(ErrorCode::NonRegular,
                    value.to_string() + " has no finite sexagesimal expansion");

    std::vector<int> integer_digits;
    BigInt ip = value.num() / value.den();
    if (ip == 0) {
        integer_digits.push_back(0);
    } else {
        while (ip > 0) {
            integer_digits.insert(integer_digits.begin(), static_cast<int>(ip % 60));
            ip /= 60;
        }
    }

    // Long division by the denominator; terminates because den | 60^k.
    std::vector<int> fraction_digits;
    BigInt rem = value.num() % value.den();
    while (rem != 0) {
        rem *= 60;
        fraction_digits.push_back(static_cast<int>(rem / value.den()));
        rem %= value.den();
    }
    return render(integer_digits, fraction_digits, no_semicolon_integer_style);
}

std::string format_value(const Rational& value) {
    if (value.is_negative())
        return "-" + format_value(-value);
    if (value.is_zero() || is_regular(value))
        return format_numeral(value);
    return value.to_string();
}

Rational parse_value(const std::string& text) {
    if (text.find('/') != std::string::npos || (!text.empty() && text[0] == '-'))
        return Rational::from_string(text);
    return parse_numeral(text);
}

} // namespace susa
