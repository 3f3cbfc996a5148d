#include "core/rational.h"

#include "core/errors.h"

#include <cctype>

namespace tropgerm {

namespace {

// Validates optional sign + digits and returns the integer; GMP's own
// parser rejects an explicit leading '+', so strip it here.
Int parse_int_text(const std::string& s, const std::string& whole) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) throw InputError("malformed rational: '" + whole + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw InputError("malformed rational: '" + whole + "'");
        }
    }
    return Int(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_int_text(text, text));
    }
    const Int num = parse_int_text(text.substr(0, slash), text);
    const Int den = parse_int_text(text.substr(slash + 1), text);
    if (den == 0) {
        throw InputError("zero denominator in rational: '" + text + "'");
    }
    return Rat(num, den);
}

std::string format_rat(const Rat& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int rat_floor(const Rat& value) {
    Int q = numerator(value) / denominator(value);
    // Integer division truncates toward zero; adjust for negatives.
    if (q * denominator(value) != numerator(value) && value < 0) q -= 1;
    return q;
}

Int rat_ceil(const Rat& value) {
    return -rat_floor(-value);
}

}  // namespace tropgerm
