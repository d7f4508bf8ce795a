#include "polylight/rational.hpp"

namespace polylight {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(text);
            return Rat(num);
        }
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw std::invalid_argument("malformed rational");
        mpz_class num(ns), den(ds);
        return rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const Rat& r, int digits) {
    mpz_class num = r.get_num(), den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class ip = num / den;
    mpz_class rem = num % den;
    std::string out = (neg && (ip != 0 || rem != 0) ? "-" : "") + ip.get_str();
    if (digits <= 0) return out;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class frac = rem * scale / den;
    std::string fs = frac.get_str();
    if (static_cast<int>(fs.size()) < digits) fs.insert(0, digits - fs.size(), '0');
    // Trim trailing zeros but keep at least one digit.
    size_t last = fs.find_last_not_of('0');
    fs = (last == std::string::npos) ? "0" : fs.substr(0, last + 1);
    return out + "." + fs;
}

}  // namespace polylight
