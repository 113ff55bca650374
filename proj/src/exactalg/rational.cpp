#include "branchdiv/exactalg/rational.hpp"

#include <cctype>

namespace branchdiv {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    Integer z(std::string(s), 10);
    return neg ? Integer(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty number");
    const std::string original(text);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_s = text.substr(slash + 1);
        if (!all_digits(den_s)) throw std::invalid_argument("malformed rational '" + original + "'");
        Integer den(std::string(den_s), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        Integer ex = parse_integer(text.substr(e + 1));
        if (!ex.fits_slong_p() || abs(ex) > 4096) throw std::invalid_argument("exponent out of range in '" + original + "'");
        exponent = ex.get_si();
        text = text.substr(0, e);
    }

    bool neg = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        neg = text[0] == '-';
        text.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed decimal '" + original + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(text)) throw std::invalid_argument("malformed number '" + original + "'");
        digits = std::string(text);
    }
    Integer mant(digits, 10);
    if (neg) mant = -mant;
    long shift = exponent - frac_len;
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift < 0 ? Rational(mant, p10) : Rational(mant * p10);
    q.canonicalize();
    return q;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace branchdiv
