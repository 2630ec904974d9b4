#include "maxexp/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace maxexp {

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw InputError("empty coordinate string");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_plain_integer(num) || !is_plain_integer(den))
            throw InputError("bad rational literal: " + text);
        Rat r;
        if (r.set_str(text, 10) != 0) throw InputError("bad rational literal: " + text);
        if (r.get_den() == 0) throw InputError("zero denominator: " + text);
        r.canonicalize();
        return r;
    }

    auto dot = text.find('.');
    if (dot == std::string::npos) {
        if (!is_plain_integer(text)) throw InputError("bad coordinate literal: " + text);
        return Rat(text);
    }

    // Decimal: sign, integer part, fractional part. Converted exactly.
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
    if (head.empty()) head = "0";
    if (!is_plain_integer(head) || frac.empty() || !is_plain_integer(frac) ||
        frac[0] == '+' || frac[0] == '-')
        throw InputError("bad decimal literal: " + text);

    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class numer = mpz_class(head) * scale + mpz_class(frac);
    Rat r(numer, scale);
    r.canonicalize();
    return negative ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_str();
}

long floor_rat(const Rat& value) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw InputError("coordinate out of supported range");
    return q.get_si();
}

long ceil_rat(const Rat& value) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw InputError("coordinate out of supported range");
    return q.get_si();
}

}  // namespace maxexp
