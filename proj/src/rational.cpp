#include "dmorse/rational.hpp"

#include <cctype>

namespace dmorse {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
    {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

}   // namespace

std::optional<Rational> parse_rational(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+'))
    {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos)
    {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return std::nullopt;
        mpz_class d(std::string(den), 10);
        if (d == 0)
            return std::nullopt;
        value = Rational(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    }
    else if (auto dot = text.find('.'); dot != std::string_view::npos)
    {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            return std::nullopt;
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        value = Rational(mpz_class(digits, 10), den);
        value.canonicalize();
    }
    else
    {
        if (!all_digits(text))
            return std::nullopt;
        value = Rational(mpz_class(std::string(text), 10));
    }
    if (negative)
        value = -value;
    return value;
}

std::string to_string(const Rational& value)
{
    Rational v = value;
    v.canonicalize();
    if (v.get_den() == 1)
        return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double(const Rational& value)
{
    return value.get_d();
}

}   // namespace dmorse
