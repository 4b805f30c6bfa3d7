#include "linrank/rational.hpp"

#include <cctype>

namespace linrank {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::optional<Integer> parse_integer(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (!all_digits(body))
        return std::nullopt;
    Integer z(std::string(body), 10);
    if (text.front() == '-')
        z = -z;
    return z;
}

std::optional<Rational> parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto z = parse_integer(text);
        if (!z)
            return std::nullopt;
        return Rational(*z);
    }
    auto num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!num || !all_digits(den_text))
        return std::nullopt;
    Integer den(std::string(den_text), 10);
    if (den == 0)
        return std::nullopt;
    Rational q(*num, den);
    q.canonicalize();
    return q;
}

} // namespace linrank
