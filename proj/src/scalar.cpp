#include "dkc/scalar.hpp"

#include <cctype>

namespace dkc {

Scalar make_scalar(long num, long den)
{
    if (den == 0)
        throw Error("make_scalar: zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

std::string to_string(const Scalar& s)
{
    if (s.get_den() == 1)
        return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

namespace {

Integer parse_integer(std::string_view text)
{
    if (text.empty())
        throw Error("parse_scalar: empty integer");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw Error("parse_scalar: sign without digits");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error("parse_scalar: bad digit in '" + std::string(text) + "'");
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Scalar(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw Error("parse_scalar: zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

std::size_t bit_size(const Integer& z)
{
    return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t bit_size(const Scalar& s)
{
    return bit_size(s.get_num()) + bit_size(s.get_den());
}

}  // namespace dkc
