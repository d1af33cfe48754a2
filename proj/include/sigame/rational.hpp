#ifndef SIGAME_RATIONAL_HPP
#define SIGAME_RATIONAL_HPP

#include <sigame/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sigame {

/// Exact arbitrary-precision rational; always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;

namespace detail {

inline bool parse_integer_text(std::string_view s, BigInt& out)
{
	if (s.empty())
	{
		return false;
	}
	std::size_t pos = 0;
	if (s[0] == '+' || s[0] == '-')
	{
		pos = 1;
	}
	if (pos == s.size())
	{
		return false;
	}
	for (std::size_t i = pos; i < s.size(); ++i)
	{
		if (s[i] < '0' || s[i] > '9')
		{
			return false;
		}
	}
	// cpp_int does not accept a leading '+'
	out = BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
	return true;
}

inline std::string_view trim(std::string_view s)
{
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
	{
		s.remove_prefix(1);
	}
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
	{
		s.remove_suffix(1);
	}
	return s;
}

} // namespace detail

/// Parses "a", "-a" or "a/b". Throws parse_error on malformed text or a zero
/// denominator.
inline Rational parse_rational(std::string_view text)
{
	const std::string_view s = detail::trim(text);
	const auto slash = s.find('/');
	BigInt num;
	BigInt den{1};
	if (slash == std::string_view::npos)
	{
		if (!detail::parse_integer_text(s, num))
		{
			throw parse_error("malformed rational '" + std::string(text) + "'");
		}
	}
	else
	{
		if (!detail::parse_integer_text(detail::trim(s.substr(0, slash)), num)
			|| !detail::parse_integer_text(detail::trim(s.substr(slash + 1)), den))
		{
			throw parse_error("malformed rational '" + std::string(text) + "'");
		}
		if (den == 0)
		{
			throw parse_error("zero denominator in '" + std::string(text) + "'");
		}
	}
	return Rational(num, den);
}

/// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& q)
{
	return q.str();
}

inline bool is_integer(const Rational& q)
{
	return boost::multiprecision::denominator(q) == 1;
}

/// Decimal rendering with a fixed number of fractional digits (truncated
/// toward zero); for display only.
inline std::string to_decimal(const Rational& q, unsigned digits = 6)
{
	const BigInt num = boost::multiprecision::numerator(q);
	const BigInt den = boost::multiprecision::denominator(q);
	const bool neg = num < 0;
	const BigInt a = neg ? BigInt(-num) : num;
	BigInt scale{1};
	for (unsigned i = 0; i < digits; ++i)
	{
		scale *= 10;
	}
	const BigInt scaled = (a * scale) / den;
	const BigInt whole = scaled / scale;
	std::string frac = BigInt(scaled % scale).str();
	if (frac.size() < digits)
	{
		frac.insert(0, digits - frac.size(), '0');
	}
	std::string out = neg && scaled != 0 ? "-" : "";
	out += whole.str();
	if (digits > 0)
	{
		out += "." + frac;
	}
	return out;
}

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
	return boost::multiprecision::lcm(a, b);
}

} // namespace sigame

#endif // SIGAME_RATIONAL_HPP
