#ifndef SIGAME_IO_HPP
#define SIGAME_IO_HPP

#include <sigame/coretools.hpp>
#include <sigame/errors.hpp>
#include <sigame/model.hpp>
#include <sigame/rational.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

/**
 * \file sigame/io.hpp
 *
 * JSON reading and writing of situations and balanced collections.
 *
 * Situation document:
 *
 *     {
 *       "players":  ["P1", "P2"],
 *       "periods":  3,
 *       "demand":   [[1, 3, 1], [2, 1, 1]],
 *       "setup":    [[1, 1, 5], [1, 1, 5]],
 *       "holding":  ...,
 *       "backlog":  ...,
 *       "purchase": ...
 *     }
 *
 * Costs are integers or "a/b" strings; demand must be integral.
 */

namespace sigame::io {

using json = nlohmann::json;

/// Integer numbers as-is, other rationals as "a/b".
inline json to_json(const Rational& q)
{
	if (is_integer(q))
	{
		const BigInt num = boost::multiprecision::numerator(q);
		if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
		{
			return static_cast<std::int64_t>(num);
		}
	}
	return to_string(q);
}

inline json to_json(const RationalVector& v)
{
	json out = json::array();
	for (const auto& q : v)
	{
		out.push_back(to_json(q));
	}
	return out;
}

inline Rational rational_from_json(const json& j, const std::string& where)
{
	if (j.is_number_integer())
	{
		return Rational(j.get<std::int64_t>());
	}
	if (j.is_string())
	{
		try
		{
			return parse_rational(j.get<std::string>());
		}
		catch (const parse_error& e)
		{
			throw parse_error(where + ": " + e.what());
		}
	}
	if (j.is_number_float())
	{
		throw parse_error(where + ": write non-integral values as \"a/b\" strings");
	}
	throw parse_error(where + ": expected an integer or an \"a/b\" string");
}

inline json coalition_to_json(Coalition s)
{
	json members = json::array();
	for (std::size_t i : s.members())
	{
		members.push_back(i + 1);
	}
	return members;
}

/// 1-based member list.
inline Coalition coalition_from_json(const json& j, std::size_t n, const std::string& where)
{
	if (!j.is_array() || j.empty())
	{
		throw schema_error(where + ": coalition must be a nonempty array of player numbers");
	}
	Coalition::mask_type mask = 0;
	for (const auto& v : j)
	{
		if (!v.is_number_integer())
		{
			throw schema_error(where + ": player numbers must be integers");
		}
		const auto p = v.get<std::int64_t>();
		if (p < 1 || static_cast<std::size_t>(p) > n)
		{
			throw schema_error(where + ": player " + std::to_string(p) + " out of range");
		}
		mask |= Coalition::mask_type{1} << (p - 1);
	}
	return Coalition(mask);
}

namespace detail {

inline const json& field(const json& doc, const char* name)
{
	if (!doc.contains(name))
	{
		throw schema_error(std::string("missing field '") + name + "'");
	}
	return doc.at(name);
}

inline void check_matrix_shape(const json& m, const char* name, std::size_t n, std::size_t periods)
{
	if (!m.is_array() || m.size() != n)
	{
		throw schema_error(std::string("'") + name + "' must have one row per player (" + std::to_string(n) + ")");
	}
	for (std::size_t i = 0; i < n; ++i)
	{
		if (!m[i].is_array() || m[i].size() != periods)
		{
			throw schema_error(std::string("'") + name + "[" + std::to_string(i) + "]' must have "
							   + std::to_string(periods) + " entries");
		}
	}
}

inline RationalMatrix cost_matrix(const json& doc, const char* name, std::size_t n, std::size_t periods)
{
	const json& m = field(doc, name);
	check_matrix_shape(m, name, n, periods);
	RationalMatrix out(n, RationalVector(periods));
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t t = 0; t < periods; ++t)
		{
			const std::string where = std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(t) + "]";
			out[i][t] = rational_from_json(m[i][t], where);
			if (out[i][t] < 0)
			{
				throw domain_error(where + ": costs must be nonnegative");
			}
		}
	}
	return out;
}

} // namespace detail

inline SISituation situation_from_json(const json& doc)
{
	if (!doc.is_object())
	{
		throw schema_error("situation must be a JSON object");
	}
	const json& players = detail::field(doc, "players");
	if (!players.is_array() || players.empty())
	{
		throw schema_error("'players' must be a nonempty array of names");
	}
	std::vector<std::string> names;
	for (const auto& p : players)
	{
		if (!p.is_string())
		{
			throw schema_error("player names must be strings");
		}
		names.push_back(p.get<std::string>());
	}
	const json& periods_field = detail::field(doc, "periods");
	if (!periods_field.is_number_integer() || periods_field.get<std::int64_t>() < 1)
	{
		throw schema_error("'periods' must be a positive integer");
	}
	const auto periods = static_cast<std::size_t>(periods_field.get<std::int64_t>());
	const std::size_t n = names.size();

	const json& dm = detail::field(doc, "demand");
	detail::check_matrix_shape(dm, "demand", n, periods);
	DemandMatrix demand(n, DemandVector(periods));
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t t = 0; t < periods; ++t)
		{
			const std::string where = "demand[" + std::to_string(i) + "][" + std::to_string(t) + "]";
			const Rational q = rational_from_json(dm[i][t], where);
			if (!is_integer(q))
			{
				throw domain_error(where + ": demand must be an integer");
			}
			if (q < 0)
			{
				throw domain_error(where + ": demand must be nonnegative");
			}
			demand[i][t] = static_cast<Demand>(boost::multiprecision::numerator(q));
		}
	}
	auto setup = detail::cost_matrix(doc, "setup", n, periods);
	auto holding = detail::cost_matrix(doc, "holding", n, periods);
	auto backlog = detail::cost_matrix(doc, "backlog", n, periods);
	auto purchase = detail::cost_matrix(doc, "purchase", n, periods);
	return SISituation(std::move(demand), std::move(setup), std::move(holding), std::move(backlog),
					   std::move(purchase), std::move(names));
}

inline json situation_to_json(const SISituation& s)
{
	json doc;
	doc["players"] = s.names();
	doc["periods"] = s.periods();
	doc["demand"] = s.demand();
	auto matrix = [](const RationalMatrix& m) {
		json out = json::array();
		for (const auto& row : m)
		{
			out.push_back(to_json(row));
		}
		return out;
	};
	doc["setup"] = matrix(s.setup());
	doc["holding"] = matrix(s.holding());
	doc["backlog"] = matrix(s.backlog());
	doc["purchase"] = matrix(s.purchase());
	return doc;
}

inline json parse_json_text(const std::string& text, const std::string& source)
{
	try
	{
		return json::parse(text);
	}
	catch (const json::parse_error& e)
	{
		throw parse_error(source + ": " + e.what());
	}
}

inline std::string read_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw parse_error("cannot read '" + path + "'");
	}
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

inline SISituation parse_situation(const std::string& path)
{
	return situation_from_json(parse_json_text(read_file(path), path));
}

/// {"collection": [{"coalition": [1,2], "weight": "1/3"}, ...]}
inline BalancedCollection collection_from_json(const json& doc, std::size_t n)
{
	if (!doc.is_object() || !doc.contains("collection") || !doc.at("collection").is_array())
	{
		throw schema_error("collection document needs a 'collection' array");
	}
	BalancedCollection out;
	std::size_t k = 0;
	for (const auto& item : doc.at("collection"))
	{
		const std::string where = "collection[" + std::to_string(k++) + "]";
		if (!item.is_object())
		{
			throw schema_error(where + ": expected an object");
		}
		const Coalition s = coalition_from_json(detail::field(item, "coalition"), n, where + ".coalition");
		const Rational w = rational_from_json(detail::field(item, "weight"), where + ".weight");
		if (w < 0)
		{
			throw domain_error(where + ".weight: weights must be nonnegative");
		}
		out.items.emplace_back(s, w);
	}
	return out;
}

inline json collection_to_json(const BalancedCollection& c)
{
	json items = json::array();
	for (const auto& [s, w] : c.items)
	{
		items.push_back({{"coalition", coalition_to_json(s)}, {"weight", to_json(w)}});
	}
	return json{{"collection", items}};
}

} // namespace sigame::io

#endif // SIGAME_IO_HPP
