#ifndef SIGAME_TESTS_SUPPORT_HPP
#define SIGAME_TESTS_SUPPORT_HPP

#include <sigame/io.hpp>
#include <sigame/sigame.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace sigame;

inline std::string data_path(const std::string& name)
{
	return std::string(SIGAME_TEST_DATA) + "/" + name;
}

inline SISituation load(const std::string& name)
{
	return io::parse_situation(data_path(name));
}

inline RationalVector rv(std::initializer_list<Rational> v)
{
	return RationalVector(v);
}

// ---- random instances ---------------------------------------------------

struct Shape
{
	std::size_t players = 3;
	std::size_t periods = 4;
	int cost_max = 20;
	int demand_max = 9;
	bool zero_setup = false;
	/// Probability that a demand entry is forced to zero.
	double zero_demand = 0.2;
};

inline SISituation random_situation(std::mt19937_64& rng, const Shape& shape)
{
	std::uniform_int_distribution<int> cost(0, shape.cost_max);
	std::uniform_int_distribution<int> qty(1, std::max(1, shape.demand_max));
	std::bernoulli_distribution zero(shape.zero_demand);
	const auto n = shape.players;
	const auto periods = shape.periods;
	DemandMatrix d(n, DemandVector(periods));
	RationalMatrix k(n, RationalVector(periods)), h = k, b = k, p = k;
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t t = 0; t < periods; ++t)
		{
			d[i][t] = zero(rng) ? 0 : qty(rng);
			k[i][t] = shape.zero_setup ? 0 : cost(rng);
			h[i][t] = cost(rng);
			b[i][t] = cost(rng);
			p[i][t] = cost(rng);
		}
	}
	return SISituation(std::move(d), std::move(k), std::move(h), std::move(b), std::move(p));
}

inline CoalitionCosts random_costs(std::mt19937_64& rng, std::size_t periods, int cost_max, int demand_max)
{
	Shape shape;
	shape.players = 1;
	shape.periods = periods;
	shape.cost_max = cost_max;
	shape.demand_max = demand_max;
	shape.zero_demand = 0.25;
	return coalition_costs(random_situation(rng, shape), Coalition::singleton(0));
}

/// Carrying costs dwarf setups, so every coalition orders in each period it
/// has demand; any player with demand in t then forces t.
inline SISituation consolidated_family(std::mt19937_64& rng, std::size_t n, std::size_t periods)
{
	std::uniform_int_distribution<int> setup(0, 5), price(1, 5), carry(20, 30), qty(0, 9);
	DemandMatrix d(n, DemandVector(periods));
	RationalMatrix k(n, RationalVector(periods)), h = k, b = k, p = k;
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t t = 0; t < periods; ++t)
		{
			d[i][t] = qty(rng);
			k[i][t] = setup(rng);
			h[i][t] = carry(rng);
			b[i][t] = carry(rng);
			p[i][t] = price(rng);
		}
	}
	return SISituation(std::move(d), std::move(k), std::move(h), std::move(b), std::move(p));
}

/// Same situation with every cost multiplied by f.
inline SISituation scaled(const SISituation& s, const Rational& f)
{
	auto scale = [&](RationalMatrix m) {
		for (auto& row : m)
		{
			for (auto& v : row)
			{
				v *= f;
			}
		}
		return m;
	};
	return SISituation(s.demand(), scale(s.setup()), scale(s.holding()), scale(s.backlog()), scale(s.purchase()));
}

// ---- independent oracles ------------------------------------------------
//
// Written from the definitions without touching the library's cost
// routines, so agreement is a genuine cross-check.

namespace oracle {

struct Pooled
{
	std::vector<std::int64_t> d;
	RationalVector k, h, b, p;
};

inline Pooled pool(const SISituation& s, Coalition c)
{
	const auto periods = s.periods();
	Pooled out{std::vector<std::int64_t>(periods, 0), RationalVector(periods), RationalVector(periods),
			   RationalVector(periods), RationalVector(periods)};
	bool first = true;
	for (std::size_t i = 0; i < s.players(); ++i)
	{
		if (((c.mask() >> i) & 1U) == 0)
		{
			continue;
		}
		for (std::size_t t = 0; t < periods; ++t)
		{
			out.d[t] += s.demand()[i][t];
			if (first)
			{
				out.k[t] = s.setup()[i][t];
				out.h[t] = s.holding()[i][t];
				out.b[t] = s.backlog()[i][t];
				out.p[t] = s.purchase()[i][t];
			}
			else
			{
				out.k[t] = std::min(out.k[t], s.setup()[i][t]);
				out.h[t] = std::min(out.h[t], s.holding()[i][t]);
				out.b[t] = std::min(out.b[t], s.backlog()[i][t]);
				out.p[t] = std::min(out.p[t], s.purchase()[i][t]);
			}
		}
		first = false;
	}
	return out;
}

/// Unit cost of serving period t from an order in period r, 0-based.
inline Rational unit(const Pooled& c, std::size_t r, std::size_t t)
{
	Rational v = c.p[r];
	for (std::size_t q = r; q < t; ++q)
	{
		v += c.h[q];
	}
	for (std::size_t q = t + 1; q <= r; ++q)
	{
		v += c.b[q];
	}
	return v;
}

/// Cost of a plan given as 1-based sources.
inline Rational plan_cost(const Pooled& c, const std::vector<int>& sources)
{
	Rational total = 0;
	std::vector<char> orders(c.d.size(), 0);
	for (std::size_t t = 0; t < sources.size(); ++t)
	{
		if (c.d[t] == 0)
		{
			continue;
		}
		const auto r = static_cast<std::size_t>(sources[t] - 1);
		orders[r] = 1;
		total += unit(c, r, t) * c.d[t];
	}
	for (std::size_t r = 0; r < orders.size(); ++r)
	{
		if (orders[r] != 0)
		{
			total += c.k[r];
		}
	}
	return total;
}

/// Minimum cost over all order sets: once the set is fixed, every period
/// takes its cheapest open source.
inline Rational value(const Pooled& c)
{
	const auto periods = c.d.size();
	bool any = std::any_of(c.d.begin(), c.d.end(), [](std::int64_t v) { return v > 0; });
	if (!any)
	{
		return 0;
	}
	Rational best = -1;
	for (std::uint32_t set = 1; set < (1U << periods); ++set)
	{
		Rational total = 0;
		for (std::size_t r = 0; r < periods; ++r)
		{
			if ((set >> r) & 1U)
			{
				total += c.k[r];
			}
		}
		for (std::size_t t = 0; t < periods; ++t)
		{
			if (c.d[t] == 0)
			{
				continue;
			}
			Rational cheapest = -1;
			for (std::size_t r = 0; r < periods; ++r)
			{
				if (((set >> r) & 1U) && (cheapest < 0 || unit(c, r, t) < cheapest))
				{
					cheapest = unit(c, r, t);
				}
			}
			total += cheapest * c.d[t];
		}
		if (best < 0 || total < best)
		{
			best = total;
		}
	}
	return best;
}

inline Rational value(const SISituation& s, Coalition c)
{
	return value(pool(s, c));
}

/// Values of every coalition, indexed by mask.
inline std::vector<Rational> game_values(const SISituation& s)
{
	const std::uint32_t full = (1U << s.players()) - 1;
	std::vector<Rational> v(full + 1, 0);
	for (std::uint32_t m = 1; m <= full; ++m)
	{
		v[m] = value(s, Coalition(m));
	}
	return v;
}

inline bool in_core(const std::vector<Rational>& values, const RationalVector& x)
{
	const std::uint32_t full = static_cast<std::uint32_t>(values.size() - 1);
	for (std::uint32_t m = 1; m <= full; ++m)
	{
		Rational sum = 0;
		for (std::size_t i = 0; i < x.size(); ++i)
		{
			if ((m >> i) & 1U)
			{
				sum += x[i];
			}
		}
		if (m == full ? sum != values[m] : sum > values[m])
		{
			return false;
		}
	}
	return true;
}

/// P^N(sigma) d^i for each player, from the grand coalition's plan.
inline RationalVector owen_formula(const SISituation& s, const std::vector<int>& grand_sources)
{
	const auto c = pool(s, Coalition::grand(s.players()));
	RationalVector x(s.players(), 0);
	for (std::size_t i = 0; i < s.players(); ++i)
	{
		for (std::size_t t = 0; t < s.periods(); ++t)
		{
			if (s.demand()[i][t] > 0)
			{
				x[i] += unit(c, static_cast<std::size_t>(grand_sources[t] - 1), t) * s.demand()[i][t];
			}
		}
	}
	return x;
}

/// Order sets of every optimal plan, by enumerating all assignments.
inline std::vector<std::vector<int>> optimal_order_sets(const Pooled& c)
{
	const auto periods = c.d.size();
	std::vector<std::size_t> active;
	for (std::size_t t = 0; t < periods; ++t)
	{
		if (c.d[t] > 0)
		{
			active.push_back(t);
		}
	}
	std::vector<int> s(periods, 0);
	for (auto t : active)
	{
		s[t] = 1;
	}
	Rational best = -1;
	std::vector<std::vector<int>> sets;
	for (;;)
	{
		const Rational v = plan_cost(c, s);
		std::vector<int> orders;
		for (auto t : active)
		{
			orders.push_back(s[t]);
		}
		std::sort(orders.begin(), orders.end());
		orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
		if (best < 0 || v < best)
		{
			best = v;
			sets = {orders};
		}
		else if (v == best && std::find(sets.begin(), sets.end(), orders) == sets.end())
		{
			sets.push_back(orders);
		}
		std::size_t k = 0;
		for (; k < active.size(); ++k)
		{
			if (s[active[k]] < static_cast<int>(periods))
			{
				++s[active[k]];
				break;
			}
			s[active[k]] = 1;
		}
		if (k == active.size())
		{
			break;
		}
	}
	return sets;
}

} // namespace oracle

/// A core point of \p game maximizing a random objective over the core.
inline RationalVector random_core_point(std::mt19937_64& rng, const SIGame& game)
{
	LPProblem lp = core_lp(game);
	std::uniform_int_distribution<int> w(-5, 5);
	for (auto& c : lp.objective)
	{
		c = w(rng);
	}
	lp.add([&] {
		std::vector<std::pair<std::size_t, Rational>> all;
		for (std::size_t i = 0; i < game.players(); ++i)
		{
			all.emplace_back(i, Rational(1));
		}
		return all;
	}(),
		   Relation::equal, game.value(game.grand()));
	const auto res = lp_solve(lp);
	return res.status == LPStatus::optimal ? res.x : RationalVector{};
}

/// Whether any pmas of \p game has grand-coalition vector \p target.
inline bool pmas_reaching(const SIGame& game, const RationalVector& target)
{
	std::map<std::pair<Coalition::mask_type, std::size_t>, std::size_t> var;
	for (Coalition s : game.coalitions())
	{
		for (std::size_t i : s.members())
		{
			var.emplace(std::make_pair(s.mask(), i), var.size());
		}
	}
	LPProblem lp;
	lp.sense = Sense::minimize;
	lp.objective.assign(var.size(), 0);
	lp.bounds.assign(var.size(), LPBound::free());
	for (Coalition s : game.coalitions())
	{
		std::vector<std::pair<std::size_t, Rational>> sum;
		for (std::size_t i : s.members())
		{
			sum.emplace_back(var.at({s.mask(), i}), 1);
		}
		lp.add(std::move(sum), Relation::equal, game.value(s));
		for (Coalition r : game.coalitions())
		{
			if (s != r && s.is_subset_of(r))
			{
				for (std::size_t i : s.members())
				{
					lp.add({{var.at({s.mask(), i}), 1}, {var.at({r.mask(), i}), -1}}, Relation::greater_equal, 0);
				}
			}
		}
	}
	for (std::size_t i = 0; i < game.players(); ++i)
	{
		lp.add({{var.at({game.grand().mask(), i}), 1}}, Relation::equal, target[i]);
	}
	return lp_solve(lp).status == LPStatus::optimal;
}

} // namespace testing_support

#endif // SIGAME_TESTS_SUPPORT_HPP
