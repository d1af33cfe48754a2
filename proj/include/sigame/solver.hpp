#ifndef SIGAME_SOLVER_HPP
#define SIGAME_SOLVER_HPP

#include <sigame/errors.hpp>
#include <sigame/model.hpp>
#include <sigame/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

/**
 * \file sigame/solver.hpp
 *
 * Single-coalition lot sizing with backlogging and setup costs.
 *
 * solve() runs a dynamic program over regeneration blocks: every block of
 * consecutive periods is served by one order placed inside the block.  The
 * two oracles enumerate order-period sets and full assignments respectively
 * and share no code with the dynamic program beyond plan costing.
 */

namespace sigame {

/// Selection rule among cost-minimal plans.
enum class TieBreak
{
	/// Fewest order periods, then lexicographically smallest order-period
	/// set, then lexicographically smallest plan.  The canonical rule.
	fewest_orders,
	/// Lexicographically smallest plan.
	lexicographic_plan,
};

inline constexpr TieBreak canonical_tie_break = TieBreak::fewest_orders;

struct SolveResult
{
	OrderingPlan plan;
	Rational value;
	std::vector<int> order_periods;
};

namespace detail {

/// unit[r-1][t-1] = unit_source_cost(costs, r, t), built from prefix sums.
inline std::vector<RationalVector> unit_cost_table(const CoalitionCosts& costs)
{
	const std::size_t periods = costs.periods();
	RationalVector hold_prefix(periods + 1, 0);
	RationalVector back_prefix(periods + 1, 0);
	for (std::size_t t = 0; t < periods; ++t)
	{
		hold_prefix[t + 1] = hold_prefix[t] + costs.holding[t];
		back_prefix[t + 1] = back_prefix[t] + costs.backlog[t];
	}
	std::vector<RationalVector> unit(periods, RationalVector(periods));
	for (std::size_t r = 0; r < periods; ++r)
	{
		for (std::size_t t = 0; t < periods; ++t)
		{
			if (r < t)
			{
				// holding periods r+1..t in 1-based terms are r..t-1 zero-based
				unit[r][t] = costs.purchase[r] + (hold_prefix[t] - hold_prefix[r]);
			}
			else if (t < r)
			{
				unit[r][t] = costs.purchase[r] + (back_prefix[r + 1] - back_prefix[t + 1]);
			}
			else
			{
				unit[r][t] = costs.purchase[r];
			}
		}
	}
	return unit;
}

/// Ordering key of a candidate plan under a tie-break rule; smaller wins.
struct PlanKey
{
	Rational cost;
	std::vector<int> orders;
	std::vector<int> sources;
};

inline bool key_less(const PlanKey& a, const PlanKey& b, TieBreak rule)
{
	if (a.cost != b.cost)
	{
		return a.cost < b.cost;
	}
	if (rule == TieBreak::fewest_orders)
	{
		if (a.orders.size() != b.orders.size())
		{
			return a.orders.size() < b.orders.size();
		}
		if (a.orders != b.orders)
		{
			return a.orders < b.orders;
		}
	}
	return a.sources < b.sources;
}

/// Same table as unit_cost_table but evaluated point by point; the oracles
/// use this so they do not depend on the prefix-sum construction.
inline std::vector<RationalVector> direct_unit_costs(const CoalitionCosts& costs)
{
	const std::size_t periods = costs.periods();
	std::vector<RationalVector> unit(periods, RationalVector(periods));
	for (std::size_t r = 0; r < periods; ++r)
	{
		for (std::size_t t = 0; t < periods; ++t)
		{
			unit[r][t] = unit_source_cost(costs, static_cast<int>(r + 1), static_cast<int>(t + 1));
		}
	}
	return unit;
}

inline SolveResult finish(const CoalitionCosts& costs, std::vector<int> sources)
{
	SolveResult res;
	res.plan = OrderingPlan(std::move(sources));
	res.value = plan_total_cost(res.plan, costs);
	res.order_periods = order_periods(res.plan);
	return res;
}

} // namespace detail

/// Optimal plan and cost of one lot-sizing problem, O(T^3).
inline SolveResult solve(const CoalitionCosts& costs, TieBreak rule = canonical_tie_break)
{
	const std::size_t periods = costs.periods();
	const auto unit = detail::unit_cost_table(costs);

	// served[r][j] = sum_{t<j} unit[r][t] * d_t
	std::vector<RationalVector> served(periods, RationalVector(periods + 1, 0));
	std::vector<Demand> demand_prefix(periods + 1, 0);
	for (std::size_t t = 0; t < periods; ++t)
	{
		demand_prefix[t + 1] = demand_prefix[t] + costs.demand[t];
	}
	for (std::size_t r = 0; r < periods; ++r)
	{
		for (std::size_t t = 0; t < periods; ++t)
		{
			served[r][t + 1] = served[r][t] + unit[r][t] * costs.demand[t];
		}
	}

	// best[j]: best plan for the first j periods; blocks never straddle j.
	std::vector<std::optional<detail::PlanKey>> best(periods + 1);
	best[0] = detail::PlanKey{0, {}, {}};
	for (std::size_t j = 1; j <= periods; ++j)
	{
		for (std::size_t i = 1; i <= j; ++i)
		{
			const auto& prefix = *best[i - 1];
			detail::PlanKey cand = prefix;
			if (demand_prefix[j] == demand_prefix[i - 1])
			{
				cand.sources.resize(j, 0);
			}
			else
			{
				std::size_t pick = 0;
				Rational pick_cost;
				for (std::size_t r = i; r <= j; ++r)
				{
					const Rational c = costs.setup[r - 1] + (served[r - 1][j] - served[r - 1][i - 1]);
					if (pick == 0 || c < pick_cost)
					{
						pick = r;
						pick_cost = c;
					}
				}
				cand.cost += pick_cost;
				cand.orders.push_back(static_cast<int>(pick));
				for (std::size_t t = i; t <= j; ++t)
				{
					cand.sources.push_back(costs.demand[t - 1] == 0 ? 0 : static_cast<int>(pick));
				}
			}
			if (!best[j] || detail::key_less(cand, *best[j], rule))
			{
				best[j] = std::move(cand);
			}
		}
	}
	if (periods == 0)
	{
		return detail::finish(costs, {});
	}
	return detail::finish(costs, best[periods]->sources);
}

inline constexpr std::size_t subset_oracle_max_periods = 14;
inline constexpr std::uint64_t assignment_oracle_max_plans = 1000000;

/// Enumerates every candidate order-period set.  Canonical under the
/// fewest-orders rule.
inline SolveResult solve_oracle_subsets(const CoalitionCosts& costs)
{
	const std::size_t periods = costs.periods();
	if (periods > subset_oracle_max_periods)
	{
		throw oracle_limit("subset oracle supports at most 14 periods");
	}
	const auto unit = detail::direct_unit_costs(costs);
	bool any_demand = false;
	for (Demand d : costs.demand)
	{
		any_demand = any_demand || d > 0;
	}
	if (!any_demand)
	{
		return detail::finish(costs, std::vector<int>(periods, 0));
	}

	std::optional<detail::PlanKey> best;
	const std::uint32_t limit = std::uint32_t{1} << periods;
	for (std::uint32_t mask = 1; mask < limit; ++mask)
	{
		detail::PlanKey key;
		key.cost = 0;
		for (std::size_t r = 0; r < periods; ++r)
		{
			if ((mask >> r) & 1U)
			{
				key.orders.push_back(static_cast<int>(r + 1));
				key.cost += costs.setup[r];
			}
		}
		for (std::size_t t = 0; t < periods; ++t)
		{
			if (costs.demand[t] == 0)
			{
				key.sources.push_back(0);
				continue;
			}
			int pick = 0;
			for (int r : key.orders)
			{
				if (pick == 0 || unit[static_cast<std::size_t>(r - 1)][t] < unit[static_cast<std::size_t>(pick - 1)][t])
				{
					pick = r;
				}
			}
			key.sources.push_back(pick);
			key.cost += unit[static_cast<std::size_t>(pick - 1)][t] * costs.demand[t];
		}
		if (!best || detail::key_less(key, *best, TieBreak::fewest_orders))
		{
			best = std::move(key);
		}
	}
	return detail::finish(costs, best->sources);
}

/// Exhaustive minimum over every feasible plan, crossing ones included.
inline SolveResult solve_oracle_assignments(const CoalitionCosts& costs, TieBreak rule = canonical_tie_break)
{
	const std::size_t periods = costs.periods();
	std::vector<std::size_t> positive;
	for (std::size_t t = 0; t < periods; ++t)
	{
		if (costs.demand[t] > 0)
		{
			positive.push_back(t);
		}
	}
	std::uint64_t count = 1;
	for (std::size_t k = 0; k < positive.size(); ++k)
	{
		count *= periods;
		if (count > assignment_oracle_max_plans)
		{
			throw oracle_limit("assignment oracle limited to 10^6 plans");
		}
	}
	const auto unit = detail::direct_unit_costs(costs);

	std::vector<int> sources(periods, 0);
	std::vector<std::size_t> digit(positive.size(), 0);
	std::optional<detail::PlanKey> best;
	for (std::uint64_t it = 0; it < count; ++it)
	{
		detail::PlanKey key;
		key.cost = 0;
		std::vector<int> used(periods, 0);
		for (std::size_t k = 0; k < positive.size(); ++k)
		{
			const std::size_t t = positive[k];
			sources[t] = static_cast<int>(digit[k] + 1);
			used[digit[k]] = 1;
			key.cost += unit[digit[k]][t] * costs.demand[t];
		}
		for (std::size_t r = 0; r < periods; ++r)
		{
			if (used[r] != 0)
			{
				key.orders.push_back(static_cast<int>(r + 1));
				key.cost += costs.setup[r];
			}
		}
		key.sources = sources;
		if (!best || detail::key_less(key, *best, rule))
		{
			best = std::move(key);
		}
		// odometer, last positive period fastest
		for (std::size_t k = positive.size(); k-- > 0;)
		{
			if (++digit[k] < periods)
			{
				break;
			}
			digit[k] = 0;
		}
	}
	return detail::finish(costs, best ? best->sources : sources);
}

} // namespace sigame

#endif // SIGAME_SOLVER_HPP
