#ifndef SIGAME_MODEL_HPP
#define SIGAME_MODEL_HPP

#include <sigame/errors.hpp>
#include <sigame/rational.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

/**
 * \file sigame/model.hpp
 *
 * Domain vocabulary shared by every other header: situations, coalitions,
 * coalition cost vectors, ordering plans and their costing.
 *
 * Players are indexed from 0 internally and rendered from 1.  Periods are
 * 1-based everywhere they appear as values (ordering plans store the source
 * period of each demand, 0 meaning "no demand"), while vectors indexed by
 * period use position t-1.
 */

namespace sigame {

using Demand = std::int64_t;
using DemandVector = std::vector<Demand>;
using DemandMatrix = std::vector<DemandVector>;
using RationalMatrix = std::vector<RationalVector>;

/// Demand and the four cost matrices of a setup-inventory situation,
/// one row per player and one column per period.
class SISituation
{
public:
	SISituation() = default;

	SISituation(DemandMatrix demand,
				RationalMatrix setup,
				RationalMatrix holding,
				RationalMatrix backlog,
				RationalMatrix purchase,
				std::vector<std::string> names = {})
	: demand_(std::move(demand)),
	  setup_(std::move(setup)),
	  holding_(std::move(holding)),
	  backlog_(std::move(backlog)),
	  purchase_(std::move(purchase)),
	  names_(std::move(names))
	{
		validate();
		if (names_.empty())
		{
			for (std::size_t i = 0; i < players(); ++i)
			{
				names_.push_back("P" + std::to_string(i + 1));
			}
		}
	}

	std::size_t players() const { return demand_.size(); }
	std::size_t periods() const { return demand_.empty() ? 0 : demand_.front().size(); }

	const DemandMatrix& demand() const { return demand_; }
	const RationalMatrix& setup() const { return setup_; }
	const RationalMatrix& holding() const { return holding_; }
	const RationalMatrix& backlog() const { return backlog_; }
	const RationalMatrix& purchase() const { return purchase_; }
	const std::vector<std::string>& names() const { return names_; }

	bool operator==(const SISituation&) const = default;

private:
	void validate() const
	{
		if (demand_.empty())
		{
			throw invalid_situation("situation needs at least one player");
		}
		const std::size_t n = demand_.size();
		const std::size_t periods = demand_.front().size();
		if (periods == 0)
		{
			throw invalid_situation("situation needs at least one period");
		}
		for (const auto& row : demand_)
		{
			if (row.size() != periods)
			{
				throw invalid_situation("demand rows have different lengths");
			}
			for (Demand d : row)
			{
				if (d < 0)
				{
					throw invalid_situation("negative demand");
				}
			}
		}
		auto check = [&](const RationalMatrix& m, const char* what) {
			if (m.size() != n)
			{
				throw invalid_situation(std::string(what) + " matrix has wrong number of rows");
			}
			for (const auto& row : m)
			{
				if (row.size() != periods)
				{
					throw invalid_situation(std::string(what) + " matrix has wrong number of periods");
				}
				for (const auto& v : row)
				{
					if (v < 0)
					{
						throw invalid_situation(std::string("negative ") + what + " cost");
					}
				}
			}
		};
		check(setup_, "setup");
		check(holding_, "holding");
		check(backlog_, "backlog");
		check(purchase_, "purchase");
		if (!names_.empty() && names_.size() != n)
		{
			throw invalid_situation("player names do not match player count");
		}
	}

	DemandMatrix demand_;
	RationalMatrix setup_;
	RationalMatrix holding_;
	RationalMatrix backlog_;
	RationalMatrix purchase_;
	std::vector<std::string> names_;
};

/// Nonempty set of players, canonically a bitmask (bit i = player i).
class Coalition
{
public:
	using mask_type = std::uint32_t;
	static constexpr std::size_t max_players = 31;

	constexpr Coalition() = default;
	constexpr explicit Coalition(mask_type mask) : mask_(mask) {}

	/// Zero-based member indices.
	static Coalition of(std::initializer_list<std::size_t> members)
	{
		return of(std::span<const std::size_t>(members.begin(), members.size()));
	}

	static Coalition of(std::span<const std::size_t> members)
	{
		mask_type m = 0;
		for (std::size_t i : members)
		{
			if (i >= max_players)
			{
				throw invalid_coalition("player index out of range");
			}
			m |= mask_type{1} << i;
		}
		return Coalition(m);
	}

	static constexpr Coalition singleton(std::size_t i) { return Coalition(mask_type{1} << i); }

	static constexpr Coalition grand(std::size_t n)
	{
		return Coalition(n >= 32 ? ~mask_type{0} : ((mask_type{1} << n) - 1));
	}

	constexpr mask_type mask() const { return mask_; }
	constexpr bool empty() const { return mask_ == 0; }
	constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
	constexpr bool contains(std::size_t i) const { return i < 32 && ((mask_ >> i) & 1U) != 0; }
	constexpr bool is_subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }
	constexpr bool intersects(Coalition other) const { return (mask_ & other.mask_) != 0; }

	std::vector<std::size_t> members() const
	{
		std::vector<std::size_t> out;
		for (mask_type m = mask_; m != 0; m &= m - 1)
		{
			out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
		}
		return out;
	}

	/// Throws unless nonempty and within players {0..n-1}.
	void validate(std::size_t n) const
	{
		if (empty())
		{
			throw invalid_coalition("coalition is empty");
		}
		if (!is_subset_of(grand(n)))
		{
			throw invalid_coalition("coalition member out of range");
		}
	}

	/// Rendered with 1-based members, e.g. "{1,3}".
	std::string to_string() const
	{
		std::string out = "{";
		bool first = true;
		for (std::size_t i : members())
		{
			if (!first)
			{
				out += ",";
			}
			out += std::to_string(i + 1);
			first = false;
		}
		return out + "}";
	}

	friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.mask_ | b.mask_); }
	friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.mask_ & b.mask_); }
	constexpr auto operator<=>(const Coalition&) const = default;

private:
	mask_type mask_ = 0;
};

/// Pooled demand and componentwise-minimum costs of a coalition.  This is
/// also the input of a single lot-sizing problem.
struct CoalitionCosts
{
	DemandVector demand;
	RationalVector purchase;
	RationalVector holding;
	RationalVector backlog;
	RationalVector setup;

	std::size_t periods() const { return demand.size(); }
	bool operator==(const CoalitionCosts&) const = default;
};

/// Source period (1-based) of every period's demand; 0 where demand is zero.
struct OrderingPlan
{
	std::vector<int> sources;

	OrderingPlan() = default;
	explicit OrderingPlan(std::vector<int> s) : sources(std::move(s)) {}
	OrderingPlan(std::initializer_list<int> s) : sources(s) {}

	std::size_t periods() const { return sources.size(); }
	int operator[](std::size_t t) const { return sources[t]; }

	auto operator<=>(const OrderingPlan&) const = default;
	bool operator==(const OrderingPlan&) const = default;
};

/// Per-period unit cost of serving demand under a plan.
using CostPlanVector = RationalVector;

/// Cost share of each player, indexed like the situation's rows.
using Allocation = RationalVector;

/// Order sizes, ending inventories and ending backlogs of a plan.
struct FlowSchedule
{
	DemandVector order;
	DemandVector inventory;
	DemandVector backlog;

	bool operator==(const FlowSchedule&) const = default;
};

inline CoalitionCosts coalition_costs(const SISituation& situation, Coalition s)
{
	s.validate(situation.players());
	const std::size_t periods = situation.periods();
	CoalitionCosts out;
	out.demand.assign(periods, 0);
	bool first = true;
	for (std::size_t i : s.members())
	{
		for (std::size_t t = 0; t < periods; ++t)
		{
			out.demand[t] += situation.demand()[i][t];
		}
		if (first)
		{
			out.purchase = situation.purchase()[i];
			out.holding = situation.holding()[i];
			out.backlog = situation.backlog()[i];
			out.setup = situation.setup()[i];
			first = false;
			continue;
		}
		for (std::size_t t = 0; t < periods; ++t)
		{
			out.purchase[t] = std::min(out.purchase[t], situation.purchase()[i][t]);
			out.holding[t] = std::min(out.holding[t], situation.holding()[i][t]);
			out.backlog[t] = std::min(out.backlog[t], situation.backlog()[i][t]);
			out.setup[t] = std::min(out.setup[t], situation.setup()[i][t]);
		}
	}
	return out;
}

/// Unit cost of serving period-t demand from an order placed in period r
/// (both 1-based): purchase at r plus the holding chain r..t-1 or the
/// backlog chain t+1..r.
inline Rational unit_source_cost(const CoalitionCosts& costs, int r, int t)
{
	Rational c = costs.purchase[static_cast<std::size_t>(r - 1)];
	if (r < t)
	{
		for (int e = r; e < t; ++e)
		{
			c += costs.holding[static_cast<std::size_t>(e - 1)];
		}
	}
	else if (t < r)
	{
		for (int e = t + 1; e <= r; ++e)
		{
			c += costs.backlog[static_cast<std::size_t>(e - 1)];
		}
	}
	return c;
}

/// Throws infeasible_plan unless the plan matches the demand's zero pattern
/// and every source is a valid period.
inline void check_feasible(const OrderingPlan& plan, std::span<const Demand> demand)
{
	if (plan.periods() != demand.size())
	{
		throw infeasible_plan("plan length does not match horizon");
	}
	const int periods = static_cast<int>(demand.size());
	for (std::size_t t = 0; t < demand.size(); ++t)
	{
		const int src = plan[t];
		if (src < 0 || src > periods)
		{
			throw infeasible_plan("plan source out of range at period " + std::to_string(t + 1));
		}
		if ((src == 0) != (demand[t] == 0))
		{
			throw infeasible_plan("plan does not match demand at period " + std::to_string(t + 1));
		}
	}
}

inline CostPlanVector plan_cost_vector(const OrderingPlan& plan, const CoalitionCosts& costs)
{
	check_feasible(plan, costs.demand);
	CostPlanVector out(plan.periods());
	for (std::size_t t = 0; t < plan.periods(); ++t)
	{
		if (plan[t] != 0)
		{
			out[t] = unit_source_cost(costs, plan[t], static_cast<int>(t + 1));
		}
	}
	return out;
}

/// 1 at every period used as a source by the plan.
inline std::vector<int> delta_vector(const OrderingPlan& plan)
{
	std::vector<int> delta(plan.periods(), 0);
	for (int src : plan.sources)
	{
		if (src > 0 && static_cast<std::size_t>(src) <= plan.periods())
		{
			delta[static_cast<std::size_t>(src - 1)] = 1;
		}
	}
	return delta;
}

/// Sorted 1-based periods in which the plan places an order.
inline std::vector<int> order_periods(const OrderingPlan& plan)
{
	std::vector<int> out;
	const auto delta = delta_vector(plan);
	for (std::size_t t = 0; t < delta.size(); ++t)
	{
		if (delta[t] != 0)
		{
			out.push_back(static_cast<int>(t + 1));
		}
	}
	return out;
}

inline Rational setup_cost(const OrderingPlan& plan, const CoalitionCosts& costs)
{
	Rational total = 0;
	for (int r : order_periods(plan))
	{
		total += costs.setup[static_cast<std::size_t>(r - 1)];
	}
	return total;
}

/// Variable part P(sigma)'d.
inline Rational variable_cost(const OrderingPlan& plan, const CoalitionCosts& costs)
{
	const auto unit = plan_cost_vector(plan, costs);
	Rational total = 0;
	for (std::size_t t = 0; t < unit.size(); ++t)
	{
		total += unit[t] * costs.demand[t];
	}
	return total;
}

inline Rational plan_total_cost(const OrderingPlan& plan, const CoalitionCosts& costs)
{
	return variable_cost(plan, costs) + setup_cost(plan, costs);
}

/// True when some boundary between consecutive periods is crossed by a unit
/// carried forward as inventory and by another carried backward as
/// backlog; such flows cancel and the net schedule undercounts the plan.
inline bool is_crossing(const OrderingPlan& plan)
{
	const std::size_t periods = plan.periods();
	if (periods < 2)
	{
		return false;
	}
	// boundary e (1-based) separates period e and e+1
	std::vector<char> forward(periods, 0);
	std::vector<char> backward(periods, 0);
	for (std::size_t i = 0; i < periods; ++i)
	{
		const int t = static_cast<int>(i + 1);
		const int r = plan[i];
		if (r == 0 || r == t)
		{
			continue;
		}
		if (r < t)
		{
			for (int e = r; e < t; ++e)
			{
				forward[static_cast<std::size_t>(e)] = 1;
			}
		}
		else
		{
			for (int e = t; e < r; ++e)
			{
				backward[static_cast<std::size_t>(e)] = 1;
			}
		}
	}
	for (std::size_t e = 1; e < periods; ++e)
	{
		if (forward[e] != 0 && backward[e] != 0)
		{
			return true;
		}
	}
	return false;
}

inline FlowSchedule reconstruct_flows(const OrderingPlan& plan, std::span<const Demand> demand)
{
	check_feasible(plan, demand);
	if (is_crossing(plan))
	{
		throw crossing_plan("plan carries inventory and backlog across the same period boundary");
	}
	const std::size_t periods = plan.periods();
	FlowSchedule f;
	f.order.assign(periods, 0);
	f.inventory.assign(periods, 0);
	f.backlog.assign(periods, 0);
	for (std::size_t t = 0; t < periods; ++t)
	{
		if (plan[t] != 0)
		{
			f.order[static_cast<std::size_t>(plan[t] - 1)] += demand[t];
		}
	}
	Demand net = 0;
	for (std::size_t t = 0; t < periods; ++t)
	{
		net += f.order[t] - demand[t];
		f.inventory[t] = net > 0 ? net : 0;
		f.backlog[t] = net < 0 ? -net : 0;
	}
	return f;
}

/// Cost of a flow schedule.  Backlog outstanding at the end of period t is
/// charged at the rate of period t+1, the period it is carried into; this
/// is the charging convention of the cost-plan vector.
inline Rational flow_cost(const FlowSchedule& flows, const CoalitionCosts& costs)
{
	Rational total = 0;
	const std::size_t periods = flows.order.size();
	for (std::size_t t = 0; t < periods; ++t)
	{
		total += costs.purchase[t] * flows.order[t];
		total += costs.holding[t] * flows.inventory[t];
		if (flows.backlog[t] != 0)
		{
			// backlog[T] is always zero for a feasible schedule
			total += costs.backlog[t + 1] * flows.backlog[t];
		}
		if (flows.order[t] > 0)
		{
			total += costs.setup[t];
		}
	}
	return total;
}

} // namespace sigame

#endif // SIGAME_MODEL_HPP
