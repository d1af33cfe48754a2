#ifndef SIGAME_CORETOOLS_HPP
#define SIGAME_CORETOOLS_HPP

#include <sigame/errors.hpp>
#include <sigame/game.hpp>
#include <sigame/lp.hpp>
#include <sigame/model.hpp>
#include <sigame/rational.hpp>
#include <sigame/solver.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace sigame {

struct CoreReport
{
	bool in_core = false;
	bool efficient = false;
	Rational total;
	/// Proper coalitions S with x(S) > c(S).
	std::vector<Coalition> violations;
};

/// Exact core membership: x(N) = c(N) and x(S) <= c(S) for every S.
inline CoreReport core_check(const SIGame& game, const Allocation& x)
{
	if (x.size() != game.players())
	{
		throw invalid_allocation("allocation has " + std::to_string(x.size()) + " entries, game has "
								 + std::to_string(game.players()) + " players");
	}
	CoreReport rep;
	const auto grand = game.grand();
	// x(S) by mask, built from the lowest set bit
	std::vector<Rational> partial(std::size_t{grand.mask()} + 1, 0);
	for (Coalition::mask_type m = 1; m <= grand.mask() && m != 0; ++m)
	{
		const auto low = static_cast<std::size_t>(std::countr_zero(m));
		partial[m] = partial[m & (m - 1)] + x[low];
		if (m != grand.mask() && partial[m] > game.value(Coalition(m)))
		{
			rep.violations.emplace_back(m);
		}
	}
	rep.total = partial[grand.mask()];
	rep.efficient = rep.total == game.value(grand);
	rep.in_core = rep.efficient && rep.violations.empty();
	return rep;
}

/// max x(N) subject to x(S) <= c(S) for every nonempty S, x free.
inline LPProblem core_lp(const SIGame& game)
{
	LPProblem lp;
	lp.sense = Sense::maximize;
	lp.objective.assign(game.players(), 1);
	lp.bounds.assign(game.players(), LPBound::free());
	for (Coalition s : game.coalitions())
	{
		std::vector<std::pair<std::size_t, Rational>> terms;
		for (std::size_t i : s.members())
		{
			terms.emplace_back(i, Rational(1));
		}
		lp.add(std::move(terms), Relation::less_equal, game.value(s));
	}
	return lp;
}

/// min sum lambda_S c(S) subject to sum_{S ni i} lambda_S = 1, lambda >= 0.
/// Variable k corresponds to the coalition with mask k+1.
inline LPProblem balancedness_lp(const SIGame& game)
{
	LPProblem lp;
	lp.sense = Sense::minimize;
	const auto all = game.coalitions();
	for (Coalition s : all)
	{
		lp.objective.push_back(game.value(s));
	}
	for (std::size_t i = 0; i < game.players(); ++i)
	{
		std::vector<std::pair<std::size_t, Rational>> terms;
		for (std::size_t k = 0; k < all.size(); ++k)
		{
			if (all[k].contains(i))
			{
				terms.emplace_back(k, Rational(1));
			}
		}
		lp.add(std::move(terms), Relation::equal, 1);
	}
	return lp;
}

struct CoreNonemptyReport
{
	bool nonempty = false;
	Rational optimum;
	Allocation witness;
	/// Optimal balancing weights, indexed like balancedness_lp's variables.
	RationalVector weights;
};

/// Solves the balancedness program; its optimum equals max x(N) over
/// x(S) <= c(S), and its multipliers are such an x.  The core is nonempty
/// iff the optimum reaches c(N).
inline CoreNonemptyReport core_nonempty(const SIGame& game)
{
	const auto res = lp_solve(balancedness_lp(game));
	CoreNonemptyReport rep;
	if (res.status != LPStatus::optimal)
	{
		// cannot happen: lambda_N = 1 is feasible and c >= 0 bounds it
		return rep;
	}
	rep.optimum = res.objective;
	rep.witness = res.duals;
	rep.weights = res.x;
	rep.nonempty = rep.optimum == game.value(game.grand());
	return rep;
}

/// Coalitions with rational balancing weights.
struct BalancedCollection
{
	std::vector<std::pair<Coalition, Rational>> items;
};

/// Every weight nonnegative, every coalition within n players and every
/// player covered with total weight exactly 1.
inline bool check_balanced(const BalancedCollection& collection, std::size_t n)
{
	RationalVector cover(n, 0);
	for (const auto& [s, w] : collection.items)
	{
		if (w < 0 || s.empty() || !s.is_subset_of(Coalition::grand(n)))
		{
			return false;
		}
		for (std::size_t i : s.members())
		{
			cover[i] += w;
		}
	}
	return std::all_of(cover.begin(), cover.end(), [](const Rational& c) { return c == 1; });
}

struct BalancedInequalityReport
{
	Rational weighted_sum; ///< sum lambda_S c(S)
	Rational grand_value;  ///< c(N)
	Rational slack;
	bool holds = false;
};

inline BalancedInequalityReport balanced_inequality(const SIGame& game, const BalancedCollection& collection)
{
	if (!check_balanced(collection, game.players()))
	{
		throw not_balanced("collection is not balanced");
	}
	BalancedInequalityReport rep;
	rep.weighted_sum = 0;
	for (const auto& [s, w] : collection.items)
	{
		rep.weighted_sum += w * game.value(s);
	}
	rep.grand_value = game.value(game.grand());
	rep.slack = rep.weighted_sum - rep.grand_value;
	rep.holds = rep.slack >= 0;
	return rep;
}

inline constexpr std::size_t default_r_cap = 10000;

/// Sorted candidates of one period of the plan-merging construction.
struct PeriodAudit
{
	int period = 0;
	/// (replica index, P^N_t of the replica's plan), nondecreasing in cost
	std::vector<std::pair<std::size_t, Rational>> sorted;
};

struct Lemma1Result
{
	std::size_t r = 0;
	/// Replica multiset: coalition S repeated r*lambda_S times.
	std::vector<Coalition> replicas;
	/// Optimal plan of each coalition at the grand coalition's costs.
	std::map<Coalition, OrderingPlan> reference_plans;
	std::vector<OrderingPlan> plans;
	std::vector<CostPlanVector> plan_costs; ///< P^N of each merged plan
	std::vector<PeriodAudit> audit;

	bool copied_from_replica = false; ///< (i)
	bool within_multiplicity = false; ///< (ii)
	bool sorted_dominance = false;    ///< (iii)

	Rational replica_cost;  ///< sum over replicas of the reference plan's cost
	Rational merged_cost;   ///< sum over merged plans of their cost
	Rational grand_value;   ///< c(N)
};

/// Builds r feasible plans for the grand coalition by merging, period by
/// period, the cheapest reference plans of the replicated collection.
/// Reference plans use \p rule among tied optima.
inline Lemma1Result lemma1_plans(const SISituation& situation, const BalancedCollection& collection,
								 std::size_t r_cap = default_r_cap, TieBreak rule = TieBreak::lexicographic_plan)
{
	const std::size_t n = situation.players();
	const std::size_t periods = situation.periods();
	if (!check_balanced(collection, n))
	{
		throw not_balanced("collection is not balanced");
	}
	BigInt r_big = 1;
	for (const auto& [s, w] : collection.items)
	{
		r_big = lcm(r_big, boost::multiprecision::denominator(w));
		if (r_big > r_cap)
		{
			throw r_cap_exceeded("replica factor exceeds cap of " + std::to_string(r_cap));
		}
	}
	Lemma1Result out;
	out.r = static_cast<std::size_t>(r_big);

	const Coalition all = Coalition::grand(n);
	const CoalitionCosts grand_costs = coalition_costs(situation, all);
	out.grand_value = solve(grand_costs).value;

	std::map<Coalition, std::size_t> multiplicity;
	for (const auto& [s, w] : collection.items)
	{
		const auto copies = static_cast<std::size_t>(BigInt(w * out.r));
		multiplicity[s] += copies;
		for (std::size_t c = 0; c < copies; ++c)
		{
			out.replicas.push_back(s);
		}
		if (!out.reference_plans.contains(s))
		{
			// coalition demand, grand coalition costs
			CoalitionCosts costs = grand_costs;
			costs.demand = coalition_costs(situation, s).demand;
			out.reference_plans.emplace(s, solve(costs, rule).plan);
		}
	}

	std::map<Coalition, CostPlanVector> reference_unit;
	out.replica_cost = 0;
	for (const auto& [s, plan] : out.reference_plans)
	{
		CoalitionCosts costs = grand_costs;
		costs.demand = coalition_costs(situation, s).demand;
		reference_unit.emplace(s, plan_cost_vector(plan, costs));
	}
	for (Coalition s : out.replicas)
	{
		CoalitionCosts costs = grand_costs;
		costs.demand = coalition_costs(situation, s).demand;
		out.replica_cost += plan_total_cost(out.reference_plans.at(s), costs);
	}

	std::vector<std::vector<int>> merged(out.r, std::vector<int>(periods, 0));
	out.copied_from_replica = true;
	out.within_multiplicity = true;
	out.sorted_dominance = true;
	for (std::size_t t = 0; t < periods; ++t)
	{
		if (grand_costs.demand[t] == 0)
		{
			continue;
		}
		Coalition active(0);
		for (std::size_t i = 0; i < n; ++i)
		{
			if (situation.demand()[i][t] > 0)
			{
				active = active | Coalition::singleton(i);
			}
		}
		PeriodAudit audit;
		audit.period = static_cast<int>(t + 1);
		for (std::size_t k = 0; k < out.replicas.size(); ++k)
		{
			if (out.replicas[k].intersects(active))
			{
				audit.sorted.emplace_back(k, reference_unit.at(out.replicas[k])[t]);
			}
		}
		std::stable_sort(audit.sorted.begin(), audit.sorted.end(),
						 [](const auto& a, const auto& b) { return a.second < b.second; });
		if (audit.sorted.size() < out.r)
		{
			// balancedness guarantees at least r candidates
			throw not_balanced("fewer candidates than replicas at period " + std::to_string(t + 1));
		}
		std::map<Coalition, std::size_t> used;
		for (std::size_t j = 0; j < out.r; ++j)
		{
			const Coalition s = out.replicas[audit.sorted[j].first];
			merged[j][t] = out.reference_plans.at(s)[t];
			out.copied_from_replica = out.copied_from_replica && merged[j][t] != 0;
			used[s] += 1;
		}
		for (const auto& [s, count] : used)
		{
			out.within_multiplicity = out.within_multiplicity && count <= multiplicity[s];
		}
		if (audit.sorted.size() > out.r)
		{
			out.sorted_dominance = out.sorted_dominance && audit.sorted[out.r - 1].second <= audit.sorted[out.r].second;
		}
		out.audit.push_back(std::move(audit));
	}

	out.merged_cost = 0;
	for (auto& sources : merged)
	{
		OrderingPlan plan(std::move(sources));
		out.plan_costs.push_back(plan_cost_vector(plan, grand_costs));
		out.merged_cost += plan_total_cost(plan, grand_costs);
		out.plans.push_back(std::move(plan));
	}
	return out;
}

} // namespace sigame

#endif // SIGAME_CORETOOLS_HPP
