#include "support.hpp"

#include <gtest/gtest.h>

using namespace sigame;
using namespace testing_support;

TEST(Rational, ParsesIntegersAndFractions)
{
	EXPECT_EQ(parse_rational("7"), Rational(7));
	EXPECT_EQ(parse_rational("-3"), Rational(-3));
	EXPECT_EQ(parse_rational("11/2"), Rational(11, 2));
	EXPECT_EQ(parse_rational(" 4/6 "), Rational(2, 3));
	EXPECT_THROW(parse_rational("1/0"), parse_error);
	EXPECT_THROW(parse_rational("1.5"), parse_error);
	EXPECT_THROW(parse_rational(""), parse_error);
	EXPECT_EQ(to_string(Rational(39, 2)), "39/2");
	EXPECT_EQ(to_decimal(Rational(1, 3), 3), "0.333");
}

TEST(Situation, RejectsBadShapes)
{
	EXPECT_THROW(SISituation({{1, 2}}, {{1}}, {{1, 1}}, {{1, 1}}, {{1, 1}}), invalid_situation);
	EXPECT_THROW(SISituation({{-1}}, {{1}}, {{1}}, {{1}}, {{1}}), invalid_situation);
	EXPECT_THROW(SISituation({{1}}, {{1}}, {{-1}}, {{1}}, {{1}}), invalid_situation);
	const SISituation ok({{1}}, {{1}}, {{1}}, {{1}}, {{1}});
	EXPECT_EQ(ok.names()[0], "P1");
}

TEST(Coalition, MembersAndRendering)
{
	const auto s = Coalition::of({0, 2});
	EXPECT_EQ(s.mask(), 5U);
	EXPECT_EQ(s.size(), 2U);
	EXPECT_EQ(s.to_string(), "{1,3}");
	EXPECT_TRUE(s.is_subset_of(Coalition::grand(3)));
	EXPECT_THROW(Coalition(0).validate(3), invalid_coalition);
	EXPECT_THROW(Coalition::of({3}).validate(3), invalid_coalition);
}

TEST(CoalitionCosts, PoolsDemandAndTakesMinima)
{
	const auto cons = load("ex-cons.json");
	const auto c12 = coalition_costs(cons, Coalition::of({0, 1}));
	EXPECT_EQ(c12.demand, (DemandVector{3, 4, 2}));
	EXPECT_EQ(c12.purchase, rv({1, 1, 1}));
	EXPECT_EQ(c12.setup, rv({1, 1, 5}));

	const auto prop = load("ex-prop.json");
	const auto cn = coalition_costs(prop, Coalition::grand(3));
	EXPECT_EQ(cn.purchase, rv({2, 1, 1}));
	EXPECT_EQ(cn.demand, (DemandVector{11, 10, 4}));
}

TEST(PlanCost, UnitCostsFollowCarryingChains)
{
	const auto lemma = load("ex-lemma.json");
	const auto c12 = coalition_costs(lemma, Coalition::of({0, 1}));
	EXPECT_EQ(plan_cost_vector(OrderingPlan{1, 2, 3, 3}, c12), rv({1, 1, 2, 4}));
	EXPECT_EQ(unit_source_cost(c12, 3, 4), Rational(4));

	const auto cons = load("ex-cons.json");
	const auto c1 = coalition_costs(cons, Coalition::singleton(0));
	EXPECT_EQ(unit_source_cost(c1, 2, 1), Rational(2));
	const auto c23 = coalition_costs(cons, Coalition::of({1, 2}));
	EXPECT_EQ(plan_cost_vector(OrderingPlan{1, 1, 1}, c23), rv({2, 3, 4}));
}

TEST(PlanCost, TotalsMatchHandComputation)
{
	const auto cons = load("ex-cons.json");
	const auto c1 = coalition_costs(cons, Coalition::singleton(0));
	EXPECT_EQ(plan_total_cost(OrderingPlan{2, 2, 2}, c1), Rational(8));
	EXPECT_EQ(plan_total_cost(OrderingPlan{1, 2, 2}, c1), Rational(8));
	const auto c2 = coalition_costs(cons, Coalition::singleton(1));
	EXPECT_EQ(plan_total_cost(OrderingPlan{1, 1, 1}, c2), Rational(12));
	EXPECT_EQ(setup_cost(OrderingPlan{1, 1, 1}, c2), Rational(1));
	EXPECT_EQ(order_periods(OrderingPlan{1, 2, 2}), (std::vector<int>{1, 2}));
	EXPECT_EQ(delta_vector(OrderingPlan{2, 2, 0}), (std::vector<int>{0, 1, 0}));
}

TEST(PlanCost, FeasibilityChecks)
{
	const DemandVector d{1, 0, 2};
	EXPECT_NO_THROW(check_feasible(OrderingPlan{1, 0, 1}, d));
	EXPECT_THROW(check_feasible(OrderingPlan{1, 1, 1}, d), infeasible_plan);
	EXPECT_THROW(check_feasible(OrderingPlan{0, 0, 1}, d), infeasible_plan);
	EXPECT_THROW(check_feasible(OrderingPlan{1, 0, 4}, d), infeasible_plan);
	EXPECT_THROW(check_feasible(OrderingPlan{1, 0}, d), infeasible_plan);
}

TEST(Flows, HandPropagatedSchedule)
{
	const auto cons = load("ex-cons.json");
	const auto c1 = coalition_costs(cons, Coalition::singleton(0));
	const auto f = reconstruct_flows(OrderingPlan{2, 2, 2}, c1.demand);
	EXPECT_EQ(f.order, (DemandVector{0, 5, 0}));
	EXPECT_EQ(f.backlog, (DemandVector{1, 0, 0}));
	EXPECT_EQ(f.inventory, (DemandVector{0, 1, 0}));
	EXPECT_EQ(flow_cost(f, c1), Rational(8));
}

TEST(Flows, CrossingPlansAreRejected)
{
	EXPECT_TRUE(is_crossing(OrderingPlan{2, 1}));
	EXPECT_FALSE(is_crossing(OrderingPlan{1, 1, 3}));
	EXPECT_TRUE(is_crossing(OrderingPlan{1, 3, 1}));
	EXPECT_THROW(reconstruct_flows(OrderingPlan{2, 1}, DemandVector{1, 1}), crossing_plan);
}

TEST(Flows, FlowCostEqualsPlanCostOnRandomPlans)
{
	std::mt19937_64 rng(11);
	int checked = 0;
	for (int trial = 0; trial < 400; ++trial)
	{
		const auto costs = random_costs(rng, 1 + trial % 6, 20, 9);
		const auto periods = static_cast<int>(costs.periods());
		std::uniform_int_distribution<int> src(1, periods);
		std::vector<int> s(costs.periods());
		for (std::size_t t = 0; t < s.size(); ++t)
		{
			s[t] = costs.demand[t] == 0 ? 0 : src(rng);
		}
		const OrderingPlan plan(s);
		if (is_crossing(plan))
		{
			continue;
		}
		const auto flows = reconstruct_flows(plan, costs.demand);
		EXPECT_EQ(flow_cost(flows, costs), plan_total_cost(plan, costs));
		++checked;
	}
	EXPECT_GT(checked, 100);
}

TEST(Flows, OptimalPlansAreNonCrossing)
{
	std::mt19937_64 rng(12);
	for (int trial = 0; trial < 300; ++trial)
	{
		const auto costs = random_costs(rng, 1 + trial % 8, 20, 9);
		const auto res = solve(costs);
		EXPECT_FALSE(is_crossing(res.plan));
		EXPECT_EQ(flow_cost(reconstruct_flows(res.plan, costs.demand), costs), res.value);
	}
}
