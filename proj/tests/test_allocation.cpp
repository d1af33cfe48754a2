#include "support.hpp"

#include <gtest/gtest.h>

using namespace sigame;
using namespace testing_support;

namespace {

RationalVector shares(const Pmas& p, std::initializer_list<std::size_t> members)
{
	return p.vectors.at(Coalition::of(members));
}

} // namespace

TEST(Alpha, Validation)
{
	EXPECT_THROW(AlphaWeights(rv({1, -1, 1})), invalid_alpha);
	EXPECT_THROW(AlphaWeights(rv({0, 0})), invalid_alpha);
	const AlphaWeights a(rv({1, 2, 3}));
	EXPECT_EQ(a.total(), Rational(6));
	EXPECT_EQ(a.of(Coalition::of({0, 2})), Rational(4));
}

TEST(NM, CorrelatedExample)
{
	const auto game = build_game(load("ex-cor.json"));
	EXPECT_EQ(n_of(game, Coalition::of({2})), Rational(-11));
	EXPECT_EQ(n_of(game, Coalition::of({1, 2})), Rational(-6));
	EXPECT_EQ(m_of(game, Coalition::of({0})), Rational(2));
	EXPECT_EQ(m_of(game, Coalition::of({0, 2})), Rational(0));
	EXPECT_EQ(n_of(game, game.grand()), Rational(0));
	EXPECT_EQ(m_of(game, game.grand()), Rational(0));
	EXPECT_EQ(nonconsolidated_setup(game, game.grand()), Rational(2));
}

TEST(Conditions, CorrelatedExampleNeedsAlpha)
{
	const auto game = build_game(load("ex-cor.json"));
	const auto prop = check_prop_conditions(game);
	EXPECT_FALSE(prop.holds);
	EXPECT_EQ(check_corollary_alpha(game, AlphaWeights::uniform(3)).holds, true);
	const auto found = find_alpha(game);
	ASSERT_TRUE(found.has_value());
	EXPECT_TRUE(check_corollary_alpha(game, *found).holds);
}

TEST(Conditions, ConsolidatedExampleHolds)
{
	const auto game = build_game(load("ex-cons.json"));
	EXPECT_TRUE(check_prop_conditions(game).holds);
	for (Coalition s : game.coalitions())
	{
		EXPECT_EQ(m_of(game, s), Rational(0));
		EXPECT_LE(n_of(game, s), Rational(0));
	}
}

TEST(ExtendedOwen, CorrelatedBasePlusResidual)
{
	const auto game = build_game(load("ex-cor.json"));
	const auto base = rv({Rational(58, 3), Rational(31, 3), Rational(34, 3)});
	for (const auto& w : {rv({1, 1, 1}), rv({1, 2, 3}), rv({5, 0, 1})})
	{
		const AlphaWeights alpha(w);
		const auto omega = extended_owen(game, alpha);
		for (std::size_t i = 0; i < 3; ++i)
		{
			EXPECT_EQ(omega[i], base[i] + Rational(2) * w[i] / alpha.total());
		}
	}
	EXPECT_THROW(extended_owen(game, AlphaWeights::uniform(2)), invalid_alpha);
}

TEST(ExtendedOwen, PsiOfConsolidatedExample)
{
	const auto game = build_game(load("ex-cons.json"));
	EXPECT_EQ(psi(game), rv({7, Rational(11, 2), Rational(19, 2)}));
	EXPECT_THROW(psi(build_game(load("ex-cor.json"))), not_consolidated);
}

TEST(ExtendedOwen, ZeroSetupReducesToOwenPoint)
{
	std::mt19937_64 rng(41);
	for (int trial = 0; trial < 30; ++trial)
	{
		Shape shape;
		shape.players = 2 + static_cast<std::size_t>(trial % 3);
		shape.periods = 1 + static_cast<std::size_t>(trial % 5);
		shape.zero_setup = true;
		const auto s = random_situation(rng, shape);
		const auto game = build_game(s);
		const auto owen = oracle::owen_formula(s, game.entry(game.grand()).plan.sources);
		EXPECT_EQ(owen_point(game), owen);
		RationalVector w(game.players());
		std::uniform_int_distribution<int> pick(0, 7);
		for (auto& v : w)
		{
			v = 1 + pick(rng);
		}
		EXPECT_EQ(extended_owen(game, AlphaWeights(w)), owen);
	}
}

TEST(Pmas, ConsolidatedExampleTable)
{
	const auto game = build_game(load("ex-cons.json"));
	const auto p = build_pmas(game);
	EXPECT_EQ(shares(p, {0}), rv({8}));
	EXPECT_EQ(shares(p, {1}), rv({12}));
	EXPECT_EQ(shares(p, {2}), rv({20}));
	EXPECT_EQ(shares(p, {0, 1}), rv({7, 6}));
	EXPECT_EQ(shares(p, {0, 2}), rv({7, 10}));
	EXPECT_EQ(shares(p, {1, 2}), rv({Rational(23, 2), Rational(39, 2)}));
	EXPECT_EQ(shares(p, {0, 1, 2}), rv({7, Rational(11, 2), Rational(19, 2)}));
	EXPECT_TRUE(verify_pmas(game, p).ok);
}

TEST(Pmas, SubSituationWitnessesForOneThree)
{
	const auto game = build_game(load("ex-cons.json"));
	const auto s = Coalition::of({0, 2});
	const auto rep = consolidated_periods(game, s, s);
	EXPECT_EQ(rep.upsilon, (std::vector<int>{1, 2}));
	EXPECT_EQ(detail::forcing_players(game, s, 1), (std::vector<std::size_t>{2}));
	EXPECT_EQ(detail::forcing_players(game, s, 2), (std::vector<std::size_t>{0}));
}

TEST(Pmas, VerifierCatchesMutations)
{
	const auto game = build_game(load("ex-cons.json"));
	const auto good = build_pmas(game);

	auto shifted = good;
	shifted.vectors.at(Coalition::of({0, 1}))[0] += 1;
	const auto bad_eff = verify_pmas(game, shifted);
	EXPECT_FALSE(bad_eff.ok);
	EXPECT_FALSE(bad_eff.efficiency.empty());

	auto swapped = good;
	auto& y = swapped.vectors.at(Coalition::of({0, 2}));
	y = rv({9, 8});
	const auto bad_mono = verify_pmas(game, swapped);
	EXPECT_FALSE(bad_mono.ok);
	ASSERT_FALSE(bad_mono.monotonicity.empty());

	auto missing = good;
	missing.vectors.erase(Coalition::of({1}));
	EXPECT_THROW(verify_pmas(game, missing), incomplete_pmas);
	EXPECT_THROW(build_pmas(build_game(load("ex-cor.json"))), not_consolidated);
}

TEST(Pmas, GrandScopeReadingAlsoVerifiesOnExample)
{
	const auto game = build_game(load("ex-cons.json"));
	const auto p = build_pmas(game, UpsilonReading::grand_scope);
	EXPECT_EQ(p.vectors.at(game.grand()), psi(game));
	for (Coalition s : game.coalitions())
	{
		Rational sum = 0;
		for (const auto& v : p.vectors.at(s))
		{
			sum += v;
		}
		EXPECT_EQ(sum, game.value(s));
	}
}
