#ifndef SIGAME_ALLOCATION_HPP
#define SIGAME_ALLOCATION_HPP

#include <sigame/errors.hpp>
#include <sigame/game.hpp>
#include <sigame/lp.hpp>
#include <sigame/model.hpp>
#include <sigame/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

/**
 * \file sigame/allocation.hpp
 *
 * Extended Owen points and the consolidated allocation.
 *
 * Every allocation here splits the grand coalition's cost in three parts:
 * variable cost at the grand coalition's unit costs, setups of consolidated
 * periods shared equally among the players whose own plan orders there,
 * and the remaining setups shared in proportion to a weight vector.
 */

namespace sigame {

/// Nonnegative weights with a positive total.
class AlphaWeights
{
public:
	explicit AlphaWeights(RationalVector alpha) : alpha_(std::move(alpha))
	{
		total_ = 0;
		for (const auto& a : alpha_)
		{
			if (a < 0)
			{
				throw invalid_alpha("alpha has a negative component");
			}
			total_ += a;
		}
		if (total_ <= 0)
		{
			throw invalid_alpha("alpha must have a positive total");
		}
	}

	static AlphaWeights uniform(std::size_t n) { return AlphaWeights(RationalVector(n, Rational(1))); }

	const RationalVector& values() const { return alpha_; }
	const Rational& operator[](std::size_t i) const { return alpha_[i]; }
	std::size_t size() const { return alpha_.size(); }
	const Rational& total() const { return total_; }

	Rational of(Coalition s) const
	{
		Rational sum = 0;
		for (std::size_t i : s.members())
		{
			sum += alpha_[i];
		}
		return sum;
	}

private:
	RationalVector alpha_;
	Rational total_;
};

/// Which coalitions define the consolidated periods of a subgame S when
/// building the pmas.
enum class UpsilonReading
{
	/// Witness in S, quantifying over the coalitions inside S (the
	/// consolidated periods of the situation restricted to S).
	sub_situation,
	/// Witness in S, quantifying over every coalition of N containing it.
	grand_scope,
};

/// Allocation vector for every nonempty coalition, in member order.
struct Pmas
{
	std::map<Coalition, RationalVector> vectors;
};

struct PmasViolation
{
	Coalition smaller;
	Coalition larger; ///< equals smaller for efficiency violations
	std::size_t player = 0;
	Rational lhs;
	Rational rhs;
};

struct PmasReport
{
	bool ok = true;
	std::vector<PmasViolation> efficiency;
	std::vector<PmasViolation> monotonicity;
};

struct ConditionViolation
{
	Coalition coalition;
	Rational n_value;
	Rational m_value;
	Rational lhs;
};

struct ConditionReport
{
	bool holds = true;
	std::vector<ConditionViolation> violations;
};

/// N(S): variable cost of S's demand under the grand coalition's plan minus
/// under its own plan.
inline Rational n_of(const SIGame& game, Coalition s)
{
	const auto& es = game.entry(s);
	const auto& en = game.entry(game.grand());
	Rational sum = 0;
	for (std::size_t t = 0; t < game.periods(); ++t)
	{
		sum += (en.unit_costs[t] - es.unit_costs[t]) * es.costs.demand[t];
	}
	return sum;
}

/// Setup cost of a coalition's order periods that are not consolidated.
inline Rational nonconsolidated_setup(const SIGame& game, Coalition s)
{
	const auto& e = game.entry(s);
	const auto& rep = game.consolidated();
	Rational sum = 0;
	for (int t : e.order_periods)
	{
		if (!rep.contains(t))
		{
			sum += e.costs.setup[static_cast<std::size_t>(t - 1)];
		}
	}
	return sum;
}

/// M(S): non-consolidated setup cost of N minus that of S.
inline Rational m_of(const SIGame& game, Coalition s)
{
	game.entry(s);
	return nonconsolidated_setup(game, game.grand()) - nonconsolidated_setup(game, s);
}

namespace detail {

/// Members of \p s whose stand-alone plan orders in period t.
inline std::vector<std::size_t> forcing_players(const SIGame& game, Coalition s, int t)
{
	std::vector<std::size_t> out;
	for (std::size_t i : s.members())
	{
		if (game.entry(Coalition::singleton(i)).delta[static_cast<std::size_t>(t - 1)] != 0)
		{
			out.push_back(i);
		}
	}
	return out;
}

/// Shares of coalition s (member order): variable cost at s's unit costs
/// plus consolidated setups split over forcing players.  Setup mass of
/// consolidated periods nobody in s forces is returned in \p unassigned.
inline RationalVector consolidated_shares(const SIGame& game, Coalition s, const ConsolidatedReport& periods,
										  Rational& unassigned)
{
	const auto& e = game.entry(s);
	const auto members = s.members();
	RationalVector share(members.size(), 0);
	for (std::size_t j = 0; j < members.size(); ++j)
	{
		const auto& d = game.situation().demand()[members[j]];
		for (std::size_t t = 0; t < game.periods(); ++t)
		{
			share[j] += e.unit_costs[t] * d[t];
		}
	}
	unassigned = 0;
	for (int t : periods.upsilon)
	{
		const Rational& k = e.costs.setup[static_cast<std::size_t>(t - 1)];
		const auto forcing = forcing_players(game, s, t);
		if (forcing.empty())
		{
			unassigned += k;
			continue;
		}
		const Rational part = k / static_cast<long long>(forcing.size());
		for (std::size_t j = 0; j < members.size(); ++j)
		{
			if (std::find(forcing.begin(), forcing.end(), members[j]) != forcing.end())
			{
				share[j] += part;
			}
		}
	}
	return share;
}

} // namespace detail

/// Extended Owen point omega(alpha).  Setups of consolidated periods that
/// no player forces on its own go to the alpha-proportional part.
inline Allocation extended_owen(const SIGame& game, const AlphaWeights& alpha)
{
	if (alpha.size() != game.players())
	{
		throw invalid_alpha("alpha has wrong dimension");
	}
	Rational unassigned;
	Allocation x = detail::consolidated_shares(game, game.grand(), game.consolidated(), unassigned);
	const Rational residual = nonconsolidated_setup(game, game.grand()) + unassigned;
	if (residual != 0)
	{
		for (std::size_t i = 0; i < x.size(); ++i)
		{
			x[i] += residual * alpha[i] / alpha.total();
		}
	}
	return x;
}

/// Owen point of the grand coalition: its unit costs times each player's
/// demand.
inline Allocation owen_point(const SIGame& game)
{
	const auto& en = game.entry(game.grand());
	Allocation x(game.players(), 0);
	for (std::size_t i = 0; i < game.players(); ++i)
	{
		for (std::size_t t = 0; t < game.periods(); ++t)
		{
			x[i] += en.unit_costs[t] * game.situation().demand()[i][t];
		}
	}
	return x;
}

inline Allocation psi(const SIGame& game)
{
	if (!game.consolidated().is_consolidated)
	{
		throw not_consolidated("psi is defined for consolidated situations only");
	}
	return extended_owen(game, AlphaWeights::uniform(game.players()));
}

/// Checks N(S) <= 0 and M(S) <= 0 for every coalition.
inline ConditionReport check_prop_conditions(const SIGame& game)
{
	ConditionReport rep;
	const Rational grand_m = nonconsolidated_setup(game, game.grand());
	for (Coalition s : game.coalitions())
	{
		const Rational n = n_of(game, s);
		const Rational m = grand_m - nonconsolidated_setup(game, s);
		if (n > 0 || m > 0)
		{
			rep.holds = false;
			rep.violations.push_back({s, n, m, n + m});
		}
	}
	return rep;
}

/// Checks N(S) + alpha(S)/alpha(N) M(S) <= 0 for every coalition.
inline ConditionReport check_corollary_alpha(const SIGame& game, const AlphaWeights& alpha)
{
	if (alpha.size() != game.players())
	{
		throw invalid_alpha("alpha has wrong dimension");
	}
	ConditionReport rep;
	const Rational grand_m = nonconsolidated_setup(game, game.grand());
	for (Coalition s : game.coalitions())
	{
		const Rational n = n_of(game, s);
		const Rational m = grand_m - nonconsolidated_setup(game, s);
		Rational lhs = n + alpha.of(s) / alpha.total() * m;
		if (lhs > 0)
		{
			rep.holds = false;
			rep.violations.push_back({s, n, m, std::move(lhs)});
		}
	}
	return rep;
}

/// Weights satisfying the corollary condition, normalized to sum 1, or
/// nothing when the system is infeasible.  Uniform weights are returned
/// whenever they qualify.
inline std::optional<AlphaWeights> find_alpha(const SIGame& game)
{
	const std::size_t n = game.players();
	const auto uniform = AlphaWeights(RationalVector(n, Rational(1, static_cast<long long>(n))));
	if (check_corollary_alpha(game, uniform).holds)
	{
		return uniform;
	}
	LPProblem lp;
	lp.sense = Sense::maximize;
	lp.objective.assign(n, 0);
	std::vector<std::pair<std::size_t, Rational>> all;
	for (std::size_t i = 0; i < n; ++i)
	{
		all.emplace_back(i, Rational(1));
	}
	lp.add(all, Relation::equal, 1);
	const Rational grand_m = nonconsolidated_setup(game, game.grand());
	for (Coalition s : game.coalitions())
	{
		const Rational nv = n_of(game, s);
		const Rational mv = grand_m - nonconsolidated_setup(game, s);
		// N(S) + M(S) alpha(S) <= 0
		std::vector<std::pair<std::size_t, Rational>> terms;
		if (mv != 0)
		{
			for (std::size_t i : s.members())
			{
				terms.emplace_back(i, mv);
			}
		}
		lp.add(std::move(terms), Relation::less_equal, -nv);
	}
	const auto res = lp_solve(lp);
	if (res.status != LPStatus::optimal)
	{
		return std::nullopt;
	}
	return AlphaWeights(res.x);
}

/// y^S for every coalition: the consolidated allocation of each subgame,
/// with unit costs and setups of S itself.
inline Pmas build_pmas(const SIGame& game, UpsilonReading reading = UpsilonReading::sub_situation)
{
	if (!game.consolidated().is_consolidated)
	{
		throw not_consolidated("pmas construction needs a consolidated situation");
	}
	Pmas out;
	for (Coalition s : game.coalitions())
	{
		const ConsolidatedReport periods =
			consolidated_periods(game, s, reading == UpsilonReading::sub_situation ? s : game.grand());
		Rational unassigned;
		out.vectors.emplace(s, detail::consolidated_shares(game, s, periods, unassigned));
	}
	return out;
}

/// Efficiency of every y^S and monotonicity y_i^S >= y_i^R over every
/// nested pair S subset R.
inline PmasReport verify_pmas(const SIGame& game, const Pmas& pmas)
{
	const auto all = game.coalitions();
	for (Coalition s : all)
	{
		const auto it = pmas.vectors.find(s);
		if (it == pmas.vectors.end() || it->second.size() != s.size())
		{
			throw incomplete_pmas("pmas is missing coalition " + s.to_string());
		}
	}
	PmasReport rep;
	auto share = [&](Coalition s, std::size_t player) -> const Rational& {
		const auto members = s.members();
		const auto pos = static_cast<std::size_t>(std::find(members.begin(), members.end(), player) - members.begin());
		return pmas.vectors.at(s)[pos];
	};
	for (Coalition s : all)
	{
		Rational sum = 0;
		for (const auto& v : pmas.vectors.at(s))
		{
			sum += v;
		}
		if (sum != game.value(s))
		{
			rep.ok = false;
			rep.efficiency.push_back({s, s, 0, sum, game.value(s)});
		}
	}
	for (Coalition r : all)
	{
		const auto rm = r.mask();
		for (auto sub = (rm - 1) & rm; sub != 0; sub = (sub - 1) & rm)
		{
			const Coalition s(sub);
			for (std::size_t i : s.members())
			{
				const Rational& small = share(s, i);
				const Rational& large = share(r, i);
				if (small < large)
				{
					rep.ok = false;
					rep.monotonicity.push_back({s, r, i, small, large});
				}
			}
		}
	}
	return rep;
}

} // namespace sigame

#endif // SIGAME_ALLOCATION_HPP
