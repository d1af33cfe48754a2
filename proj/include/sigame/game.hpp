#ifndef SIGAME_GAME_HPP
#define SIGAME_GAME_HPP

#include <sigame/errors.hpp>
#include <sigame/model.hpp>
#include <sigame/rational.hpp>
#include <sigame/solver.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <thread>
#include <utility>
#include <vector>

namespace sigame {

/// Everything known about one coalition after solving its lot-sizing
/// problem with the canonical tie-break.
struct CoalitionEntry
{
	Coalition coalition;
	CoalitionCosts costs;
	OrderingPlan plan;
	CostPlanVector unit_costs; ///< P^S(sigma^S)
	Rational value;            ///< c(S)
	std::vector<int> order_periods;
	std::vector<int> delta;
};

/// Consolidated periods and the players that force them.
struct ConsolidatedReport
{
	std::vector<int> upsilon;
	/// period -> zero-based players ordering there in every coalition they join
	std::map<int, std::vector<std::size_t>> witnesses;
	bool is_consolidated = false;

	bool contains(int period) const
	{
		return std::binary_search(upsilon.begin(), upsilon.end(), period);
	}
};

namespace detail {

inline CoalitionEntry make_entry(const SISituation& situation, Coalition s)
{
	CoalitionEntry e;
	e.coalition = s;
	e.costs = coalition_costs(situation, s);
	auto res = solve(e.costs);
	e.plan = std::move(res.plan);
	e.value = std::move(res.value);
	e.order_periods = std::move(res.order_periods);
	e.unit_costs = plan_cost_vector(e.plan, e.costs);
	e.delta = delta_vector(e.plan);
	return e;
}

} // namespace detail

class SIGame;

/// Periods t for which some player i in \p within has delta_t(sigma^R) = 1
/// for every R with i in R and R a subset of \p scope.
inline ConsolidatedReport consolidated_periods(const SIGame& game, Coalition within, Coalition scope);

/// The cost game of a situation with the full per-coalition record.
/// Entries are indexed by coalition mask; index 0 is unused (c(empty) = 0).
class SIGame
{
public:
	SIGame(SISituation situation, std::vector<CoalitionEntry> entries)
	: situation_(std::move(situation)), entries_(std::move(entries))
	{
		const Coalition all = Coalition::grand(players());
		report_ = consolidated_periods(*this, all, all);
	}

	const SISituation& situation() const { return situation_; }
	std::size_t players() const { return situation_.players(); }
	std::size_t periods() const { return situation_.periods(); }
	Coalition grand() const { return Coalition::grand(players()); }

	const CoalitionEntry& entry(Coalition s) const
	{
		s.validate(players());
		return entries_[s.mask()];
	}

	const Rational& value(Coalition s) const { return entry(s).value; }

	/// c(S) with c(empty) = 0.
	Rational value_or_zero(Coalition s) const { return s.empty() ? Rational(0) : value(s); }

	const std::vector<CoalitionEntry>& entries() const { return entries_; }

	const ConsolidatedReport& consolidated() const { return report_; }

	/// Nonempty coalitions in mask order.
	std::vector<Coalition> coalitions() const
	{
		std::vector<Coalition> out;
		const auto top = grand().mask();
		for (Coalition::mask_type m = 1; m <= top && m != 0; ++m)
		{
			out.emplace_back(m);
		}
		return out;
	}

private:
	SISituation situation_;
	std::vector<CoalitionEntry> entries_;
	ConsolidatedReport report_;
};

inline ConsolidatedReport consolidated_periods(const SIGame& game, Coalition within, Coalition scope)
{
	const std::size_t periods = game.periods();
	ConsolidatedReport rep;
	for (std::size_t i : within.members())
	{
		std::vector<char> forced(periods, 1);
		const auto scope_mask = scope.mask();
		// all submasks of scope that contain i
		for (auto sub = scope_mask;; sub = (sub - 1) & scope_mask)
		{
			if ((sub >> i) & 1U)
			{
				const auto& delta = game.entries()[sub].delta;
				for (std::size_t t = 0; t < periods; ++t)
				{
					forced[t] = static_cast<char>(forced[t] && delta[t] != 0);
				}
			}
			if (sub == 0)
			{
				break;
			}
		}
		for (std::size_t t = 0; t < periods; ++t)
		{
			if (forced[t] != 0)
			{
				rep.witnesses[static_cast<int>(t + 1)].push_back(i);
			}
		}
	}
	for (const auto& [t, who] : rep.witnesses)
	{
		rep.upsilon.push_back(t);
	}
	rep.is_consolidated = true;
	const auto scope_mask = scope.mask();
	for (auto sub = scope_mask; sub != 0; sub = (sub - 1) & scope_mask)
	{
		for (int t : game.entries()[sub].order_periods)
		{
			if (!rep.contains(t))
			{
				rep.is_consolidated = false;
			}
		}
	}
	return rep;
}

struct GameOptions
{
	std::size_t max_players = 16;
	unsigned jobs = 1;
};

/// Solves every nonempty coalition.  Output does not depend on \c jobs.
inline SIGame build_game(const SISituation& situation, const GameOptions& options = {})
{
	const std::size_t n = situation.players();
	if (n > options.max_players || n > Coalition::max_players)
	{
		throw too_many_players("game has " + std::to_string(n) + " players, cap is "
							   + std::to_string(std::min(options.max_players, Coalition::max_players)));
	}
	const std::size_t count = std::size_t{1} << n;
	std::vector<CoalitionEntry> entries(count);
	const unsigned jobs = std::max(1U, options.jobs);
	if (jobs == 1 || count < 4)
	{
		for (std::size_t m = 1; m < count; ++m)
		{
			entries[m] = detail::make_entry(situation, Coalition(static_cast<Coalition::mask_type>(m)));
		}
	}
	else
	{
		std::vector<std::thread> pool;
		for (unsigned w = 0; w < jobs; ++w)
		{
			pool.emplace_back([&, w] {
				for (std::size_t m = 1 + w; m < count; m += jobs)
				{
					entries[m] = detail::make_entry(situation, Coalition(static_cast<Coalition::mask_type>(m)));
				}
			});
		}
		for (auto& th : pool)
		{
			th.join();
		}
	}
	return SIGame(situation, std::move(entries));
}

/// Situation keeping only the rows of the members of \p s, in member order.
inline SISituation restrict_situation(const SISituation& situation, Coalition s)
{
	s.validate(situation.players());
	DemandMatrix d;
	RationalMatrix k, h, b, p;
	std::vector<std::string> names;
	for (std::size_t i : s.members())
	{
		d.push_back(situation.demand()[i]);
		k.push_back(situation.setup()[i]);
		h.push_back(situation.holding()[i]);
		b.push_back(situation.backlog()[i]);
		p.push_back(situation.purchase()[i]);
		names.push_back(situation.names()[i]);
	}
	return SISituation(std::move(d), std::move(k), std::move(h), std::move(b), std::move(p), std::move(names));
}

/// Restriction of the game to the subsets of \p s, re-indexed so that the
/// j-th member of s becomes player j.  Entries are copied, not re-solved.
inline SIGame subgame(const SIGame& game, Coalition s)
{
	s.validate(game.players());
	const auto members = s.members();
	const std::size_t k = members.size();
	std::vector<CoalitionEntry> entries(std::size_t{1} << k);
	for (std::size_t local = 1; local < entries.size(); ++local)
	{
		Coalition::mask_type parent = 0;
		for (std::size_t j = 0; j < k; ++j)
		{
			if ((local >> j) & 1U)
			{
				parent |= Coalition::mask_type{1} << members[j];
			}
		}
		entries[local] = game.entries()[parent];
		entries[local].coalition = Coalition(static_cast<Coalition::mask_type>(local));
	}
	return SIGame(restrict_situation(game.situation(), s), std::move(entries));
}

/// Every player's cost rows replaced by the grand-coalition minima.
inline SISituation reduce_situation(const SISituation& situation)
{
	const auto grand = coalition_costs(situation, Coalition::grand(situation.players()));
	const std::size_t n = situation.players();
	return SISituation(situation.demand(),
					   RationalMatrix(n, grand.setup),
					   RationalMatrix(n, grand.holding),
					   RationalMatrix(n, grand.backlog),
					   RationalMatrix(n, grand.purchase),
					   situation.names());
}

inline const ConsolidatedReport& consolidated_report(const SIGame& game)
{
	return game.consolidated();
}

inline const std::vector<int>& ordering_periods(const SIGame& game, Coalition s)
{
	return game.entry(s).order_periods;
}

} // namespace sigame

#endif // SIGAME_GAME_HPP
