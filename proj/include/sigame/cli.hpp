#ifndef SIGAME_CLI_HPP
#define SIGAME_CLI_HPP

#include <sigame/allocation.hpp>
#include <sigame/coretools.hpp>
#include <sigame/errors.hpp>
#include <sigame/game.hpp>
#include <sigame/io.hpp>
#include <sigame/model.hpp>
#include <sigame/rational.hpp>
#include <sigame/solver.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

/**
 * \file sigame/cli.hpp
 *
 * Command-line front end.  run() is the whole program minus main() so it can
 * be driven in-process by tests.
 *
 * Exit codes: 0 success, 2 invalid input, 3 a guaranteed property failed
 * (a reproducer is written to the error stream), 64 usage error.
 */

namespace sigame::cli {

using json = nlohmann::json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_assertion = 3;
inline constexpr int exit_usage = 64;

/// Raised when a property that must hold for every instance does not.
class assertion_failure : public error
{
public:
	using error::error;
};

struct Limits
{
	std::size_t max_players = 16;
	std::size_t max_r = default_r_cap;
};

/// Caps from SIGAME_MAX_PLAYERS and SIGAME_MAX_R when set.
inline Limits limits_from_env()
{
	Limits l;
	auto read = [](const char* name, std::size_t& target) {
		if (const char* v = std::getenv(name); v != nullptr && *v != '\0')
		{
			try
			{
				target = static_cast<std::size_t>(std::stoull(v));
			}
			catch (const std::exception&)
			{
				throw domain_error(std::string(name) + " must be a positive integer");
			}
		}
	};
	read("SIGAME_MAX_PLAYERS", l.max_players);
	read("SIGAME_MAX_R", l.max_r);
	return l;
}

inline RationalVector parse_rational_list(const std::string& text, const char* what)
{
	RationalVector out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		try
		{
			out.push_back(parse_rational(item));
		}
		catch (const parse_error& e)
		{
			throw parse_error(std::string(what) + ": " + e.what());
		}
	}
	return out;
}

inline Coalition parse_coalition_list(const std::string& text, std::size_t n)
{
	json members = json::array();
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		try
		{
			members.push_back(std::stoll(item));
		}
		catch (const std::exception&)
		{
			throw parse_error("--coalition: '" + item + "' is not a player number");
		}
	}
	return io::coalition_from_json(members, n, "--coalition");
}

// ---- report pieces ------------------------------------------------------

inline json coalition_json(Coalition s)
{
	return io::coalition_to_json(s);
}

inline json plan_json(const OrderingPlan& p)
{
	return p.sources;
}

inline json entry_json(const SIGame& game, const CoalitionEntry& e, bool with_nm)
{
	json j;
	j["coalition"] = coalition_json(e.coalition);
	j["mask"] = e.coalition.mask();
	j["demand"] = e.costs.demand;
	j["purchase"] = io::to_json(e.costs.purchase);
	j["holding"] = io::to_json(e.costs.holding);
	j["backlog"] = io::to_json(e.costs.backlog);
	j["setup"] = io::to_json(e.costs.setup);
	j["plan"] = plan_json(e.plan);
	j["unit_costs"] = io::to_json(e.unit_costs);
	j["order_periods"] = e.order_periods;
	j["value"] = io::to_json(e.value);
	if (with_nm)
	{
		j["N"] = io::to_json(n_of(game, e.coalition));
		j["M"] = io::to_json(m_of(game, e.coalition));
	}
	return j;
}

inline json game_json(const SIGame& game, bool with_nm)
{
	json rows = json::array();
	for (Coalition s : game.coalitions())
	{
		rows.push_back(entry_json(game, game.entry(s), with_nm));
	}
	return rows;
}

inline json consolidated_json(const ConsolidatedReport& rep)
{
	json w = json::object();
	for (const auto& [t, who] : rep.witnesses)
	{
		json players = json::array();
		for (std::size_t i : who)
		{
			players.push_back(i + 1);
		}
		w[std::to_string(t)] = players;
	}
	return json{{"upsilon", rep.upsilon}, {"witnesses", w}, {"is_consolidated", rep.is_consolidated}};
}

inline json condition_json(const ConditionReport& rep)
{
	json v = json::array();
	for (const auto& c : rep.violations)
	{
		v.push_back({{"coalition", coalition_json(c.coalition)},
					 {"N", io::to_json(c.n_value)},
					 {"M", io::to_json(c.m_value)},
					 {"lhs", io::to_json(c.lhs)}});
	}
	return json{{"holds", rep.holds}, {"violations", v}};
}

inline json core_json(const CoreReport& rep, const Allocation& x)
{
	json v = json::array();
	for (Coalition s : rep.violations)
	{
		v.push_back(coalition_json(s));
	}
	return json{{"allocation", io::to_json(x)},
				{"in_core", rep.in_core},
				{"efficient", rep.efficient},
				{"total", io::to_json(rep.total)},
				{"violations", v}};
}

inline json pmas_json(const Pmas& pmas)
{
	json rows = json::array();
	for (const auto& [s, y] : pmas.vectors)
	{
		rows.push_back({{"coalition", coalition_json(s)}, {"mask", s.mask()}, {"shares", io::to_json(y)}});
	}
	return rows;
}

inline json pmas_report_json(const PmasReport& rep)
{
	json eff = json::array();
	for (const auto& v : rep.efficiency)
	{
		eff.push_back({{"coalition", coalition_json(v.smaller)}, {"sum", io::to_json(v.lhs)}, {"value", io::to_json(v.rhs)}});
	}
	json mono = json::array();
	for (const auto& v : rep.monotonicity)
	{
		mono.push_back({{"smaller", coalition_json(v.smaller)},
						{"larger", coalition_json(v.larger)},
						{"player", v.player + 1},
						{"smaller_share", io::to_json(v.lhs)},
						{"larger_share", io::to_json(v.rhs)}});
	}
	return json{{"ok", rep.ok}, {"efficiency_violations", eff}, {"monotonicity_violations", mono}};
}

// ---- human-readable tables ----------------------------------------------

inline std::string join(const std::vector<std::string>& parts, const char* sep = " ")
{
	std::string out;
	for (std::size_t i = 0; i < parts.size(); ++i)
	{
		out += (i ? sep : "") + parts[i];
	}
	return out;
}

inline std::string render(const RationalVector& v)
{
	std::vector<std::string> parts;
	for (const auto& q : v)
	{
		parts.push_back(to_string(q));
	}
	return "(" + join(parts, ", ") + ")";
}

inline std::string render(const std::vector<int>& v)
{
	std::vector<std::string> parts;
	for (int x : v)
	{
		parts.push_back(std::to_string(x));
	}
	return "(" + join(parts, ", ") + ")";
}

inline void print_game_table(std::ostream& os, const SIGame& game, bool with_nm)
{
	os << std::left << std::setw(12) << "S" << std::setw(18) << "plan" << std::setw(24) << "P^S(plan)"
	   << std::setw(10) << "c(S)";
	if (with_nm)
	{
		os << std::setw(8) << "N(S)" << std::setw(8) << "M(S)";
	}
	os << "\n";
	for (Coalition s : game.coalitions())
	{
		const auto& e = game.entry(s);
		os << std::setw(12) << s.to_string() << std::setw(18) << render(e.plan.sources) << std::setw(24)
		   << render(e.unit_costs) << std::setw(10) << to_string(e.value);
		if (with_nm)
		{
			os << std::setw(8) << to_string(n_of(game, s)) << std::setw(8) << to_string(m_of(game, s));
		}
		os << "\n";
	}
}

// ---- commands -----------------------------------------------------------

struct Options
{
	std::string input;
	std::string coalition;
	std::string alpha;
	std::string allocation;
	std::string collection;
	bool pretty = false;
	unsigned jobs = 1;
};

struct Context
{
	const Options& opt;
	Limits limits;
	std::ostream& out;
	std::ostream& err;
};

inline SIGame load_game(const Context& ctx, const SISituation& situation)
{
	return build_game(situation, GameOptions{ctx.limits.max_players, ctx.opt.jobs});
}

inline void emit(const Context& ctx, const json& doc)
{
	ctx.out << doc.dump(2) << "\n";
}

inline void require(bool ok, const std::string& what)
{
	if (!ok)
	{
		throw assertion_failure(what);
	}
}

inline int cmd_solve(const Context& ctx)
{
	const auto situation = io::parse_situation(ctx.opt.input);
	const Coalition s = ctx.opt.coalition.empty() ? Coalition::grand(situation.players())
												  : parse_coalition_list(ctx.opt.coalition, situation.players());
	const auto costs = coalition_costs(situation, s);
	const auto res = solve(costs);
	if (ctx.opt.pretty)
	{
		ctx.out << "coalition " << s.to_string() << "\nplan " << render(res.plan.sources) << "\nunit costs "
				<< render(plan_cost_vector(res.plan, costs)) << "\norder periods " << render(res.order_periods)
				<< "\nvalue " << to_string(res.value) << "\n";
		return exit_ok;
	}
	emit(ctx, json{{"coalition", coalition_json(s)},
				   {"mask", s.mask()},
				   {"plan", plan_json(res.plan)},
				   {"unit_costs", io::to_json(plan_cost_vector(res.plan, costs))},
				   {"order_periods", res.order_periods},
				   {"value", io::to_json(res.value)}});
	return exit_ok;
}

inline int cmd_game(const Context& ctx)
{
	const auto game = load_game(ctx, io::parse_situation(ctx.opt.input));
	if (ctx.opt.pretty)
	{
		print_game_table(ctx.out, game, false);
		return exit_ok;
	}
	emit(ctx, json{{"players", game.players()}, {"periods", game.periods()}, {"game", game_json(game, false)}});
	return exit_ok;
}

inline AlphaWeights alpha_option(const Context& ctx, std::size_t n)
{
	if (ctx.opt.alpha.empty())
	{
		return AlphaWeights::uniform(n);
	}
	auto v = parse_rational_list(ctx.opt.alpha, "--alpha");
	if (v.size() != n)
	{
		throw invalid_alpha("--alpha needs " + std::to_string(n) + " weights");
	}
	return AlphaWeights(std::move(v));
}

inline int cmd_owen(const Context& ctx)
{
	const auto game = load_game(ctx, io::parse_situation(ctx.opt.input));
	const auto alpha = alpha_option(ctx, game.players());
	const auto omega = extended_owen(game, alpha);
	const auto core = core_check(game, omega);
	const auto corollary = check_corollary_alpha(game, alpha);
	if (corollary.holds)
	{
		require(core.in_core, "extended Owen point satisfies the sufficient condition but is not in the core");
	}
	require(core.efficient, "extended Owen point is not efficient");
	if (ctx.opt.pretty)
	{
		ctx.out << "alpha " << render(alpha.values()) << "\nomega " << render(omega) << "\ncorollary condition "
				<< (corollary.holds ? "holds" : "fails") << "\nin core " << (core.in_core ? "yes" : "no") << "\n";
		return exit_ok;
	}
	emit(ctx, json{{"alpha", io::to_json(alpha.values())},
				   {"omega", io::to_json(omega)},
				   {"corollary", condition_json(corollary)},
				   {"core_check", core_json(core, omega)}});
	return exit_ok;
}

inline int cmd_core_check(const Context& ctx)
{
	const auto game = load_game(ctx, io::parse_situation(ctx.opt.input));
	const auto x = parse_rational_list(ctx.opt.allocation, "--allocation");
	const auto rep = core_check(game, x);
	if (ctx.opt.pretty)
	{
		ctx.out << "allocation " << render(x) << "\n" << (rep.in_core ? "in core" : "not in core") << "\n";
		for (Coalition s : rep.violations)
		{
			ctx.out << "  violated by " << s.to_string() << "\n";
		}
		if (!rep.efficient)
		{
			ctx.out << "  total " << to_string(rep.total) << " != c(N) " << to_string(game.value(game.grand()))
					<< "\n";
		}
		return exit_ok;
	}
	emit(ctx, core_json(rep, x));
	return exit_ok;
}

inline int cmd_pmas(const Context& ctx)
{
	const auto game = load_game(ctx, io::parse_situation(ctx.opt.input));
	const auto pmas = build_pmas(game);
	const auto rep = verify_pmas(game, pmas);
	require(rep.ok, "pmas construction failed verification");
	require(pmas.vectors.at(game.grand()) == psi(game), "pmas grand-coalition vector differs from psi");
	if (ctx.opt.pretty)
	{
		for (const auto& [s, y] : pmas.vectors)
		{
			ctx.out << std::left << std::setw(12) << s.to_string() << render(y) << "\n";
		}
		return exit_ok;
	}
	emit(ctx, json{{"pmas", pmas_json(pmas)}, {"check", pmas_report_json(rep)}});
	return exit_ok;
}

inline int cmd_lemma1(const Context& ctx)
{
	const auto situation = io::parse_situation(ctx.opt.input);
	const auto collection = io::collection_from_json(
		io::parse_json_text(io::read_file(ctx.opt.collection), ctx.opt.collection), situation.players());
	const auto res = lemma1_plans(situation, collection, ctx.limits.max_r);
	const auto game = load_game(ctx, situation);
	const auto ineq = balanced_inequality(game, collection);
	require(res.copied_from_replica && res.within_multiplicity && res.sorted_dominance,
			"merged plans violate the construction's conditions");
	require(ineq.holds, "balanced collection violates sum lambda_S c(S) >= c(N)");
	for (const auto& plan : res.plans)
	{
		require(plan_total_cost(plan, coalition_costs(situation, game.grand())) >= res.grand_value,
				"a merged plan is cheaper than the optimum");
	}
	if (ctx.opt.pretty)
	{
		ctx.out << "r = " << res.r << "\n";
		for (std::size_t j = 0; j < res.plans.size(); ++j)
		{
			ctx.out << "plan " << (j + 1) << " " << render(res.plans[j].sources) << "  P^N " << render(res.plan_costs[j])
					<< "\n";
		}
		ctx.out << "sum lambda_S c(S) = " << to_string(ineq.weighted_sum) << " >= c(N) = " << to_string(ineq.grand_value)
				<< " (slack " << to_string(ineq.slack) << ")\n";
		return exit_ok;
	}
	json refs = json::array();
	for (const auto& [s, plan] : res.reference_plans)
	{
		refs.push_back({{"coalition", coalition_json(s)}, {"plan", plan_json(plan)}});
	}
	json plans = json::array();
	for (std::size_t j = 0; j < res.plans.size(); ++j)
	{
		plans.push_back({{"plan", plan_json(res.plans[j])}, {"unit_costs", io::to_json(res.plan_costs[j])}});
	}
	json audit = json::array();
	for (const auto& a : res.audit)
	{
		json sorted = json::array();
		for (const auto& [k, cost] : a.sorted)
		{
			sorted.push_back({{"coalition", coalition_json(res.replicas[k])}, {"unit_cost", io::to_json(cost)}});
		}
		audit.push_back({{"period", a.period}, {"candidates", sorted}});
	}
	emit(ctx, json{{"r", res.r},
				   {"reference_plans", refs},
				   {"plans", plans},
				   {"audit", audit},
				   {"conditions",
					{{"copied_from_replica", res.copied_from_replica},
					 {"within_multiplicity", res.within_multiplicity},
					 {"sorted_dominance", res.sorted_dominance}}},
				   {"replica_cost", io::to_json(res.replica_cost)},
				   {"merged_cost", io::to_json(res.merged_cost)},
				   {"balanced_inequality",
					{{"weighted_sum", io::to_json(ineq.weighted_sum)},
					 {"grand_value", io::to_json(ineq.grand_value)},
					 {"slack", io::to_json(ineq.slack)},
					 {"holds", ineq.holds}}}});
	return exit_ok;
}

inline int cmd_reduce(const Context& ctx)
{
	const auto reduced = reduce_situation(io::parse_situation(ctx.opt.input));
	emit(ctx, io::situation_to_json(reduced));
	return exit_ok;
}

inline int cmd_analyze(const Context& ctx)
{
	const auto situation = io::parse_situation(ctx.opt.input);
	const auto game = load_game(ctx, situation);
	const std::size_t n = game.players();
	const auto& grand = game.entry(game.grand());

	for (Coalition s : game.coalitions())
	{
		const auto& e = game.entry(s);
		require(e.value == plan_total_cost(e.plan, e.costs), "c(S) differs from its plan's cost for " + s.to_string());
	}
	for (Coalition s : game.coalitions())
	{
		const auto rest = Coalition(game.grand().mask() & ~s.mask());
		for (auto r = rest.mask(); r != 0; r = (r - 1) & rest.mask())
		{
			require(game.value(s | Coalition(r)) <= game.value(s) + game.value(Coalition(r)),
					"subadditivity fails for " + s.to_string() + " and " + Coalition(r).to_string());
		}
	}

	json doc;
	doc["players"] = n;
	doc["periods"] = game.periods();
	doc["game"] = game_json(game, true);
	doc["consolidated"] = consolidated_json(game.consolidated());

	const auto prop = check_prop_conditions(game);
	doc["prop_conditions"] = condition_json(prop);

	const auto alpha = alpha_option(ctx, n);
	const auto corollary = check_corollary_alpha(game, alpha);
	const auto omega = extended_owen(game, alpha);
	const auto omega_core = core_check(game, omega);
	require(omega_core.efficient, "extended Owen point is not efficient");
	if (prop.holds || corollary.holds)
	{
		require(omega_core.in_core, "extended Owen point meets a sufficient condition but is not in the core");
	}
	doc["alpha"] = io::to_json(alpha.values());
	doc["corollary"] = condition_json(corollary);
	doc["omega"] = io::to_json(omega);
	doc["nonconsolidated_setup"] = io::to_json(nonconsolidated_setup(game, game.grand()));
	if (const auto found = find_alpha(game))
	{
		doc["found_alpha"] = io::to_json(found->values());
		require(check_corollary_alpha(game, *found).holds, "find_alpha returned weights failing the condition");
		require(core_check(game, extended_owen(game, *found)).in_core,
				"extended Owen point at found weights is not in the core");
	}
	else
	{
		doc["found_alpha"] = nullptr;
	}

	json checks = json::array();
	checks.push_back(core_json(omega_core, omega));

	const auto nonempty = core_nonempty(game);
	require(nonempty.nonempty, "core LP optimum " + to_string(nonempty.optimum) + " is below c(N)");
	const auto witness_check = core_check(game, nonempty.witness);
	require(witness_check.in_core, "core LP witness fails the core check");
	doc["core"] = {{"lp_optimum", io::to_json(nonempty.optimum)},
				   {"grand_value", io::to_json(grand.value)},
				   {"nonempty", nonempty.nonempty},
				   {"witness", io::to_json(nonempty.witness)}};

	if (game.consolidated().is_consolidated)
	{
		const auto p = psi(game);
		const auto psi_core = core_check(game, p);
		require(psi_core.in_core, "psi is not in the core of a consolidated game");
		const auto pmas = build_pmas(game);
		const auto pmas_rep = verify_pmas(game, pmas);
		require(pmas_rep.ok, "pmas construction failed verification");
		require(pmas.vectors.at(game.grand()) == p, "pmas grand-coalition vector differs from psi");
		doc["psi"] = io::to_json(p);
		doc["pmas"] = pmas_json(pmas);
		doc["pmas_check"] = pmas_report_json(pmas_rep);
		checks.push_back(core_json(psi_core, p));
	}
	else
	{
		doc["psi"] = nullptr;
		doc["pmas"] = nullptr;
	}
	doc["core_checks"] = checks;

	if (ctx.opt.pretty)
	{
		print_game_table(ctx.out, game, true);
		const auto& rep = game.consolidated();
		ctx.out << "\nconsolidated periods " << render(rep.upsilon)
				<< (rep.is_consolidated ? " (consolidated situation)" : " (not consolidated)") << "\n";
		ctx.out << "N(S), M(S) <= 0 for all S: " << (prop.holds ? "yes" : "no") << "\n";
		ctx.out << "omega(" << render(alpha.values()) << ") = " << render(omega)
				<< (omega_core.in_core ? "  in core" : "  not in core") << "\n";
		ctx.out << "core LP optimum " << to_string(nonempty.optimum) << ", witness " << render(nonempty.witness)
				<< "\n";
		if (rep.is_consolidated)
		{
			ctx.out << "psi = " << render(psi(game)) << "\n";
			ctx.out << "pmas:\n";
			for (const auto& [s, y] : build_pmas(game).vectors)
			{
				ctx.out << "  " << std::left << std::setw(12) << s.to_string() << render(y) << "\n";
			}
		}
		return exit_ok;
	}
	emit(ctx, doc);
	return exit_ok;
}

/// Writes the failed property and the offending situation as one JSON line.
inline int report_assertion(std::ostream& err, const std::string& what, const std::string& input)
{
	err << "sigame: assertion failed: " << what << "\nreproducer:\n";
	try
	{
		err << io::situation_to_json(io::parse_situation(input)).dump() << "\n";
	}
	catch (const std::exception&)
	{
		err << "(input could not be re-read)\n";
	}
	return exit_assertion;
}

/// Parses arguments and runs one subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
	Options opt;
	CLI::App app{"Setup-inventory cooperative games: lot sizing, allocations and core checks", "sigame"};
	app.require_subcommand(1);
	app.fallthrough();
	app.add_flag("--pretty", opt.pretty, "Print human-readable tables instead of JSON");
	app.add_option("--jobs", opt.jobs, "Worker threads for solving coalitions")->check(CLI::PositiveNumber);

	auto input = [&](CLI::App* sub) { sub->add_option("situation", opt.input, "Situation JSON file")->required(); };

	auto* solve_cmd = app.add_subcommand("solve", "Solve one coalition's lot-sizing problem");
	input(solve_cmd);
	solve_cmd->add_option("--coalition", opt.coalition, "Members, e.g. 1,3 (default: all players)");

	auto* game_cmd = app.add_subcommand("game", "Characteristic function table");
	input(game_cmd);

	auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis");
	input(analyze_cmd);
	analyze_cmd->add_option("--alpha", opt.alpha, "Weights for the extended Owen point (default uniform)");

	auto* owen_cmd = app.add_subcommand("owen", "Extended Owen point for given weights");
	input(owen_cmd);
	owen_cmd->add_option("--alpha", opt.alpha, "Weights, e.g. 1,2,1")->required();

	auto* core_cmd = app.add_subcommand("core-check", "Exact core membership test");
	input(core_cmd);
	core_cmd->add_option("--allocation", opt.allocation, "Shares, e.g. 7,11/2,19/2")->required();

	auto* pmas_cmd = app.add_subcommand("pmas", "Population monotonic allocation scheme");
	input(pmas_cmd);

	auto* lemma_cmd = app.add_subcommand("lemma1", "Merge optimal plans of a balanced collection");
	input(lemma_cmd);
	lemma_cmd->add_option("--collection", opt.collection, "Collection JSON file")->required();

	auto* reduce_cmd = app.add_subcommand("reduce", "Emit the reduced situation");
	input(reduce_cmd);

	std::ostringstream cli_out;
	std::ostringstream cli_err;
	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp&)
	{
		out << app.help();
		return exit_ok;
	}
	catch (const CLI::ParseError& e)
	{
		err << "sigame: " << e.what() << "\n" << app.help();
		return exit_usage;
	}

	Context ctx{opt, {}, out, err};
	try
	{
		ctx.limits = limits_from_env();
		if (*solve_cmd)
		{
			return cmd_solve(ctx);
		}
		if (*game_cmd)
		{
			return cmd_game(ctx);
		}
		if (*analyze_cmd)
		{
			return cmd_analyze(ctx);
		}
		if (*owen_cmd)
		{
			return cmd_owen(ctx);
		}
		if (*core_cmd)
		{
			return cmd_core_check(ctx);
		}
		if (*pmas_cmd)
		{
			return cmd_pmas(ctx);
		}
		if (*lemma_cmd)
		{
			return cmd_lemma1(ctx);
		}
		if (*reduce_cmd)
		{
			return cmd_reduce(ctx);
		}
	}
	catch (const assertion_failure& e)
	{
		return report_assertion(err, e.what(), opt.input);
	}
	catch (const error& e)
	{
		err << "sigame: " << e.what() << "\n";
		return exit_invalid;
	}
	return exit_usage;
}

} // namespace sigame::cli

#endif // SIGAME_CLI_HPP
