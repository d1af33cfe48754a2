#ifndef SIGAME_LP_HPP
#define SIGAME_LP_HPP

#include <sigame/errors.hpp>
#include <sigame/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

/**
 * \file sigame/lp.hpp
 *
 * Exact two-phase tableau simplex over rationals with Bland's rule.
 *
 * Constraints are given sparsely; the working tableau is dense.  Variables
 * default to x >= 0 and may carry any combination of finite lower and upper
 * bounds, or be free.
 */

namespace sigame {

enum class Relation
{
	less_equal,
	greater_equal,
	equal,
};

enum class Sense
{
	minimize,
	maximize,
};

struct LPConstraint
{
	std::vector<std::pair<std::size_t, Rational>> terms;
	Relation relation = Relation::less_equal;
	Rational rhs;
};

struct LPBound
{
	std::optional<Rational> lower = Rational(0);
	std::optional<Rational> upper;

	static LPBound free() { return LPBound{std::nullopt, std::nullopt}; }
};

struct LPProblem
{
	Sense sense = Sense::maximize;
	RationalVector objective;
	std::vector<LPConstraint> constraints;
	/// Empty means every variable is >= 0.
	std::vector<LPBound> bounds;

	std::size_t variables() const { return objective.size(); }

	void add(std::vector<std::pair<std::size_t, Rational>> terms, Relation rel, Rational rhs)
	{
		constraints.push_back(LPConstraint{std::move(terms), rel, std::move(rhs)});
	}
};

enum class LPStatus
{
	optimal,
	infeasible,
	unbounded,
};

struct LPResult
{
	LPStatus status = LPStatus::infeasible;
	Rational objective;
	RationalVector x;
	/// One multiplier per constraint, for the problem as stated: at an
	/// optimum, objective = sum(dual_i * rhs_i) plus bound contributions.
	RationalVector duals;
};

namespace detail {

/// Tableau in standard form: maximize c'y, A y = b, y >= 0, b >= 0, with an
/// identity basis formed by slack or artificial columns.
class Tableau
{
public:
	Tableau(std::vector<RationalVector> rows, RationalVector rhs, std::vector<std::size_t> basis, std::size_t columns)
	: a_(std::move(rows)), b_(std::move(rhs)), basis_(std::move(basis)), columns_(columns)
	{
	}

	/// Runs the simplex on objective \p cost restricted to columns where
	/// \p allowed is true.  Returns false when unbounded.
	bool optimize(const RationalVector& cost, const std::vector<char>& allowed)
	{
		price(cost);
		for (;;)
		{
			// Bland: lowest-index improving column
			std::size_t enter = columns_;
			for (std::size_t j = 0; j < columns_; ++j)
			{
				if (allowed[j] != 0 && z_[j] < 0)
				{
					enter = j;
					break;
				}
			}
			if (enter == columns_)
			{
				return true;
			}
			std::size_t leave = a_.size();
			Rational best_ratio;
			for (std::size_t i = 0; i < a_.size(); ++i)
			{
				if (a_[i][enter] > 0)
				{
					Rational ratio = b_[i] / a_[i][enter];
					if (leave == a_.size() || ratio < best_ratio
						|| (ratio == best_ratio && basis_[i] < basis_[leave]))
					{
						leave = i;
						best_ratio = std::move(ratio);
					}
				}
			}
			if (leave == a_.size())
			{
				return false;
			}
			pivot(leave, enter);
		}
	}

	void pivot(std::size_t row, std::size_t col)
	{
		const Rational piv = a_[row][col];
		for (auto& v : a_[row])
		{
			if (v != 0)
			{
				v /= piv;
			}
		}
		b_[row] /= piv;
		for (std::size_t i = 0; i < a_.size(); ++i)
		{
			if (i == row || a_[i][col] == 0)
			{
				continue;
			}
			const Rational f = a_[i][col];
			for (std::size_t j = 0; j < columns_; ++j)
			{
				if (a_[row][j] != 0)
				{
					a_[i][j] -= f * a_[row][j];
				}
			}
			b_[i] -= f * b_[row];
		}
		if (z_[col] != 0)
		{
			const Rational f = z_[col];
			for (std::size_t j = 0; j < columns_; ++j)
			{
				if (a_[row][j] != 0)
				{
					z_[j] -= f * a_[row][j];
				}
			}
			z_value_ -= f * b_[row];
		}
		basis_[row] = col;
	}

	/// Reduced-cost row z_j = c_B B^-1 A_j - c_j for the given cost.
	void price(const RationalVector& cost)
	{
		z_.assign(columns_, 0);
		z_value_ = 0;
		for (std::size_t j = 0; j < columns_; ++j)
		{
			z_[j] = -cost[j];
		}
		for (std::size_t i = 0; i < a_.size(); ++i)
		{
			const Rational& cb = cost[basis_[i]];
			if (cb == 0)
			{
				continue;
			}
			for (std::size_t j = 0; j < columns_; ++j)
			{
				if (a_[i][j] != 0)
				{
					z_[j] += cb * a_[i][j];
				}
			}
			z_value_ += cb * b_[i];
		}
	}

	const std::vector<RationalVector>& rows() const { return a_; }
	const RationalVector& rhs() const { return b_; }
	const std::vector<std::size_t>& basis() const { return basis_; }
	const RationalVector& reduced() const { return z_; }
	const Rational& value() const { return z_value_; }

private:
	std::vector<RationalVector> a_;
	RationalVector b_;
	std::vector<std::size_t> basis_;
	std::size_t columns_;
	RationalVector z_;
	Rational z_value_;
};

} // namespace detail

inline LPResult lp_solve(const LPProblem& problem)
{
	const std::size_t nvars = problem.variables();
	if (!problem.bounds.empty() && problem.bounds.size() != nvars)
	{
		throw invalid_lp("bounds do not match variable count");
	}
	for (const auto& con : problem.constraints)
	{
		for (const auto& [j, coef] : con.terms)
		{
			if (j >= nvars)
			{
				throw invalid_lp("constraint references unknown variable");
			}
		}
	}

	// Map each original variable to x = offset + sign*y_pos (- y_neg when free).
	struct VarMap
	{
		Rational offset;
		int sign = 1;
		std::size_t pos = 0;
		std::optional<std::size_t> neg;
	};
	std::vector<VarMap> vars(nvars);
	std::size_t ycount = 0;
	std::vector<LPConstraint> rows = problem.constraints;
	for (std::size_t j = 0; j < nvars; ++j)
	{
		const LPBound bound = problem.bounds.empty() ? LPBound{} : problem.bounds[j];
		if (bound.lower && bound.upper && *bound.upper < *bound.lower)
		{
			return LPResult{LPStatus::infeasible, 0, {}, {}};
		}
		VarMap& v = vars[j];
		v.pos = ycount++;
		if (bound.lower)
		{
			v.offset = *bound.lower;
			if (bound.upper)
			{
				rows.push_back(LPConstraint{{{j, Rational(1)}}, Relation::less_equal, *bound.upper});
			}
		}
		else if (bound.upper)
		{
			v.offset = *bound.upper;
			v.sign = -1;
		}
		else
		{
			v.neg = ycount++;
		}
	}

	// Substitute into rows: sum a_j x_j = sum a_j (offset + sign y) ...
	const std::size_t m = rows.size();
	std::vector<RationalVector> dense(m, RationalVector(ycount, 0));
	RationalVector rhs(m);
	std::vector<int> row_sign(m, 1);
	std::vector<Relation> rel(m);
	for (std::size_t i = 0; i < m; ++i)
	{
		Rational r = rows[i].rhs;
		for (const auto& [j, coef] : rows[i].terms)
		{
			const VarMap& v = vars[j];
			r -= coef * v.offset;
			dense[i][v.pos] += coef * v.sign;
			if (v.neg)
			{
				dense[i][*v.neg] -= coef;
			}
		}
		rel[i] = rows[i].relation;
		if (r < 0)
		{
			r = -r;
			for (auto& c : dense[i])
			{
				c = -c;
			}
			row_sign[i] = -1;
			if (rel[i] == Relation::less_equal)
			{
				rel[i] = Relation::greater_equal;
			}
			else if (rel[i] == Relation::greater_equal)
			{
				rel[i] = Relation::less_equal;
			}
		}
		rhs[i] = std::move(r);
	}

	// Column layout: y | slack/surplus | artificial
	std::size_t slack_count = 0;
	for (std::size_t i = 0; i < m; ++i)
	{
		slack_count += rel[i] != Relation::equal ? 1 : 0;
	}
	std::size_t art_count = 0;
	for (std::size_t i = 0; i < m; ++i)
	{
		art_count += rel[i] != Relation::less_equal ? 1 : 0;
	}
	const std::size_t cols = ycount + slack_count + art_count;
	std::vector<RationalVector> a(m, RationalVector(cols, 0));
	std::vector<std::size_t> basis(m);
	std::vector<std::size_t> identity_col(m);
	std::vector<char> is_artificial(cols, 0);
	std::size_t next_slack = ycount;
	std::size_t next_art = ycount + slack_count;
	for (std::size_t i = 0; i < m; ++i)
	{
		for (std::size_t j = 0; j < ycount; ++j)
		{
			a[i][j] = std::move(dense[i][j]);
		}
		if (rel[i] == Relation::less_equal)
		{
			a[i][next_slack] = 1;
			basis[i] = next_slack;
			identity_col[i] = next_slack++;
		}
		else
		{
			if (rel[i] == Relation::greater_equal)
			{
				a[i][next_slack++] = -1;
			}
			a[i][next_art] = 1;
			is_artificial[next_art] = 1;
			basis[i] = next_art;
			identity_col[i] = next_art++;
		}
	}

	detail::Tableau tab(std::move(a), std::move(rhs), std::move(basis), cols);

	if (art_count > 0)
	{
		RationalVector phase1(cols, 0);
		for (std::size_t j = 0; j < cols; ++j)
		{
			if (is_artificial[j] != 0)
			{
				phase1[j] = -1;
			}
		}
		tab.optimize(phase1, std::vector<char>(cols, 1));
		if (tab.value() < 0)
		{
			return LPResult{LPStatus::infeasible, 0, {}, {}};
		}
		// Drive zero-level artificials out where a real column allows it;
		// rows where none does are redundant and stay inert.
		for (std::size_t i = 0; i < m; ++i)
		{
			if (is_artificial[tab.basis()[i]] == 0)
			{
				continue;
			}
			for (std::size_t j = 0; j < cols; ++j)
			{
				if (is_artificial[j] == 0 && tab.rows()[i][j] != 0)
				{
					tab.pivot(i, j);
					break;
				}
			}
		}
	}

	// Phase 2 over y with the original objective as a maximization.
	const int sense_sign = problem.sense == Sense::maximize ? 1 : -1;
	RationalVector cost(cols, 0);
	for (std::size_t j = 0; j < nvars; ++j)
	{
		const VarMap& v = vars[j];
		const Rational c = problem.objective[j] * sense_sign;
		cost[v.pos] += c * v.sign;
		if (v.neg)
		{
			cost[*v.neg] -= c;
		}
	}
	std::vector<char> allowed(cols, 1);
	for (std::size_t j = 0; j < cols; ++j)
	{
		allowed[j] = static_cast<char>(is_artificial[j] == 0);
	}
	if (!tab.optimize(cost, allowed))
	{
		return LPResult{LPStatus::unbounded, 0, {}, {}};
	}

	RationalVector y(cols, 0);
	for (std::size_t i = 0; i < m; ++i)
	{
		y[tab.basis()[i]] = tab.rhs()[i];
	}
	LPResult res;
	res.status = LPStatus::optimal;
	res.x.resize(nvars);
	for (std::size_t j = 0; j < nvars; ++j)
	{
		const VarMap& v = vars[j];
		res.x[j] = v.offset + y[v.pos] * v.sign;
		if (v.neg)
		{
			res.x[j] -= y[*v.neg];
		}
	}
	res.objective = 0;
	for (std::size_t j = 0; j < nvars; ++j)
	{
		res.objective += problem.objective[j] * res.x[j];
	}
	// z at an identity column with zero cost equals (c_B B^-1)_i.
	res.duals.resize(problem.constraints.size());
	for (std::size_t i = 0; i < problem.constraints.size(); ++i)
	{
		res.duals[i] = tab.reduced()[identity_col[i]] * row_sign[i] * sense_sign;
	}
	return res;
}

} // namespace sigame

#endif // SIGAME_LP_HPP
