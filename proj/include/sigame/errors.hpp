#ifndef SIGAME_ERRORS_HPP
#define SIGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigame {

/// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

#define SIGAME_DEFINE_ERROR(name) \
	class name : public error \
	{ \
	public: \
		using error::error; \
	}

// model
SIGAME_DEFINE_ERROR(invalid_situation);
SIGAME_DEFINE_ERROR(invalid_coalition);
SIGAME_DEFINE_ERROR(infeasible_plan);
SIGAME_DEFINE_ERROR(crossing_plan);

// solver
SIGAME_DEFINE_ERROR(oracle_limit);

// game
SIGAME_DEFINE_ERROR(too_many_players);

// allocation
SIGAME_DEFINE_ERROR(invalid_alpha);
SIGAME_DEFINE_ERROR(not_consolidated);
SIGAME_DEFINE_ERROR(incomplete_pmas);

// coretools
SIGAME_DEFINE_ERROR(invalid_allocation);
SIGAME_DEFINE_ERROR(not_balanced);
SIGAME_DEFINE_ERROR(r_cap_exceeded);
SIGAME_DEFINE_ERROR(invalid_lp);

// io
SIGAME_DEFINE_ERROR(parse_error);
SIGAME_DEFINE_ERROR(schema_error);
SIGAME_DEFINE_ERROR(domain_error);

#undef SIGAME_DEFINE_ERROR

} // namespace sigame

#endif // SIGAME_ERRORS_HPP
