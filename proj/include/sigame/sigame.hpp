#ifndef SIGAME_SIGAME_HPP
#define SIGAME_SIGAME_HPP

#include <sigame/allocation.hpp>
#include <sigame/coretools.hpp>
#include <sigame/errors.hpp>
#include <sigame/game.hpp>
#include <sigame/lp.hpp>
#include <sigame/model.hpp>
#include <sigame/rational.hpp>
#include <sigame/solver.hpp>

#endif // SIGAME_SIGAME_HPP
