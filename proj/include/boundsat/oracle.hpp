#ifndef BOUNDSAT_ORACLE_HPP
#define BOUNDSAT_ORACLE_HPP

#include <optional>

#include "boundsat/types.hpp"

namespace boundsat {

enum class EvalResult { Sat, Unsat, Undetermined };

/// Truth of a formula under a (possibly partial) assignment: Sat iff every
/// clause has a true literal, Unsat iff some clause has all literals false.
EvalResult evaluate(const CnfFormula& f, const Assignment& a);

/// Enumeration limit for the brute-force oracles.
inline constexpr int kBruteForceMaxVars = 24;

/// Exhaustive enumeration. Returns a model or nullopt (UNSAT).
/// Throws std::invalid_argument beyond kBruteForceMaxVars.
std::optional<Assignment> brute_force_solve(const CnfFormula& f);

/// True iff every model of f satisfies c (by enumeration, same guard).
bool entails(const CnfFormula& f, const Clause& c);

} // namespace boundsat

#endif
