#ifndef BOUNDSAT_ENCODER_HPP
#define BOUNDSAT_ENCODER_HPP

#include "boundsat/bool_expr.hpp"
#include "boundsat/scenario.hpp"
#include "boundsat/types.hpp"

namespace boundsat {

/// One side of a variable's safety interval, mapped to a SAT variable.
struct BoundLiteral {
    std::string variable;
    Side side = Side::Lower;
    int sat_var = 0;
};

/// Bijection (variable, side) <-> sat_var. Variables are numbered 1..2n in
/// declaration order, lower bound before upper.
class BoundMap {
  public:
    BoundMap() = default;
    explicit BoundMap(const Scenario& s);

    int size() const { return static_cast<int>(literals_.size()); }
    const std::vector<BoundLiteral>& literals() const { return literals_; }
    const BoundLiteral& at(int sat_var) const { return literals_.at(sat_var - 1); }
    int var_for(const std::string& variable, Side side) const; // 0 if absent

  private:
    std::vector<BoundLiteral> literals_; // index sat_var - 1
};

/// Truth of each bound literal under a disturbance case: true iff the
/// observed interval respects that side of the safety interval. Indexed by
/// sat_var - 1. Variables without an observed entry default to true.
std::vector<bool> valuate_bounds(const Scenario& s, const DisturbanceCase& d, const BoundMap& m);

/// Strict mode: safety holds iff every bound literal is true.
BoolExpr build_safety_expr(const Scenario& s, const BoundMap& m);

/// Paper mode: subdomain disjunctions composed per the scenario's DomainSpec.
BoolExpr build_paper_domain_expr(const Scenario& s, const DomainSpec& spec, const BoundMap& m);

enum class EncodeMode { Strict, Paper };

struct EncodedProblem {
    CnfFormula formula; // requirement CNF plus one unit pin per bound literal
    BoundMap bound_map;
    int num_bound_vars = 0; // vars above this are Tseitin auxiliaries
    EncodeMode mode = EncodeMode::Strict;

    bool is_auxiliary(int sat_var) const { return sat_var > num_bound_vars; }
};

EncodedProblem encode(const Scenario& s, const DisturbanceCase& d, EncodeMode mode);

} // namespace boundsat

#endif
