#ifndef BOUNDSAT_BOOL_EXPR_HPP
#define BOUNDSAT_BOOL_EXPR_HPP

#include <stdexcept>
#include <vector>

#include "boundsat/types.hpp"

namespace boundsat {

/// Boolean expression tree over propositional variables.
/// And{} is the constant true, Or{} the constant false.
struct BoolExpr {
    enum class Kind { Var, Not, And, Or };

    Kind kind = Kind::And;
    int var = 0; // Kind::Var only
    std::vector<BoolExpr> children;

    static BoolExpr leaf(int v) {
        BoolExpr e;
        e.kind = Kind::Var;
        e.var = v;
        return e;
    }
    static BoolExpr negate(BoolExpr c) {
        BoolExpr e;
        e.kind = Kind::Not;
        e.children.push_back(std::move(c));
        return e;
    }
    static BoolExpr conj(std::vector<BoolExpr> cs) {
        BoolExpr e;
        e.kind = Kind::And;
        e.children = std::move(cs);
        return e;
    }
    static BoolExpr disj(std::vector<BoolExpr> cs) {
        BoolExpr e;
        e.kind = Kind::Or;
        e.children = std::move(cs);
        return e;
    }
    static BoolExpr constant(bool b) { return b ? conj({}) : disj({}); }

    int max_var() const;
    bool eval(const Assignment& a) const; // requires a total over used vars
};

struct CnfConversion {
    CnfFormula formula;
    int num_original = 0; // vars 1..num_original are the expression's; rest auxiliary
};

enum class CnfMethod { Tseitin, Distributive };

class ClauseBudgetExceeded : public std::runtime_error {
  public:
    explicit ClauseBudgetExceeded(std::size_t budget)
        : std::runtime_error("distributive CNF exceeds clause budget of " +
                             std::to_string(budget)) {}
};

inline constexpr std::size_t kDefaultClauseBudget = 100000;

/// Convert an expression to CNF. Tseitin output is equisatisfiable and its
/// models project onto exactly the expression's models; distributive output
/// is logically equivalent (no auxiliary variables) but may blow up, hence
/// the clause budget.
CnfConversion to_cnf(const BoolExpr& e, CnfMethod method, int num_original_vars,
                     std::size_t clause_budget = kDefaultClauseBudget);

} // namespace boundsat

#endif
