#ifndef BOUNDSAT_TYPES_HPP
#define BOUNDSAT_TYPES_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace boundsat {

/// A propositional variable (1-indexed, DIMACS convention) or its negation.
struct Lit {
    int var = 0;     // >= 1
    bool pos = true; // true = positive occurrence

    Lit() = default;
    Lit(int v, bool p) : var(v), pos(p) {
        if (v < 1) throw std::invalid_argument("literal variable must be >= 1");
    }

    Lit negated() const { return Lit(var, !pos); }

    /// Signed DIMACS integer (-v or v).
    int to_dimacs() const { return pos ? var : -var; }
    static Lit from_dimacs(int d) { return Lit(std::abs(d), d > 0); }

    bool operator==(const Lit&) const = default;
};

/// Disjunction of literals. Duplicates are removed at construction;
/// a clause containing both a and ~a is kept but flagged tautological.
class Clause {
  public:
    Clause() = default;
    explicit Clause(std::vector<Lit> lits);

    const std::vector<Lit>& lits() const { return lits_; }
    bool tautological() const { return tautological_; }
    bool empty() const { return lits_.empty(); } // falsum
    std::size_t size() const { return lits_.size(); }

    bool operator==(const Clause&) const = default;

  private:
    std::vector<Lit> lits_;
    bool tautological_ = false;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    /// Largest variable index actually used; checks literals stay in range.
    void check() const;

    bool operator==(const CnfFormula&) const = default;
};

enum class Value : std::int8_t { False = 0, True = 1, Unassigned = 2 };

/// Partial or total truth assignment over variables 1..num_vars.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(int num_vars) : values_(static_cast<std::size_t>(num_vars) + 1, Value::Unassigned) {}

    int num_vars() const { return static_cast<int>(values_.size()) - 1; }
    Value get(int var) const { return values_.at(static_cast<std::size_t>(var)); }
    void set(int var, Value v) { values_.at(static_cast<std::size_t>(var)) = v; }

    /// Truth of a literal under this assignment.
    Value of(Lit l) const {
        Value v = get(l.var);
        if (v == Value::Unassigned) return v;
        bool t = (v == Value::True) == l.pos;
        return t ? Value::True : Value::False;
    }

    bool total() const {
        for (int v = 1; v <= num_vars(); ++v)
            if (get(v) == Value::Unassigned) return false;
        return true;
    }

    bool operator==(const Assignment&) const = default;

  private:
    std::vector<Value> values_{Value::Unassigned}; // slot 0 unused
};

} // namespace boundsat

#endif
