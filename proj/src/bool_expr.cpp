#include "boundsat/bool_expr.hpp"

#include <algorithm>

namespace boundsat {

int BoolExpr::max_var() const {
    if (kind == Kind::Var) return var;
    int m = 0;
    for (const BoolExpr& c : children) m = std::max(m, c.max_var());
    return m;
}

bool BoolExpr::eval(const Assignment& a) const {
    switch (kind) {
    case Kind::Var:
        return a.get(var) == Value::True;
    case Kind::Not:
        return !children.front().eval(a);
    case Kind::And:
        for (const BoolExpr& c : children)
            if (!c.eval(a)) return false;
        return true;
    case Kind::Or:
        for (const BoolExpr& c : children)
            if (c.eval(a)) return true;
        return false;
    }
    return false;
}

namespace {

// ----- Tseitin -----

struct TseitinCtx {
    int next_var;
    std::vector<Clause>* clauses;
};

// Returns a DIMACS literal equivalent to the subexpression. Var and Not
// nodes translate to plain literals; And/Or introduce an auxiliary variable
// constrained by the full equivalence.
int tseitin_lit(const BoolExpr& e, TseitinCtx& ctx) {
    switch (e.kind) {
    case BoolExpr::Kind::Var:
        return e.var;
    case BoolExpr::Kind::Not:
        return -tseitin_lit(e.children.front(), ctx);
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or: {
        std::vector<int> cs;
        cs.reserve(e.children.size());
        for (const BoolExpr& c : e.children) cs.push_back(tseitin_lit(c, ctx));
        int g = ctx.next_var++;
        bool is_and = e.kind == BoolExpr::Kind::And;
        std::vector<Lit> big;
        big.push_back(Lit::from_dimacs(is_and ? g : -g));
        for (int c : cs) {
            // and: (~g | c)   or: (g | ~c)
            ctx.clauses->push_back(
                Clause({Lit::from_dimacs(is_and ? -g : g), Lit::from_dimacs(is_and ? c : -c)}));
            big.push_back(Lit::from_dimacs(is_and ? -c : c));
        }
        // and: (g | ~c1 | ... )   or: (~g | c1 | ... )
        ctx.clauses->push_back(Clause(std::move(big)));
        return g;
    }
    }
    throw std::logic_error("unreachable");
}

// ----- constant folding -----

// Fold constant subtrees so that Tseitin never sees And{}/Or{} below the root.
BoolExpr fold(const BoolExpr& e) {
    switch (e.kind) {
    case BoolExpr::Kind::Var:
        return e;
    case BoolExpr::Kind::Not: {
        BoolExpr c = fold(e.children.front());
        if (c.kind == BoolExpr::Kind::And && c.children.empty()) return BoolExpr::constant(false);
        if (c.kind == BoolExpr::Kind::Or && c.children.empty()) return BoolExpr::constant(true);
        return BoolExpr::negate(std::move(c));
    }
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or: {
        bool is_and = e.kind == BoolExpr::Kind::And;
        std::vector<BoolExpr> kept;
        for (const BoolExpr& ch : e.children) {
            BoolExpr c = fold(ch);
            bool is_true = c.kind == BoolExpr::Kind::And && c.children.empty();
            bool is_false = c.kind == BoolExpr::Kind::Or && c.children.empty();
            if (is_and && is_false) return BoolExpr::constant(false);
            if (!is_and && is_true) return BoolExpr::constant(true);
            if ((is_and && is_true) || (!is_and && is_false)) continue; // neutral
            kept.push_back(std::move(c));
        }
        if (kept.size() == 1) return kept.front();
        return is_and ? BoolExpr::conj(std::move(kept)) : BoolExpr::disj(std::move(kept));
    }
    }
    throw std::logic_error("unreachable");
}

// ----- distributive -----

// Negation normal form; negate while descending.
BoolExpr to_nnf(const BoolExpr& e, bool negated) {
    switch (e.kind) {
    case BoolExpr::Kind::Var:
        return negated ? BoolExpr::negate(e) : e;
    case BoolExpr::Kind::Not:
        return to_nnf(e.children.front(), !negated);
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or: {
        bool is_and = (e.kind == BoolExpr::Kind::And) != negated;
        std::vector<BoolExpr> cs;
        cs.reserve(e.children.size());
        for (const BoolExpr& c : e.children) cs.push_back(to_nnf(c, negated));
        return is_and ? BoolExpr::conj(std::move(cs)) : BoolExpr::disj(std::move(cs));
    }
    }
    throw std::logic_error("unreachable");
}

// Clause sets as vectors of DIMACS-literal vectors.
using RawCnf = std::vector<std::vector<int>>;

RawCnf distribute(const BoolExpr& e, std::size_t budget) {
    switch (e.kind) {
    case BoolExpr::Kind::Var:
        return {{e.var}};
    case BoolExpr::Kind::Not: // NNF: child is a Var
        return {{-e.children.front().var}};
    case BoolExpr::Kind::And: {
        RawCnf out;
        for (const BoolExpr& c : e.children) {
            RawCnf part = distribute(c, budget);
            if (out.size() + part.size() > budget) throw ClauseBudgetExceeded(budget);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    case BoolExpr::Kind::Or: {
        RawCnf out{{}}; // single empty clause: identity for clause-wise union
        for (const BoolExpr& c : e.children) {
            RawCnf part = distribute(c, budget);
            if (out.size() * part.size() > budget) throw ClauseBudgetExceeded(budget);
            RawCnf next;
            next.reserve(out.size() * part.size());
            for (const auto& a : out)
                for (const auto& b : part) {
                    std::vector<int> merged = a;
                    merged.insert(merged.end(), b.begin(), b.end());
                    next.push_back(std::move(merged));
                }
            out = std::move(next);
        }
        return out;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

CnfConversion to_cnf(const BoolExpr& e, CnfMethod method, int num_original_vars,
                     std::size_t clause_budget) {
    if (e.max_var() > num_original_vars)
        throw std::invalid_argument("expression uses a variable beyond num_original_vars");

    CnfConversion out;
    out.num_original = num_original_vars;
    out.formula.num_vars = num_original_vars;

    BoolExpr folded = fold(e);
    bool is_true = folded.kind == BoolExpr::Kind::And && folded.children.empty();
    bool is_false = folded.kind == BoolExpr::Kind::Or && folded.children.empty();
    if (is_true) return out;
    if (is_false) {
        out.formula.clauses.push_back(Clause(std::vector<Lit>{}));
        return out;
    }

    if (method == CnfMethod::Tseitin) {
        TseitinCtx ctx{num_original_vars + 1, &out.formula.clauses};
        int root = tseitin_lit(folded, ctx);
        out.formula.clauses.push_back(Clause({Lit::from_dimacs(root)}));
        out.formula.num_vars = ctx.next_var - 1;
    } else {
        RawCnf raw = distribute(to_nnf(folded, false), clause_budget);
        for (const auto& lits : raw) {
            std::vector<Lit> ls;
            ls.reserve(lits.size());
            for (int d : lits) ls.push_back(Lit::from_dimacs(d));
            Clause c(std::move(ls));
            if (c.tautological()) continue;
            out.formula.clauses.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace boundsat
