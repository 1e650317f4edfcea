#include "boundsat/types.hpp"

#include <algorithm>

namespace boundsat {

Clause::Clause(std::vector<Lit> lits) {
    lits_.reserve(lits.size());
    for (const Lit& l : lits) {
        if (std::find(lits_.begin(), lits_.end(), l) != lits_.end()) continue; // dedup, keep first
        if (std::find(lits_.begin(), lits_.end(), l.negated()) != lits_.end()) tautological_ = true;
        lits_.push_back(l);
    }
}

void CnfFormula::check() const {
    if (num_vars < 0) throw std::invalid_argument("num_vars must be >= 0");
    for (const Clause& c : clauses)
        for (const Lit& l : c.lits())
            if (l.var > num_vars)
                throw std::invalid_argument("literal variable " + std::to_string(l.var) +
                                            " exceeds num_vars " + std::to_string(num_vars));
}

} // namespace boundsat
