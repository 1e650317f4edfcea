#ifndef BOUNDSAT_DIMACS_HPP
#define BOUNDSAT_DIMACS_HPP

#include <stdexcept>
#include <string>

#include "boundsat/types.hpp"

namespace boundsat {

class DimacsError : public std::runtime_error {
  public:
    DimacsError(int line, const std::string& what)
        : std::runtime_error("dimacs: line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Parse DIMACS CNF text. Comment lines (`c ...`) are ignored; the header
/// `p cnf <vars> <clauses>` must match the clauses that follow.
CnfFormula parse_dimacs(const std::string& text);

std::string emit_dimacs(const CnfFormula& f);

} // namespace boundsat

#endif
