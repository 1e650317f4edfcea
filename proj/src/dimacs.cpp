#include "boundsat/dimacs.hpp"

#include <cctype>
#include <sstream>

namespace boundsat {

namespace {

struct Tokenizer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    // Returns false at end of input. Skips whitespace and comment lines.
    bool next(std::string& tok) {
        for (;;) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
                if (text[pos] == '\n') ++line;
                ++pos;
            }
            if (pos >= text.size()) return false;
            if (text[pos] == 'c' && at_line_start()) {
                while (pos < text.size() && text[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tok = text.substr(start, pos - start);
        return true;
    }

    bool at_line_start() const {
        return pos == 0 || text[pos - 1] == '\n' || text[pos - 1] == '\r';
    }
};

int parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    int v;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw DimacsError(line, "expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw DimacsError(line, "expected integer, got '" + tok + "'");
    return v;
}

} // namespace

CnfFormula parse_dimacs(const std::string& text) {
    Tokenizer tz{text};
    std::string tok;

    if (!tz.next(tok)) throw DimacsError(tz.line, "missing header");
    if (tok != "p") throw DimacsError(tz.line, "malformed header: expected 'p', got '" + tok + "'");
    if (!tz.next(tok) || tok != "cnf") throw DimacsError(tz.line, "malformed header: expected 'cnf'");
    if (!tz.next(tok)) throw DimacsError(tz.line, "malformed header: missing variable count");
    int num_vars = parse_int(tok, tz.line);
    if (!tz.next(tok)) throw DimacsError(tz.line, "malformed header: missing clause count");
    int num_clauses = parse_int(tok, tz.line);
    if (num_vars < 0 || num_clauses < 0) throw DimacsError(tz.line, "malformed header: negative count");

    CnfFormula f;
    f.num_vars = num_vars;
    std::vector<Lit> cur;
    bool in_clause = false;
    while (tz.next(tok)) {
        int v = parse_int(tok, tz.line);
        if (v == 0) {
            f.clauses.push_back(Clause(cur));
            cur.clear();
            in_clause = false;
            continue;
        }
        if (std::abs(v) > num_vars)
            throw DimacsError(tz.line, "literal " + tok + " exceeds declared num_vars " +
                                           std::to_string(num_vars));
        cur.push_back(Lit::from_dimacs(v));
        in_clause = true;
    }
    if (in_clause) throw DimacsError(tz.line, "clause missing terminating 0");
    if (static_cast<int>(f.clauses.size()) != num_clauses)
        throw DimacsError(tz.line, "header declares " + std::to_string(num_clauses) +
                                       " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

std::string emit_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Lit& l : c.lits()) out << l.to_dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace boundsat
