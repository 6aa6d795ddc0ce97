// Error taxonomy shared by all aicwb modules.
#pragma once

#include <stdexcept>
#include <string>

namespace aicwb {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixed coefficient domains (e.g. rational vs F_p, or two different primes).
struct domain_mismatch_error : error {
    using error::error;
};

// Input shape outside the supported fragment (presentation kind, characteristic, ...).
struct unsupported_error : error {
    using error::error;
};

// Structurally empty or meaningless input (degree-0 adjunction, resultant without the variable, ...).
struct degenerate_input_error : error {
    using error::error;
};

// A tower dimension / branch count cap was hit.  Callers map this to exit code 3.
struct budget_exceeded_error : error {
    using error::error;
};

// An operation precondition failed (e.g. tightness witness for the zero element).
struct precondition_error : error {
    using error::error;
};

// A localization generator turned out to be a zero divisor.
struct regularity_violation_error : error {
    using error::error;
};

// Pullback data (phi/psi root choices, maximal-ideal residues) is inconsistent.
struct spec_validation_error : error {
    using error::error;
};

// Expression / ring-document syntax error with position info.
struct parse_error : error {
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

// Formula evaluation failure (unbound free variable).
struct eval_error : error {
    using error::error;
};

} // namespace aicwb
