// Error taxonomy for ptabkit.
//
// Two exception families:
//
//   * ptab::error       -- domain errors: structurally well-formed input that
//                          violates a mathematical precondition (bad grid,
//                          out-of-range index, failed invariant).  CLI exit 1.
//   * ptab::parse_error -- malformed text that never became a value.  CLI exit 2.
//
// Every ptab::error carries a machine-readable errc code so callers (and the
// JSON output layer) can switch on the failure kind without string matching.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptab {

enum class errc {
    // grid validation
    invalid_box,                  // non-positive content, or malformed cell
    row_order_violation,          // row contents not weakly increasing
    column_strictness_violation,  // column contents not strictly increasing
    strip_order_violation,        // equal-content strip or cross-content order broken
    // indexing / construction
    index_out_of_range,
    invalid_extension,            // appending the requested cell breaks validity
    content_exceeds_alphabet,     // rotation bound m smaller than some content
    bound_violation,              // matrix bounds smaller than letters present
    standard_form_violation,      // biword columns not sorted standardly
    // operator semantics
    internal_inconsistency,       // a derived quantity failed a structural audit
    invalid_result,               // an operator produced a grid that fails validation
    null_step,                    // an operator in a composite sequence returned null
    word_condition_precondition,  // insertion requires the word condition
    highest_weight_precondition,  // evacuation requires a highest-weight input
    shape_mismatch,               // the two halves of an insertion pair disagree
    malformed_input,              // inverse insertion cannot locate a required cell
    method_disagreement,          // independent algorithms returned different results
    limit_exceeded,               // graph exploration hit its node budget
    check_failure,                // randomized self-check found a counterexample
};

// Stable identifier string for an errc (used in messages and JSON payloads).
const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg), code_(code) {}

    error(errc code, const std::string& what_arg, long long detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg),
          code_(code),
          detail_(detail),
          has_detail_(true) {}

    errc code() const noexcept { return code_; }

    // Optional numeric payload; for limit_exceeded this is the number of nodes
    // discovered before the budget ran out.
    bool has_detail() const noexcept { return has_detail_; }
    long long detail() const noexcept { return detail_; }

  private:
    errc code_;
    long long detail_ = 0;
    bool has_detail_ = false;
};

class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what_arg, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what_arg), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }      // 1-based, 0 = unknown
    std::size_t column() const noexcept { return column_; }  // 1-based, 0 = unknown

  private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ptab
