#include "ptabkit/errors.hpp"

namespace ptab {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::invalid_box: return "InvalidBox";
        case errc::row_order_violation: return "RowOrderViolation";
        case errc::column_strictness_violation: return "ColumnStrictnessViolation";
        case errc::strip_order_violation: return "StripOrderViolation";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::invalid_extension: return "InvalidExtension";
        case errc::content_exceeds_alphabet: return "ContentExceedsAlphabet";
        case errc::bound_violation: return "BoundViolation";
        case errc::standard_form_violation: return "StandardFormViolation";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::invalid_result: return "InvalidResult";
        case errc::null_step: return "NullStep";
        case errc::word_condition_precondition: return "WordConditionPrecondition";
        case errc::highest_weight_precondition: return "HighestWeightPrecondition";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::malformed_input: return "MalformedInput";
        case errc::method_disagreement: return "MethodDisagreement";
        case errc::limit_exceeded: return "LimitExceeded";
        case errc::check_failure: return "CheckFailure";
    }
    return "UnknownError";
}

}  // namespace ptab
