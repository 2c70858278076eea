#pragma once

#include <stdexcept>
#include <string>

namespace majcolor {

enum class errc {
    duplicate_edge,
    loop_edge,
    id_out_of_range,
    empty_graph,
    not_connected,
    odd_degree_vertex,
    too_small,
    invalid_order,
    size_cap_exceeded,
    infeasible,
    retry_limit,
    not_admissible,
    partial_coloring,
    color_out_of_range,
    degree_too_high,
    not_six_regular,
    hypothesis_violated,
    budget_exceeded,
    repair_failed,
    parse_error,
    unknown_algorithm,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::loop_edge: return "LoopEdge";
    case errc::id_out_of_range: return "IdOutOfRange";
    case errc::empty_graph: return "EmptyGraph";
    case errc::not_connected: return "NotConnected";
    case errc::odd_degree_vertex: return "OddDegreeVertex";
    case errc::too_small: return "TooSmall";
    case errc::invalid_order: return "InvalidOrder";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::infeasible: return "Infeasible";
    case errc::retry_limit: return "RetryLimit";
    case errc::not_admissible: return "NotAdmissible";
    case errc::partial_coloring: return "PartialColoring";
    case errc::color_out_of_range: return "ColorOutOfRange";
    case errc::degree_too_high: return "DegreeTooHigh";
    case errc::not_six_regular: return "NotSixRegular";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::repair_failed: return "RepairFailed";
    case errc::parse_error: return "ParseError";
    case errc::unknown_algorithm: return "UnknownAlgorithm";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace majcolor
