#include "thg/error.hpp"

namespace thg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::DisconnectedSequence: return "DISCONNECTED_SEQUENCE";
        case ErrorCode::NotNested: return "NOT_NESTED";
        case ErrorCode::ReductionNotApplicable: return "REDUCTION_NOT_APPLICABLE";
        case ErrorCode::QOutOfRange: return "Q_OUT_OF_RANGE";
        case ErrorCode::UnbalancedClasses: return "UNBALANCED_CLASSES";
        case ErrorCode::OracleTooLarge: return "ORACLE_TOO_LARGE";
        case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
        case ErrorCode::InvalidLevel: return "INVALID_LEVEL";
        case ErrorCode::EdgeDeletionDisconnects: return "EDGE_DELETION_DISCONNECTS";
        case ErrorCode::NoHamiltonianChainGraph: return "NO_HAMILTONIAN_CHAIN_GRAPH";
    }
    return "UNKNOWN";
}

}  // namespace thg
