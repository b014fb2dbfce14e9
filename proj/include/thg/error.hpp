#ifndef THG_ERROR_HPP
#define THG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace thg {

enum class ErrorCode {
    ParseError,
    DisconnectedSequence,
    NotNested,
    ReductionNotApplicable,
    QOutOfRange,
    UnbalancedClasses,
    OracleTooLarge,
    CapExceeded,
    InvalidLevel,
    EdgeDeletionDisconnects,
    NoHamiltonianChainGraph,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace thg

#endif
