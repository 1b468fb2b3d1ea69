#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cygan {

enum class ErrorKind {
    DegenerateQuadruple,
    HeightMismatch,
    UndefinedImage,
    NotInterior,
    BadBasePoint,
    DegenerateParams,
    NoEqualityHolds,
    Parse,
    Numeric,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Index of the failing word stage, set for UndefinedImage raised by apply_word.
    std::optional<std::size_t> stage() const noexcept { return stage_; }

    Error with_stage(std::size_t stage) const {
        Error copy = *this;
        copy.stage_ = stage;
        return copy;
    }

private:
    ErrorKind kind_;
    std::optional<std::size_t> stage_;
};

} // namespace cygan
