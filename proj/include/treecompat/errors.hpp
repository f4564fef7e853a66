#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treecompat {

enum class ErrorCode {
    CycleDetected,
    MultipleRoots,
    MultipleParents,
    DuplicateLabel,
    UnlabeledLeaf,
    InvalidLabel,
    UnknownNode,
    LabelNotPresent,
    EmptyLabelSet,
    EmptyTree,
    SyntaxError,
    LabelSetMismatch,
    Incompatible,
    DomainMismatch,
};

const char* error_code_name(ErrorCode code);

class TreeError : public std::runtime_error {
public:
    TreeError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public TreeError {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : TreeError(ErrorCode::SyntaxError,
                    message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace treecompat
