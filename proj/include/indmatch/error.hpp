#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace indmatch {

/// Exception carrying a stable machine-readable tag (e.g. "AsymmetricInput")
/// in addition to the human-readable message. The CLI prints "tag: message"
/// on stderr and exits nonzero.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& message)
        : std::runtime_error(tag + ": " + message), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

[[noreturn]] inline void fail(std::string tag, const std::string& message) {
    throw Error(std::move(tag), message);
}

} // namespace indmatch
