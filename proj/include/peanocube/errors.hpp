#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace peanocube {

// Library errors carry a stable machine-readable code ("NotPartialCube",
// "DisconnectedPair", ...) next to the human-readable message.  The CLI maps
// codes to exit status 3, parse failures to 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace peanocube
