#pragma once

#include <stdexcept>
#include <string>

#include "rankzeta.h"

namespace rz {

// Typed failure carrying one of the RZ_ERR_* codes across the C boundary.
class Error : public std::runtime_error {
public:
    Error(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

[[noreturn]] inline void fail(int code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace rz
