#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace drsnet {

inline constexpr const char* kVersion = "0.1.0";

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const std::string& msg) {
    std::ostringstream os;
    os << "check failed: " << expr;
    if (!msg.empty()) os << " — " << msg;
    throw std::invalid_argument(os.str());
}
}  // namespace detail

}  // namespace drsnet

// Precondition/shape checks; throw std::invalid_argument with context.
#define DRS_CHECK(cond, msg)                                        \
    do {                                                            \
        if (!(cond)) {                                              \
            std::ostringstream oss_;                                \
            oss_ << msg;                                            \
            ::drsnet::detail::check_failed(#cond, oss_.str());      \
        }                                                           \
    } while (0)
