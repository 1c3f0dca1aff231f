#pragma once

#include <stdexcept>
#include <string>

namespace bxu {

// Bad group-spec string or malformed input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size limit (group order cap, enumeration cap) was exceeded.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An input violates a precondition (subgroup not normal, group of the
// wrong kind, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A cross-check between two computation routes failed.
struct check_error : std::runtime_error {
    explicit check_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr int kDefaultOrderCap = 512;
inline constexpr int kDefaultEnumCap = 24;

} // namespace bxu
