#pragma once
#include <stdexcept>
#include <string>

namespace hopf {

// Input outside an operation's documented domain (bad shape, bad index, ...).
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& m) : std::invalid_argument(m) {}
};

// Input is structurally valid but beyond the supported desk-scale bounds.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

// Text that does not parse as the expected wire format.
struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& m) : std::invalid_argument(m) {}
};

// Internal invariant violation; must never fire on valid input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

#define HOPF_CHECK(cond, msg) \
    do { if (!(cond)) throw ::hopf::internal_error(std::string("invariant failed: ") + (msg)); } while (0)

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}
inline void require_scale(bool cond, const std::string& msg) {
    if (!cond) throw resource_error(msg);
}

} // namespace hopf
