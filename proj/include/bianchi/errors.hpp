#pragma once

#include <stdexcept>
#include <string>

namespace bianchi {

// Domain errors map to CLI exit code 2; internal invariant failures to exit 1.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace bianchi
