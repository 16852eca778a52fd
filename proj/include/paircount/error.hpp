#pragma once

#include <stdexcept>
#include <string>

namespace paircount {

/// Raised when an argument lies outside an operation's domain
/// (empty strings, lengths above the oracle limit, malformed sequences).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace paircount
