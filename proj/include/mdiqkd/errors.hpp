#pragma once

#include <stdexcept>
#include <string>

namespace mdiqkd {

// Photon-number index left the domain where a distribution is positive.
class DomainExceeded : public std::domain_error {
public:
    explicit DomainExceeded(const std::string& what) : std::domain_error(what) {}
};

// Closed forms are derived for identical source/channel settings on both
// sides; anything else must go through the series model.
class AsymmetricConfig : public std::invalid_argument {
public:
    explicit AsymmetricConfig(const std::string& what) : std::invalid_argument(what) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mdiqkd
