#ifndef PFL_ERRORS_HPP
#define PFL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfl {

/// Invalid input: bad indices, mismatched rings, malformed specs.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation hit its resource cap. Never a wrong answer: callers must
/// treat this as "unknown", not as failure or success.
class budget_exhausted : public std::runtime_error {
public:
    explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A machine-checked claim failed verification.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pfl

#endif
