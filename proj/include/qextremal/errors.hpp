#ifndef QEXTREMAL_ERRORS_HPP
#define QEXTREMAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qext {

// Input violates a documented precondition (bad vertex id, bad parameter range).
using domain_error = std::domain_error;

// Input is structurally fine but exceeds a hard size cap (n > 64, n > scan cap, ...).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized input; carries the byte offset of the first bad byte.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Eigensolver was handed a disconnected graph; the caller must split into
// components and take the max explicitly.
class disconnected_error : public std::runtime_error {
public:
    explicit disconnected_error(const std::string& what) : std::runtime_error(what) {}
};

// Iteration cap hit before the residual target; carries the last residual.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual_(last_residual) {}
    double last_residual() const { return last_residual_; }

private:
    double last_residual_;
};

}  // namespace qext

#endif
