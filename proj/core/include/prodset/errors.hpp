#pragma once

#include <stdexcept>
#include <string>

namespace prodset {

// Bad value for an operation (zero/negative rational, argument outside the
// table, k larger than the universe, ...).  CLI exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap or the 64-bit arithmetic range would be exceeded.
// CLI exit code 2.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// The certificate tracer hit a state the underlying theorem rules out.
// Carries the full node state in the message.  CLI exit code 3.
class certification_error : public std::runtime_error {
public:
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace prodset
