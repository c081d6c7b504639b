#ifndef TRACEFORGE_ERROR_HPP
#define TRACEFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace traceforge {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class CorpusError : public Error {
public:
    using Error::Error;
};

class CodebookError : public Error {
public:
    using Error::Error;
};

// A statistic whose defining formula has a zero denominator (all-tied ranks,
// zero variance). Callers must not substitute a default value.
class UndefinedStatisticError : public Error {
public:
    using Error::Error;
};

class GatewayError : public Error {
public:
    using Error::Error;
};

// Retryable: connection failures, timeouts, 429/5xx responses.
class TransportError : public GatewayError {
public:
    using GatewayError::GatewayError;
};

// Never retried.
class AuthError : public GatewayError {
public:
    using GatewayError::GatewayError;
};

// Malformed request (4xx other than auth). Never retried.
class BadRequestError : public GatewayError {
public:
    using GatewayError::GatewayError;
};

// Response arrived but lacks the answer channel or violates the wire format.
class MalformedResponseError : public GatewayError {
public:
    using GatewayError::GatewayError;
};

} // namespace traceforge

#endif
