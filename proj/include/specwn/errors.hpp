#pragma once

#include <stdexcept>
#include <string>

namespace specwn {

/// Base class for all harness errors; `code()` is stable across messages.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct domain_error : error {
    explicit domain_error(const std::string& what) : error("DomainError", what) {}
};
struct unknown_kind_error : error {
    explicit unknown_kind_error(const std::string& what) : error("UnknownKind", what) {}
};
struct quadrature_failure : error {
    explicit quadrature_failure(const std::string& what) : error("QuadratureFailure", what) {}
};
struct missing_envelope_error : error {
    explicit missing_envelope_error(const std::string& what) : error("MissingEnvelope", what) {}
};
struct support_too_wide_error : error {
    explicit support_too_wide_error(const std::string& what) : error("SupportTooWide", what) {}
};
struct driver_mismatch_error : error {
    explicit driver_mismatch_error(const std::string& what) : error("DriverMismatch", what) {}
};
struct tier_error : error {
    explicit tier_error(const std::string& what) : error("TierError", what) {}
};
struct parse_error : error {
    explicit parse_error(const std::string& what) : error("ParseError", what) {}
};
struct validation_error : error {
    explicit validation_error(const std::string& what) : error("ValidationError", what) {}
};
struct insufficient_paths_error : error {
    explicit insufficient_paths_error(const std::string& what) : error("InsufficientPaths", what) {}
};
struct io_error : error {
    explicit io_error(const std::string& what) : error("IoError", what) {}
};
struct usage_error : error {
    explicit usage_error(const std::string& what) : error("UsageError", what) {}
};

} // namespace specwn
