#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace prodmat {

// Domain failure with a stable machine-readable name and an optional index
// (failing minor, offending row, multi-index weight). The CLI maps these to
// exit status 2 and a structured JSON error object.
class calc_error : public std::runtime_error {
public:
  calc_error(std::string name, const std::string& what,
             std::optional<long> index = std::nullopt)
      : std::runtime_error(what), name_(std::move(name)), index_(index) {}
  const std::string& name() const noexcept { return name_; }
  std::optional<long> index() const noexcept { return index_; }

private:
  std::string name_;
  std::optional<long> index_;
};

namespace errname {
inline constexpr const char* not_normal = "NotNormal";
inline constexpr const char* singular_minor = "SingularMinor";
inline constexpr const char* band_violation = "BandViolation";
inline constexpr const char* not_upper_triangular = "NotUpperTriangular";
inline constexpr const char* window_too_small = "WindowTooSmall";
inline constexpr const char* insufficient_coefficients = "InsufficientCoefficients";
inline constexpr const char* not_invertible = "NotInvertible";
inline constexpr const char* domain_error = "DomainError";
inline constexpr const char* consistency_failure = "ConsistencyFailure";
}  // namespace errname

}  // namespace prodmat
