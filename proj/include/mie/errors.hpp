#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mie {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Why a (params, n, ell, N) channel has no normalizable bound state.
enum class ChannelStatus {
    ok,
    borderline,       // zero discriminant: k = (N-2)/2, accepted with a warning
    fall_to_center,   // negative discriminant in the indicial quadratic
    not_normalizable, // 2k + 3 - N <= 0
    no_bound_states,  // B >= 0
    invalid_numbers,  // n < 0, ell < 0 or N < 2
    no_closed_form,   // potential outside the A/r^2 + B/r + C family
};

std::string_view to_string(ChannelStatus s);

/// True for statuses that still describe a usable bound state.
constexpr bool is_valid(ChannelStatus s) {
    return s == ChannelStatus::ok || s == ChannelStatus::borderline;
}

class bound_state_error : public std::runtime_error {
public:
    bound_state_error(ChannelStatus kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ChannelStatus kind() const noexcept { return kind_; }

private:
    ChannelStatus kind_;
};

/// Grid too coarse for the requested finite-difference operation.
class resolution_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A ladder coefficient formula produced a negative radicand.
class algebra_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mie
