#pragma once

#include <stdexcept>
#include <string>

namespace lgtk {

// Structured failure codes. Library code throws; the CLI maps codes to exit
// statuses (validation 2, non-isolated 3, budget 4).
enum class errc {
    parse_error,
    shape_mismatch,
    mixed_parity,
    not_a_factorization,
    non_isolated_critical,
    constant_potential,
    not_closed,
    non_constant_phi,
    not_quasi_homogeneous,
    budget_exceeded,
    internal
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::mixed_parity: return "MixedParity";
        case errc::not_a_factorization: return "NotAFactorization";
        case errc::non_isolated_critical: return "NonIsolatedCritical";
        case errc::constant_potential: return "ConstantPotential";
        case errc::not_closed: return "NotClosed";
        case errc::non_constant_phi: return "NonConstantPhi";
        case errc::not_quasi_homogeneous: return "NotQuasiHomogeneous";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Parse failure with a byte offset into the offending source text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(errc::parse_error, what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace lgtk
