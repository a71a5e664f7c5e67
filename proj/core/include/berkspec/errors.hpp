#ifndef BERKSPEC_ERRORS_HPP
#define BERKSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace berkspec {

enum class errc {
  pole_at_type_one_point,
  irreducible_denominator,
  pole_on_circle,
  invalid_interval,
  no_complement,
  margin_too_large,
  not_cyclic,
  singular_system,
  pole_at_point,
  out_of_range,
  unsupported,
  not_triangular,
  separation_failed,
  not_separated,
  not_piecewise_affine,
  discontinuity_detected,
  never_stabilized,
  basis_not_neighborhood,
  pole_on_boundary,
  eigenvalue_on_boundary,
  non_split_char_poly,
  parse_error,
  unbound_constant,
  non_rational_literal,
};

const char* errc_name(errc k);

/// Library-wide exception; carries a machine-checkable kind.
class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace berkspec

#endif
