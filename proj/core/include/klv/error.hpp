#ifndef KLV_ERROR_HPP
#define KLV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace klv {

enum class Errc {
  bad_input,
  infinite_group,
  subgroup_not_theta_fixed,
  unknown_param,
  unvalidated_datum,
  not_semisimple,
  parity_violation,
  non_divisible,
  spec_violation,
  no_closure_poset,
  mixed_systems,
};

/// Library-wide exception; `code` identifies the failed contract.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace klv

#endif
