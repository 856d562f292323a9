#pragma once

#include <stdexcept>
#include <string>

namespace skewcat {

  // Base of every error the library raises. The subclasses name the failure
  // category so callers (and the CLI exit-code mapping) can tell construction
  // bugs apart from law failures and configuration problems.
  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define SKEWCAT_DEFINE_ERROR(name)             \
  class name : public error {                  \
   public:                                     \
    explicit name(std::string const& what)     \
        : error(std::string(#name ": ") + what) {} \
  }

  // compose() on a non-composable pair, or a component outside its category
  SKEWCAT_DEFINE_ERROR(ill_typed);
  // a structure component with the wrong source/target
  SKEWCAT_DEFINE_ERROR(shape_error);
  SKEWCAT_DEFINE_ERROR(not_enumerable);
  SKEWCAT_DEFINE_ERROR(missing_witness);
  SKEWCAT_DEFINE_ERROR(invalid_action);
  SKEWCAT_DEFINE_ERROR(not_strong);
  SKEWCAT_DEFINE_ERROR(missing_hom_data);
  SKEWCAT_DEFINE_ERROR(no_dual);
  SKEWCAT_DEFINE_ERROR(not_initial);
  SKEWCAT_DEFINE_ERROR(not_monotone);
  SKEWCAT_DEFINE_ERROR(not_lower_bound);
  SKEWCAT_DEFINE_ERROR(degenerate_probe);
  SKEWCAT_DEFINE_ERROR(unknown_action);
  SKEWCAT_DEFINE_ERROR(unknown_suite);
  SKEWCAT_DEFINE_ERROR(param_out_of_bounds);
  SKEWCAT_DEFINE_ERROR(comonad_law_violation);
  SKEWCAT_DEFINE_ERROR(invalid_space);
  SKEWCAT_DEFINE_ERROR(parse_error);
  SKEWCAT_DEFINE_ERROR(io_error);

#undef SKEWCAT_DEFINE_ERROR

}  // namespace skewcat
