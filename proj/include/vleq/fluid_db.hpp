#ifndef VLEQ_FLUID_DB_HPP
#define VLEQ_FLUID_DB_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "vleq/types.hpp"

namespace vleq {

using ComponentDb = std::map<std::string, Component>;

// Component database, UTF-8 text. One record per line:
//   name, Tc_K, pc_bar, omega
// plus one ideal-gas block per species:
//   nasa <name> <Tlow> <Tmid> <Thigh>
// followed by two lines of 9 coefficients (low range, high range).
// '#' starts a comment. Throws ParseError with the offending line number.
ComponentDb load_component_db(std::istream& source);
ComponentDb load_component_db_file(const std::string& path);

// Mixture spec with sections [components] (name = mole fraction),
// [kappa] (name,name = value, symmetric entries defaulting to zero)
// and [eos] (pr | srk). When `normalize` is set, mole fractions are
// rescaled to sum to one; otherwise a sum off by more than 1e-8 is an
// error.
Mixture parse_mixture_spec(std::istream& source, const ComponentDb& db, bool normalize = false);
Mixture parse_mixture_spec_file(const std::string& path, const ComponentDb& db,
                                bool normalize = false);

// Inverse of parse_mixture_spec: emits a spec that parses back to a
// field-wise identical Mixture (shortest round-trip number format).
std::string serialize_mixture_spec(const Mixture& mix);

}  // namespace vleq

#endif
