#pragma once

#include <string>

#include "jetmult/components.hpp"
#include "jetmult/jet_ideal.hpp"

namespace jetmult {

// Canonical JSON documents. Field order is fixed, big integers are emitted
// as decimal strings and polynomials in their canonical text form, so equal
// inputs produce byte-identical output.

/// {"r", "m", "generators"}
std::string to_json(const jet::JetIdeal& ideal);

/// {"seeds", "B", "N_used", "lengths", "substitutions"}
std::string to_json(const comp::VerificationRecord& record);

/// {"r", "m", "components": [{"t", "prime", "mult_formula", "mult_recursive",
/// "mult_oracle", "status", ["verification"], ["oracle_error"]}], "mult_sum"}
std::string to_json(const comp::Census& census);

}  // namespace jetmult
