#pragma once

#include <string>

#include <json.hpp>

#include "discflow/hamiltonian.hpp"

namespace discflow {

/// JSON document for a Hamiltonian family: {"kind": "...", parameters...}.
/// Kinds: rotation_family, radial_poly, radial_staircase, perturbed_radial,
/// mollified. Numbers are IEEE doubles.
nlohmann::json to_json(const Hamiltonian& H);

Hamiltonian hamiltonian_from_json(const nlohmann::json& j);

/// FNV-1a hash of the canonical serialized form, as a hex string.
std::string family_hash(const Hamiltonian& H);

} // namespace discflow
