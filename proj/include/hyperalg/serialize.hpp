/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <filesystem>
#include <string>

#include "hyperalg/item_memory.hpp"
#include "hyperalg/space.hpp"

namespace hyperalg {

/**
 * Canonical JSON form: {"space", "dimension", "parameters", "components"}.
 * Binary kinds emit 0/1 arrays, phasors emit radian arrays in (0, 2*pi]
 * (plus a "magnitudes" array when components are not unit length).
 */
std::string hv_to_json(const Hypervector& hv);
Hypervector hv_from_json(const std::string& json_text);

/**
 * Packed binary format, little-endian:
 *   magic "HVEC" | version u8 | space tag u8 | reserved u16 |
 *   dimension u64 | density f64 | aux u64 (block size / modular range) |
 *   payload.
 * Binary kinds pack one bit per component (bipolar: 1 = +1), real vectors
 * store f64, phasors store canonical angles as f64, modular stores u64.
 * Only canonical (in-domain) vectors are accepted.
 */
void hv_to_packed(const Hypervector& hv, const std::filesystem::path& path);
Hypervector hv_from_packed(const std::filesystem::path& path);

/// Snapshot: {"space", ..., "entries": [{"id", "components"}...]} or a seed
/// manifest {"seed", "label_prefix", "ids"} when the memory has provenance.
std::string memory_to_json(const ItemMemory& memory, bool prefer_seed_manifest = true);
ItemMemory memory_from_json(const std::string& json_text, Metric metric);

} // namespace hyperalg
