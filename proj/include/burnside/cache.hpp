#pragma once

#include <optional>
#include <string>
#include <vector>

namespace burnside {

/// Serializable content of a subgroup class table. Member lists are element
/// indices into the owning group's sorted element list, which is canonical
/// for a fixed generator presentation (the fingerprint covers generators).
struct LatticePayload {
  std::vector<std::vector<int>> class_members;
  std::vector<std::vector<long long>> marks;
};

/// Empty string disables the on-disk cache.
void set_cache_directory(std::string dir);
const std::string& cache_directory();

std::string cache_entry_path(const std::string& fingerprint);

/// Miss and corruption both come back empty; corruption additionally warns
/// on stderr. Never throws: cache problems degrade to recomputation.
std::optional<LatticePayload> cache_load(const std::string& fingerprint);

/// Store failures warn and are otherwise ignored.
void cache_store(const std::string& fingerprint, const LatticePayload& payload);

/// Serialization used by the store (exposed for round-trip tests).
std::vector<unsigned char> encode_lattice_payload(const LatticePayload& payload);
std::optional<LatticePayload> decode_lattice_payload(const std::vector<unsigned char>& bytes);

}  // namespace burnside
