#ifndef BLOCKFACT_CACHE_HPP_
#define BLOCKFACT_CACHE_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "blockfact/atoms.hpp"

namespace blockfact {

/// Hex-encoded SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// Cache file for the atom table of Z_n inside `dir`; the file name
/// carries the tool version, so a version bump forces a rebuild.
std::filesystem::path atom_cache_path(const std::filesystem::path& dir,
                                      std::uint32_t n);

/// Serializes a table to the line-oriented cache format:
///   atoms n=<n> count=<k>
///   <one canonical block text per line, lexicographic order>
///   sha256=<hex over all preceding bytes>
std::string atom_cache_contents(const AtomTable& table);

/// Writes the cache file atomically (temp file + rename).
void save_atom_cache(const AtomTable& table, const std::filesystem::path& file);

/// Loads and fully validates a cache file: checksum, header consistency,
/// and (via AtomTable's constructor) atomicity and ordering of every
/// entry. Throws IoError / ChecksumMismatch / ParseError; never returns a
/// partially trusted table.
AtomTable load_atom_cache(CyclicGroup group, const std::filesystem::path& file);

struct CacheResult {
  AtomTable table;
  bool loaded_from_cache;
  std::filesystem::path file;
};

/// Loads the cached table when present and intact, otherwise enumerates,
/// writes the cache, and returns the fresh table. A corrupt cache is
/// rebuilt and overwritten, with a note on stderr. The directory is
/// created if missing and locked for the duration of the call.
CacheResult cache_load_or_build(CyclicGroup group,
                                const std::filesystem::path& dir,
                                const Limits& limits = {});

}  // namespace blockfact

#endif  // BLOCKFACT_CACHE_HPP_
