#include "blockfact/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "blockfact/report.hpp"
#include "blockfact/version.hpp"

namespace blockfact {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw IoError("SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::filesystem::path atom_cache_path(const std::filesystem::path& dir,
                                      std::uint32_t n) {
  return dir / ("atoms-v" + std::string(kVersion) + "-n" + std::to_string(n) +
                ".txt");
}

std::string atom_cache_contents(const AtomTable& table) {
  std::string body = "atoms n=" + std::to_string(table.order()) +
                     " count=" + std::to_string(table.size()) + "\n";
  for (const Block& atom : table.atoms()) {
    body += atom.text();
    body += '\n';
  }
  return body + "sha256=" + sha256_hex(body) + "\n";
}

void save_atom_cache(const AtomTable& table,
                     const std::filesystem::path& file) {
  atomic_write(file, atom_cache_contents(table));
}

AtomTable load_atom_cache(CyclicGroup group,
                          const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open atom cache " + file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (in.bad()) throw IoError("read error on atom cache " + file.string());

  if (lines.size() < 2) {
    throw ChecksumMismatch("atom cache " + file.string() + " is truncated");
  }
  const std::string& trailer = lines.back();
  if (trailer.rfind("sha256=", 0) != 0) {
    throw ChecksumMismatch("atom cache " + file.string() +
                           " has no checksum trailer");
  }
  std::string body;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    body += lines[i];
    body += '\n';
  }
  if (sha256_hex(body) != trailer.substr(7)) {
    throw ChecksumMismatch("atom cache " + file.string() +
                           " failed its checksum");
  }

  std::istringstream header(lines.front());
  std::string tag, n_field, count_field;
  header >> tag >> n_field >> count_field;
  if (tag != "atoms" || n_field.rfind("n=", 0) != 0 ||
      count_field.rfind("count=", 0) != 0) {
    throw ParseError("atom cache " + file.string() + " has a malformed header");
  }
  if (n_field.substr(2) != std::to_string(group.order())) {
    throw ParseError("atom cache " + file.string() + " is for Z_" +
                     n_field.substr(2) + ", expected Z_" +
                     std::to_string(group.order()));
  }
  const std::size_t expected_count = std::stoull(count_field.substr(6));
  if (expected_count != lines.size() - 2) {
    throw ChecksumMismatch("atom cache " + file.string() +
                           " header count disagrees with the line count");
  }

  std::vector<Block> atoms;
  atoms.reserve(expected_count);
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    atoms.push_back(Block::parse(group, lines[i]));
  }
  return AtomTable(group, std::move(atoms));  // re-validates every entry
}

CacheResult cache_load_or_build(CyclicGroup group,
                                const std::filesystem::path& dir,
                                const Limits& limits) {
  std::filesystem::create_directories(dir);
  FileLock lock(dir / "cache");
  const std::filesystem::path file = atom_cache_path(dir, group.order());
  if (std::filesystem::exists(file)) {
    try {
      return {load_atom_cache(group, file), true, file};
    } catch (const Error& e) {
      std::cerr << "[cache] rebuilding " << file.string() << ": " << e.what()
                << "\n";
    }
  }
  AtomTable table = enumerate_atoms(group, limits);
  save_atom_cache(table, file);
  return {std::move(table), false, file};
}

}  // namespace blockfact
