#include "burnside/cache.hpp"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>

namespace burnside {

namespace {

std::mutex cache_mu;
std::string cache_dir;

constexpr char kMagic[5] = {'B', 'T', 'O', 'M', '1'};
constexpr uint32_t kVersion = 1;

void put_u32(std::vector<unsigned char>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_u64(std::vector<unsigned char>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

struct Reader {
  const std::vector<unsigned char>& buf;
  size_t pos = 0;
  bool ok = true;

  uint64_t take(int bytes) {
    if (pos + bytes > buf.size()) {
      ok = false;
      return 0;
    }
    uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= static_cast<uint64_t>(buf[pos + i]) << (8 * i);
    pos += bytes;
    return v;
  }
};

uint64_t fnv64(const unsigned char* data, size_t len) {
  uint64_t h = 14695981039346656037ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string fingerprint_filename(const std::string& fingerprint) {
  uint64_t h = fnv64(reinterpret_cast<const unsigned char*>(fingerprint.data()),
                     fingerprint.size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf) + ".btom";
}

}  // namespace

void set_cache_directory(std::string dir) {
  std::scoped_lock lock(cache_mu);
  cache_dir = std::move(dir);
}

const std::string& cache_directory() {
  std::scoped_lock lock(cache_mu);
  return cache_dir;
}

std::string cache_entry_path(const std::string& fingerprint) {
  return (std::filesystem::path(cache_directory()) / fingerprint_filename(fingerprint)).string();
}

std::vector<unsigned char> encode_lattice_payload(const LatticePayload& payload) {
  std::vector<unsigned char> body;
  put_u32(body, static_cast<uint32_t>(payload.class_members.size()));
  for (const auto& members : payload.class_members) {
    put_u32(body, static_cast<uint32_t>(members.size()));
    for (int m : members) put_u32(body, static_cast<uint32_t>(m));
  }
  for (const auto& row : payload.marks)
    for (long long v : row) put_u64(body, static_cast<uint64_t>(v));

  std::vector<unsigned char> out(kMagic, kMagic + 5);
  put_u32(out, kVersion);
  put_u64(out, body.size());
  put_u64(out, fnv64(body.data(), body.size()));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

std::optional<LatticePayload> decode_lattice_payload(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < 25 || std::memcmp(bytes.data(), kMagic, 5) != 0) return std::nullopt;
  Reader header{bytes, 5};
  uint32_t version = static_cast<uint32_t>(header.take(4));
  uint64_t len = header.take(8);
  uint64_t checksum = header.take(8);
  if (!header.ok || version != kVersion) return std::nullopt;
  if (bytes.size() != header.pos + len) return std::nullopt;
  if (fnv64(bytes.data() + header.pos, len) != checksum) return std::nullopt;

  Reader r{bytes, header.pos};
  LatticePayload p;
  uint32_t nclasses = static_cast<uint32_t>(r.take(4));
  p.class_members.resize(nclasses);
  for (auto& members : p.class_members) {
    uint32_t n = static_cast<uint32_t>(r.take(4));
    if (!r.ok || n > len) return std::nullopt;
    members.resize(n);
    for (auto& m : members) m = static_cast<int>(r.take(4));
  }
  p.marks.assign(nclasses, std::vector<long long>(nclasses));
  for (auto& row : p.marks)
    for (auto& v : row) v = static_cast<long long>(r.take(8));
  if (!r.ok || r.pos != bytes.size()) return std::nullopt;
  return p;
}

std::optional<LatticePayload> cache_load(const std::string& fingerprint) {
  if (cache_directory().empty()) return std::nullopt;
  std::string path = cache_entry_path(fingerprint);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;  // miss
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  auto payload = decode_lattice_payload(bytes);
  if (!payload)
    std::cerr << "warning: corrupted cache entry " << path << ", recomputing\n";
  return payload;
}

void cache_store(const std::string& fingerprint, const LatticePayload& payload) {
  if (cache_directory().empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(cache_directory(), ec);
  std::string path = cache_entry_path(fingerprint);
  std::vector<unsigned char> bytes = encode_lattice_payload(payload);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size()))
    std::cerr << "warning: failed to write cache entry " << path << "\n";
}

}  // namespace burnside
