#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "burnside/burnside.hpp"
#include "burnside/cache.hpp"

using namespace burnside;

namespace {

struct TempCacheDir {
  std::string path;
  std::string saved;
  TempCacheDir() {
    path = (std::filesystem::temp_directory_path() /
            ("btom-test-" + std::to_string(::getpid())))
               .string();
    std::filesystem::create_directories(path);
    saved = cache_directory();
    set_cache_directory(path);
  }
  ~TempCacheDir() {
    set_cache_directory(saved);
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

LatticePayload sample_payload() {
  LatticePayload p;
  p.class_members = {{0}, {0, 1}, {0, 1, 2, 3}};
  p.marks = {{4, 2, 1}, {0, 2, 1}, {0, 0, 1}};
  return p;
}

}  // namespace

TEST_CASE("payload serialization round trips byte-identically") {
  LatticePayload p = sample_payload();
  std::vector<unsigned char> bytes = encode_lattice_payload(p);
  auto back = decode_lattice_payload(bytes);
  REQUIRE(back.has_value());
  CHECK(back->class_members == p.class_members);
  CHECK(back->marks == p.marks);
  CHECK(encode_lattice_payload(*back) == bytes);

  // magic header
  CHECK(bytes[0] == 'B');
  CHECK(bytes[4] == '1');
}

TEST_CASE("corrupted payloads are rejected") {
  std::vector<unsigned char> bytes = encode_lattice_payload(sample_payload());
  for (size_t pos : {size_t(0), size_t(9), bytes.size() - 1}) {
    std::vector<unsigned char> bad = bytes;
    bad[pos] ^= 0x40;
    CHECK(!decode_lattice_payload(bad).has_value());
  }
  std::vector<unsigned char> truncated(bytes.begin(), bytes.end() - 3);
  CHECK(!decode_lattice_payload(truncated).has_value());
}

TEST_CASE("store then load reproduces the table") {
  TempCacheDir tmp;
  GroupPtr s4 = symmetric_group(4);
  std::string fp = s4->fingerprint();

  CHECK(!cache_load(fp).has_value());  // empty cache misses

  // the S4 table, stored and read back
  const SubgroupClassTable& t = subgroup_classes(s4);
  LatticePayload payload;
  for (const Subgroup& rep : t.class_reps()) payload.class_members.push_back(rep.members);
  payload.marks = t.marks();
  cache_store(fp, payload);

  auto loaded = cache_load(fp);
  REQUIRE(loaded.has_value());
  CHECK(loaded->marks == t.marks());
  CHECK(static_cast<int>(loaded->class_members.size()) == t.num_classes());
  for (int i = 0; i < t.num_classes(); ++i)
    CHECK(loaded->class_members[i] == t.class_reps()[i].members);

  // a group whose lattice is computed for the first time stores on miss
  GroupPtr c5 = cyclic_group(5);
  CHECK(!cache_load(c5->fingerprint()).has_value());
  subgroup_classes(c5);
  CHECK(cache_load(c5->fingerprint()).has_value());

  // a second store of the same payload is byte-identical
  std::string path = cache_entry_path(fp);
  std::ifstream in(path, std::ios::binary);
  std::vector<unsigned char> before((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
  cache_store(fp, *loaded);
  std::ifstream in2(path, std::ios::binary);
  std::vector<unsigned char> after((std::istreambuf_iterator<char>(in2)),
                                   std::istreambuf_iterator<char>());
  CHECK(before == after);
}

TEST_CASE("checksum corruption degrades to a miss") {
  TempCacheDir tmp;
  std::string fp = "test-fingerprint";
  cache_store(fp, sample_payload());
  REQUIRE(cache_load(fp).has_value());

  std::string path = cache_entry_path(fp);
  std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
  f.seekp(30);
  char byte;
  f.seekg(30);
  f.get(byte);
  byte ^= 0x11;
  f.seekp(30);
  f.put(byte);
  f.close();

  CHECK(!cache_load(fp).has_value());  // warns and reports a miss
}
