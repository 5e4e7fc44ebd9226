#pragma once
/* Optional on-disk persistence for the memo cache.  When the environment
 * variable EQUIKL_CACHE_DIR names a directory, computed pairs are stored in
 * a versioned binary file inside it and reloaded on startup; otherwise the
 * cache is memory-only.  Unreadable, truncated, or differently-versioned
 * files are silently ignored, and writes go through a temporary file that
 * is renamed into place. */

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "kl.hpp"
#include "rep.hpp"
#include "young.hpp"

namespace equikl {

namespace cache_detail {

constexpr std::uint32_t kMagic = 0x454b4c43;  // "EKLC"
constexpr std::uint32_t kVersion = 1;

struct Reader {
  std::istream& in;
  std::uint32_t u32() {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) throw std::runtime_error("short read");
    return v;
  }
  std::int64_t i64() {
    std::int64_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) throw std::runtime_error("short read");
    return v;
  }
  std::string str() {
    const std::uint32_t n = u32();
    if (n > (1u << 24)) throw std::runtime_error("implausible string length");
    std::string s(n, '\0');
    in.read(s.data(), n);
    if (!in) throw std::runtime_error("short read");
    return s;
  }
  std::vector<int> ints() {
    const std::uint32_t n = u32();
    if (n > (1u << 20)) throw std::runtime_error("implausible list length");
    std::vector<int> v(n);
    for (auto& x : v) x = static_cast<int>(u32());
    return v;
  }
};

struct Writer {
  std::ostream& out;
  void u32(std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), sizeof v); }
  void i64(std::int64_t v) { out.write(reinterpret_cast<const char*>(&v), sizeof v); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  void ints(const std::vector<int>& v) {
    u32(static_cast<std::uint32_t>(v.size()));
    for (int x : v) u32(static_cast<std::uint32_t>(x));
  }
};

inline void write_graded(Writer& w, const GradedVirtualRep& f) {
  const auto& blocks = f.group().blocks();
  w.u32(static_cast<std::uint32_t>(blocks.size()));
  for (const auto& b : blocks) w.ints(b);
  std::uint32_t count = 0;
  for (const auto& [d, r] : f.terms())
    count += static_cast<std::uint32_t>(r.terms().size());
  w.u32(count);
  for (const auto& [d, r] : f.terms())
    for (const auto& [mp, c] : r.terms()) {
      w.u32(static_cast<std::uint32_t>(d));
      w.u32(static_cast<std::uint32_t>(mp.size()));
      for (const Partition& p : mp) w.ints(p.parts());
      w.i64(c);
    }
}

inline GradedVirtualRep read_graded(Reader& r) {
  const std::uint32_t nblocks = r.u32();
  if (nblocks > 64) throw std::runtime_error("implausible block count");
  std::vector<std::vector<int>> blocks;
  for (std::uint32_t i = 0; i < nblocks; ++i) blocks.push_back(r.ints());
  const YoungGroup g(std::move(blocks));
  GradedVirtualRep out(g);
  const std::uint32_t count = r.u32();
  if (count > (1u << 22)) throw std::runtime_error("implausible term count");
  std::map<int, VirtualRep> by_degree;
  for (std::uint32_t t = 0; t < count; ++t) {
    const int d = static_cast<int>(r.u32());
    const std::uint32_t nparts = r.u32();
    if (nparts > 64) throw std::runtime_error("implausible factor count");
    MultiPartition mp;
    for (std::uint32_t q = 0; q < nparts; ++q) mp.emplace_back(r.ints());
    const long long c = r.i64();
    auto [it, fresh] = by_degree.try_emplace(d, g);
    it->second.add(mp, c);
  }
  for (const auto& [d, rep] : by_degree) out.add_term(d, rep);
  return out;
}

}  // namespace cache_detail

/* Path of the cache file, or empty when persistence is disabled. */
inline std::string cache_file_path() {
  const char* dir = std::getenv("EQUIKL_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/equikl-cache-v" +
         std::to_string(cache_detail::kVersion) + ".bin";
}

/* Merge all entries of the on-disk cache, if any, into the engine. */
inline void load_cache(KlEngine& engine) {
  const std::string path = cache_file_path();
  if (path.empty()) return;
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  try {
    cache_detail::Reader r{in};
    if (r.u32() != cache_detail::kMagic) return;
    if (r.u32() != cache_detail::kVersion) return;
    const std::uint32_t count = r.u32();
    if (count > (1u << 22)) return;
    for (std::uint32_t i = 0; i < count; ++i) {
      std::string key = r.str();
      KlPair pair{cache_detail::read_graded(r), cache_detail::read_graded(r)};
      engine.absorb(key, std::move(pair));
    }
  } catch (...) {
    // a damaged cache is treated as no cache at all
  }
}

/* Write the engine's current cache next to any existing file, atomically. */
inline void save_cache(KlEngine& engine) {
  const std::string path = cache_file_path();
  if (path.empty()) return;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    cache_detail::Writer w{out};
    w.u32(cache_detail::kMagic);
    w.u32(cache_detail::kVersion);
    const auto snap = engine.snapshot();
    w.u32(static_cast<std::uint32_t>(snap.size()));
    for (const auto& [key, pair] : snap) {
      w.str(key);
      cache_detail::write_graded(w, pair.p);
      cache_detail::write_graded(w, pair.z);
    }
    if (!out) return;
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace equikl
