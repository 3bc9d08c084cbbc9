#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cotsel {

// 64-bit FNV-1a over raw bytes. Used for config hashes, input digests and
// stable sub-seed derivation; not a cryptographic hash.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

// FNV-1a of an entire file's contents.
std::uint64_t fnv1a64_file(const std::string& path);

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Derives an independent stream seed from (seed, tag). Lets samplers draw
// per-stratum streams that do not shift when unrelated strata are added.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) noexcept;

// mt19937_64 with portable draw helpers. std::uniform_int_distribution is
// implementation-defined, so bounded draws are done by rejection here to
// keep streams identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace cotsel
