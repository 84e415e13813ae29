#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "pbwtidx/fm.hpp"
#include "pbwtidx/positional.hpp"

namespace pbwtidx {

/// Index file layout. All integers little-endian.
///
///   magic      8 bytes  "PBWTIDX1"
///   mode       u8       1 = positional, 2 = substring
///   alphabet   u32 length, symbol bytes, u8 sentinel
///   rank mode  u8       0 = exact, 1 = sampled
///
/// positional:
///   u64 n, u64 len, u8 policy kind, u64 stride
///   strings    n * len bytes, row-major
///   perms      u64 count, then per column: u64 j, n * u32
///   pbwt       len * n symbol codes, column-major
///   ranks      per column: u64 counter count, counters as u32
///
/// substring:
///   u64 text length n, u64 sample stride
///   bwt        (n + 1) codes, sentinel = 0
///   ranks      u64 counter count, counters as u32
///   samples    u64 count, then per sample: u64 row, u64 text position
enum class IndexMode : std::uint8_t { Positional = 1, Substring = 2 };

inline constexpr std::string_view kIndexMagic = "PBWTIDX1";

using AnyIndex = std::variant<PositionalIndex, FmIndex>;

std::string serialize(const PositionalIndex& index);
std::string serialize(const FmIndex& index);

/// Throws CorruptIndex on malformed input.
AnyIndex deserialize(std::string_view bytes);

IndexMode mode_of(const AnyIndex& index) noexcept;

/// File helpers; IO failures raise Errc::Io.
void save_index(const std::filesystem::path& path, const std::string& bytes);
AnyIndex load_index(const std::filesystem::path& path);

}  // namespace pbwtidx
