#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "braidkex/canonical_form.hpp"
#include "braidkex/protocol.hpp"

namespace braidkex::wire {

// Frame layout: magic "BKEX" | version 0x01 | kind byte | payload length as
// 32-bit big-endian | payload.  All integers are big-endian, fixed width.
//
// BraidBlob: n u16 | delta_power i32 (two's complement) | factor_count u32 |
// factor_count tables of n bytes, byte j = image of position j.
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr char kMagic[4] = {'B', 'K', 'E', 'X'};

std::vector<std::uint8_t> encode_braid(const CanonicalForm& f);
// Validates every CanonicalForm invariant; rejects trailing bytes.
CanonicalForm decode_braid(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_message(const HandshakeMessage& msg);
HandshakeMessage decode_message(std::span<const std::uint8_t> bytes);

// A transcript file is the concatenation of frames in protocol order.
std::vector<std::uint8_t> encode_transcript(const Transcript& transcript);
Transcript decode_transcript(std::span<const std::uint8_t> bytes);

void write_transcript(const std::filesystem::path& path, const Transcript& transcript);
Transcript read_transcript(const std::filesystem::path& path);

}  // namespace braidkex::wire
