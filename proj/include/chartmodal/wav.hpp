#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "chartmodal/render.hpp"

namespace chartmodal {

/// Canonical 44-byte-header RIFF/WAVE file: PCM, 2 channels, 16-bit LE.
std::vector<std::uint8_t> encode_wav(const StereoBuffer& buffer);

void write_wav(const std::filesystem::path& path, const StereoBuffer& buffer);

}  // namespace chartmodal
