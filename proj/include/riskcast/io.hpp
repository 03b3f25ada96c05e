#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace riskcast {

// Columnar tensor layout: raw little-endian float32 in <name>.f32 plus a
// JSON sidecar <name>.json holding {"dtype":"float32","shape":[...]}.
void write_f32_tensor(const std::string& path_base, const std::vector<float>& data,
                      const std::vector<std::int64_t>& shape);
std::vector<float> read_f32_tensor(const std::string& path_base,
                                   std::vector<std::int64_t>* shape_out);

void write_bytes(const std::string& path, const void* data, std::size_t size);
std::vector<std::uint8_t> read_bytes(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Write-temp-then-rename, so readers never observe a partial file.
void atomic_write_bytes(const std::string& path, const void* data, std::size_t size);

bool is_little_endian();

}  // namespace riskcast
