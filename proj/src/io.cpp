#include "riskcast/io.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "riskcast/errors.hpp"

namespace riskcast {

bool is_little_endian() {
  const std::uint32_t probe = 1;
  std::uint8_t byte;
  std::memcpy(&byte, &probe, 1);
  return byte == 1;
}

void write_bytes(const std::string& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open for write: " + path);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) throw DataError("short write: " + path);
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw DataError("cannot open: " + path);
  auto size = in.tellg();
  in.seekg(0);
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(size));
  in.read(reinterpret_cast<char*>(buf.data()), size);
  if (!in) throw DataError("short read: " + path);
  return buf;
}

std::string read_text_file(const std::string& path) {
  auto bytes = read_bytes(path);
  return std::string(bytes.begin(), bytes.end());
}

void write_text_file(const std::string& path, const std::string& text) {
  write_bytes(path, text.data(), text.size());
}

void atomic_write_bytes(const std::string& path, const void* data, std::size_t size) {
  std::string tmp = path + ".tmp";
  write_bytes(tmp, data, size);
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw DataError("atomic rename failed: " + path + " (" + ec.message() + ")");
}

void write_f32_tensor(const std::string& path_base, const std::vector<float>& data,
                      const std::vector<std::int64_t>& shape) {
  std::int64_t count = 1;
  for (auto d : shape) count *= d;
  if (count != static_cast<std::int64_t>(data.size()))
    throw DataError("tensor shape does not match data size for " + path_base);
  if (!is_little_endian()) throw DataError("big-endian hosts are not supported by the f32 layout");

  write_bytes(path_base + ".f32", data.data(), data.size() * sizeof(float));
  nlohmann::json side;
  side["dtype"] = "float32";
  side["shape"] = shape;
  write_text_file(path_base + ".json", side.dump(2) + "\n");
}

std::vector<float> read_f32_tensor(const std::string& path_base,
                                   std::vector<std::int64_t>* shape_out) {
  if (!is_little_endian()) throw DataError("big-endian hosts are not supported by the f32 layout");
  auto side = nlohmann::json::parse(read_text_file(path_base + ".json"));
  if (side.at("dtype").get<std::string>() != "float32")
    throw DataError("unexpected dtype in sidecar for " + path_base);
  std::vector<std::int64_t> shape = side.at("shape").get<std::vector<std::int64_t>>();
  std::int64_t count = 1;
  for (auto d : shape) count *= d;

  auto bytes = read_bytes(path_base + ".f32");
  if (bytes.size() != static_cast<std::size_t>(count) * sizeof(float))
    throw DataError("tensor payload size mismatch for " + path_base);
  std::vector<float> data(static_cast<std::size_t>(count));
  std::memcpy(data.data(), bytes.data(), bytes.size());
  if (shape_out) *shape_out = shape;
  return data;
}

}  // namespace riskcast
