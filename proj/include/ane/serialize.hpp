#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ane/matrix.hpp"

namespace ane {

std::uint32_t crc32(std::span<const std::uint8_t> bytes, std::uint32_t seed = 0);
std::uint32_t crc32_file(const std::string& path);

// Binary container: [magic][payload][crc32 of payload], little-endian.
// The magic identifies the format, a version word inside the payload
// identifies the revision, the trailing checksum catches truncation and
// corruption.
class BinaryWriter {
 public:
  explicit BinaryWriter(std::string magic) : magic_(std::move(magic)) {}

  void put_u32(std::uint32_t v);
  void put_u64(std::uint64_t v);
  void put_f64(double v);
  void put_string(const std::string& s);
  void put_matrix(const Matrix& m);  // row-major f64, shape first

  // Writes magic + payload + checksum to disk.
  void save(const std::string& path) const;

 private:
  std::string magic_;
  std::vector<std::uint8_t> payload_;
};

class BinaryReader {
 public:
  // Reads the whole file, verifies the magic and the checksum.
  BinaryReader(const std::string& path, const std::string& magic);

  std::uint32_t get_u32();
  std::uint64_t get_u64();
  double get_f64();
  std::string get_string();
  Matrix get_matrix();

  bool at_end() const { return pos_ == payload_.size(); }

 private:
  void need(std::size_t n) const;

  std::vector<std::uint8_t> payload_;
  std::size_t pos_ = 0;
  std::string path_;
};

}  // namespace ane
