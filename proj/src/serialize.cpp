#include "ane/serialize.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include "ane/errors.hpp"

namespace ane {

namespace {

std::array<std::uint32_t, 256> make_crc_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) {
      c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
    }
    table[i] = c;
  }
  return table;
}

const std::array<std::uint32_t, 256>& crc_table() {
  static const auto table = make_crc_table();
  return table;
}

}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> bytes, std::uint32_t seed) {
  std::uint32_t c = seed ^ 0xffffffffu;
  for (std::uint8_t b : bytes) {
    c = crc_table()[(c ^ b) & 0xffu] ^ (c >> 8);
  }
  return c ^ 0xffffffffu;
}

std::uint32_t crc32_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::uint32_t c = 0xffffffffu;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      c = crc_table()[(c ^ static_cast<std::uint8_t>(buf[i])) & 0xffu] ^ (c >> 8);
    }
  }
  return c ^ 0xffffffffu;
}

void BinaryWriter::put_u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) payload_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void BinaryWriter::put_u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) payload_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void BinaryWriter::put_f64(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(bits);
}

void BinaryWriter::put_string(const std::string& s) {
  put_u64(s.size());
  payload_.insert(payload_.end(), s.begin(), s.end());
}

void BinaryWriter::put_matrix(const Matrix& m) {
  put_u64(m.rows());
  put_u64(m.cols());
  for (double v : m.data()) put_f64(v);
}

void BinaryWriter::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path);
  out.write(magic_.data(), static_cast<std::streamsize>(magic_.size()));
  out.write(reinterpret_cast<const char*>(payload_.data()),
            static_cast<std::streamsize>(payload_.size()));
  const std::uint32_t sum = crc32(payload_);
  for (int i = 0; i < 4; ++i) {
    const char b = static_cast<char>(sum >> (8 * i));
    out.write(&b, 1);
  }
  if (!out) throw IoError("error writing file: " + path);
}

BinaryReader::BinaryReader(const std::string& path, const std::string& magic) : path_(path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (bytes.size() < magic.size() + 4) {
    throw ParseError(path + ": file truncated");
  }
  if (std::memcmp(bytes.data(), magic.data(), magic.size()) != 0) {
    throw ParseError(path + ": unrecognized file header (expected " + magic + ")");
  }
  const std::size_t payload_size = bytes.size() - magic.size() - 4;
  payload_.assign(bytes.begin() + static_cast<std::ptrdiff_t>(magic.size()),
                  bytes.begin() + static_cast<std::ptrdiff_t>(magic.size() + payload_size));
  std::uint32_t stored = 0;
  for (int i = 0; i < 4; ++i) {
    stored |= static_cast<std::uint32_t>(bytes[magic.size() + payload_size + i]) << (8 * i);
  }
  if (stored != crc32(payload_)) {
    throw ParseError(path + ": checksum mismatch (file corrupted or truncated)");
  }
}

void BinaryReader::need(std::size_t n) const {
  if (pos_ + n > payload_.size()) {
    throw ParseError(path_ + ": unexpected end of payload");
  }
}

std::uint32_t BinaryReader::get_u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(payload_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

std::uint64_t BinaryReader::get_u64() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(payload_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

double BinaryReader::get_f64() {
  const std::uint64_t bits = get_u64();
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

std::string BinaryReader::get_string() {
  const std::uint64_t n = get_u64();
  need(n);
  std::string s(payload_.begin() + static_cast<std::ptrdiff_t>(pos_),
                payload_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
  pos_ += n;
  return s;
}

Matrix BinaryReader::get_matrix() {
  const std::uint64_t rows = get_u64();
  const std::uint64_t cols = get_u64();
  Matrix m(rows, cols);
  for (double& v : m.data()) v = get_f64();
  return m;
}

}  // namespace ane
