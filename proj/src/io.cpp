#include "ainv/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace ainv {
namespace {

constexpr std::array<char, 4> kMagic{'A', 'I', 'N', 'V'};
constexpr unsigned char kVersion = 0x01;
constexpr std::size_t kHeaderBytes = 4 + 1 + 8;

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::uint64_t load_le64(std::string_view data, std::size_t offset) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    value |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[offset + i])) << (8 * i);
  }
  return value;
}

void store_le64(std::string& out, std::uint64_t value) {
  for (std::size_t i = 0; i < 8; ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "text") return InputFormat::text;
  if (name == "binary") return InputFormat::binary;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected text or binary)");
}

std::vector<Key> parse_text(std::string_view data) {
  std::vector<Key> keys;
  std::size_t line = 1;
  std::size_t line_start = 0;
  std::size_t i = 0;
  while (i < data.size()) {
    if (is_space(data[i])) {
      if (data[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < data.size() && !is_space(data[end])) ++end;
    const std::string_view token = data.substr(i, end - i);

    Key value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      std::ostringstream msg;
      msg << "line " << line << ", column " << (i - line_start + 1) << ": "
          << (ec == std::errc::result_out_of_range ? "integer out of 64-bit range"
                                                   : "invalid integer")
          << " '" << token << "'";
      throw InputError(msg.str());
    }
    keys.push_back(value);
    i = end;
  }
  return keys;
}

std::vector<Key> parse_binary(std::string_view data) {
  for (std::size_t i = 0; i < kMagic.size(); ++i) {
    if (i >= data.size() || data[i] != kMagic[i]) {
      throw InputError("byte " + std::to_string(i) + ": bad magic (expected \"AINV\")");
    }
  }
  if (data.size() <= 4) throw InputError("byte 4: missing version byte");
  if (static_cast<unsigned char>(data[4]) != kVersion) {
    throw InputError("byte 4: unsupported version " +
                     std::to_string(static_cast<unsigned char>(data[4])));
  }
  if (data.size() < kHeaderBytes) {
    throw InputError("byte " + std::to_string(data.size()) + ": truncated element count");
  }
  const std::uint64_t count = load_le64(data, 5);
  const std::size_t available = (data.size() - kHeaderBytes) / 8;
  if (count > available) {
    throw InputError("byte " + std::to_string(kHeaderBytes + available * 8) + ": expected " +
                     std::to_string(count) + " keys, found " + std::to_string(available));
  }
  const std::size_t end = kHeaderBytes + count * 8;
  if (data.size() != end) {
    throw InputError("byte " + std::to_string(end) + ": " + std::to_string(data.size() - end) +
                     " trailing bytes after the last key");
  }

  std::vector<Key> keys(count);
  for (std::size_t k = 0; k < count; ++k) {
    keys[k] = static_cast<Key>(load_le64(data, kHeaderBytes + 8 * k));
  }
  return keys;
}

std::vector<Key> parse_input(std::string_view data, InputFormat format) {
  return format == InputFormat::text ? parse_text(data) : parse_binary(data);
}

std::string to_text(const std::vector<Key>& keys) {
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(keys[i]);
  }
  if (!keys.empty()) out.push_back('\n');
  return out;
}

std::string to_binary(const std::vector<Key>& keys) {
  std::string out(kMagic.begin(), kMagic.end());
  out.push_back(static_cast<char>(kVersion));
  store_le64(out, keys.size());
  for (Key key : keys) store_le64(out, static_cast<std::uint64_t>(key));
  return out;
}

std::string encode(const std::vector<Key>& keys, InputFormat format) {
  return format == InputFormat::text ? to_text(keys) : to_binary(keys);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace ainv
