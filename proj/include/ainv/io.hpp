#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ainv/types.hpp"

namespace ainv {

enum class InputFormat { text, binary };

InputFormat parse_input_format(std::string_view name);

/// Malformed input. The message names the offending line/column or byte.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whitespace-separated decimal int64 values.
std::vector<Key> parse_text(std::string_view data);

/// "AINV", version 0x01, u64 LE count, then count i64 LE keys. Nothing may
/// follow the last key.
std::vector<Key> parse_binary(std::string_view data);

std::vector<Key> parse_input(std::string_view data, InputFormat format);

/// Space-separated with a trailing newline; empty for an empty sequence.
std::string to_text(const std::vector<Key>& keys);
std::string to_binary(const std::vector<Key>& keys);
std::string encode(const std::vector<Key>& keys, InputFormat format);

std::string read_all(std::istream& in);

}  // namespace ainv
