#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tsadlab/core.hpp"

namespace tsad {

enum class SequenceFormat { chars, csv, rle_json };

std::optional<SequenceFormat> parse_format(std::string_view name);  // "chars", "csv", "rle-json"
std::string to_string(SequenceFormat f);

// .csv -> csv, .json -> rle-json, anything else -> chars.
SequenceFormat format_for_path(const std::string& path);

// Throws std::invalid_argument with a message naming the offending line or field.
BinarySeq parse_sequence(std::string_view text, SequenceFormat format);
std::string write_sequence(const BinarySeq& s, SequenceFormat format);

// Throws std::runtime_error when the file cannot be read.
BinarySeq read_sequence_file(const std::string& path, std::optional<SequenceFormat> format = std::nullopt);

}  // namespace tsad
