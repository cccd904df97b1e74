#include "tsadlab/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace tsad {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

BinarySeq parse_chars(std::string_view text) {
    std::vector<std::uint8_t> bits;
    int contentLines = 0;
    for (const auto& line : lines_of(text)) {
        if (trim(line).empty()) continue;
        if (++contentLines > 1) throw std::invalid_argument("chars format expects a single line");
        for (char c : line) {
            if (c == '0' || c == '1') {
                bits.push_back(static_cast<std::uint8_t>(c - '0'));
            } else if (c != ' ' && c != '\t') {
                throw std::invalid_argument(fmt::format("unexpected character '{}' in chars sequence", c));
            }
        }
    }
    if (bits.empty()) throw std::invalid_argument("empty sequence");
    return BinarySeq(std::move(bits));
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

BinarySeq parse_csv(std::string_view text) {
    auto lines = lines_of(text);
    std::size_t row = 0;
    while (row < lines.size() && trim(lines[row]).empty()) ++row;
    if (row == lines.size()) throw std::invalid_argument("csv has no header");
    auto header = split_csv(lines[row]);
    std::size_t col = header.size();
    for (std::size_t k = 0; k < header.size(); ++k) {
        if (header[k] == "label" || header[k] == "\"label\"") col = k;
    }
    if (col == header.size()) throw std::invalid_argument("csv has no 'label' column");
    std::vector<std::uint8_t> bits;
    for (++row; row < lines.size(); ++row) {
        if (trim(lines[row]).empty()) continue;
        auto cells = split_csv(lines[row]);
        if (cells.size() != header.size()) throw std::invalid_argument(fmt::format("csv line {}: wrong field count", row + 1));
        const auto& v = cells[col];
        if (v != "0" && v != "1") throw std::invalid_argument(fmt::format("csv line {}: label must be 0 or 1", row + 1));
        bits.push_back(static_cast<std::uint8_t>(v[0] - '0'));
    }
    if (bits.empty()) throw std::invalid_argument("empty sequence");
    return BinarySeq(std::move(bits));
}

BinarySeq parse_rle(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("rle-json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("length") || !j.contains("ones")) {
        throw std::invalid_argument("rle-json needs 'length' and 'ones'");
    }
    if (!j["length"].is_number_integer() || j["length"].get<long>() < 1) {
        throw std::invalid_argument("rle-json 'length' must be a positive integer");
    }
    const long n = j["length"].get<long>();
    if (!j["ones"].is_array()) throw std::invalid_argument("rle-json 'ones' must be an array");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    long prevHi = -1;
    for (const auto& iv : j["ones"]) {
        if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number_integer() || !iv[1].is_number_integer()) {
            throw std::invalid_argument("rle-json intervals must be [lo, hi] integer pairs");
        }
        long lo = iv[0].get<long>(), hi = iv[1].get<long>();
        if (lo < 1 || hi > n || lo > hi) throw std::invalid_argument(fmt::format("rle-json interval [{}, {}] out of range", lo, hi));
        if (prevHi >= 0 && lo <= prevHi + 1) {
            throw std::invalid_argument("rle-json intervals must be sorted, disjoint and non-adjacent");
        }
        for (long i = lo; i <= hi; ++i) bits[static_cast<std::size_t>(i - 1)] = 1;
        prevHi = hi;
    }
    return BinarySeq(std::move(bits));
}

}  // namespace

std::optional<SequenceFormat> parse_format(std::string_view name) {
    if (name == "chars") return SequenceFormat::chars;
    if (name == "csv") return SequenceFormat::csv;
    if (name == "rle-json") return SequenceFormat::rle_json;
    return std::nullopt;
}

std::string to_string(SequenceFormat f) {
    switch (f) {
        case SequenceFormat::chars: return "chars";
        case SequenceFormat::csv: return "csv";
        case SequenceFormat::rle_json: return "rle-json";
    }
    return "chars";
}

SequenceFormat format_for_path(const std::string& path) {
    auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".csv") return SequenceFormat::csv;
    if (ext == ".json") return SequenceFormat::rle_json;
    return SequenceFormat::chars;
}

BinarySeq parse_sequence(std::string_view text, SequenceFormat format) {
    switch (format) {
        case SequenceFormat::chars: return parse_chars(text);
        case SequenceFormat::csv: return parse_csv(text);
        case SequenceFormat::rle_json: return parse_rle(text);
    }
    throw std::invalid_argument("unknown format");
}

std::string write_sequence(const BinarySeq& s, SequenceFormat format) {
    switch (format) {
        case SequenceFormat::chars: return s.str() + "\n";
        case SequenceFormat::csv: {
            std::string out = "label\n";
            for (int i = 1; i <= s.n(); ++i) out += s(i) ? "1\n" : "0\n";
            return out;
        }
        case SequenceFormat::rle_json: {
            nlohmann::ordered_json j;
            j["length"] = s.n();
            j["ones"] = nlohmann::ordered_json::array();
            for (const auto& r : runs(s, 1)) j["ones"].push_back({r.lo, r.hi});
            return j.dump() + "\n";
        }
    }
    throw std::invalid_argument("unknown format");
}

BinarySeq read_sequence_file(const std::string& path, std::optional<SequenceFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_sequence(buf.str(), format.value_or(format_for_path(path)));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace tsad
