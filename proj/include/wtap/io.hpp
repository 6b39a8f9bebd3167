#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wtap/instance.hpp"

namespace wtap {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts {"n", "root", "edges": [[u,v],...], "links": [{"u","v","w"},...]}
// with optional "scale". Weights may be integers, decimals or "p/q" strings;
// all are multiplied by the LCM of their denominators.
InstanceData instance_from_json(const nlohmann::json& doc);

// Line format: "n N", "root R", "edge U V", "link U V W"; '#' starts a comment.
InstanceData instance_from_text(std::string_view text);

// Dispatches on the first non-blank character ('{' means JSON).
InstanceData parse_instance(std::string_view text);
InstanceData read_instance(const std::filesystem::path& path);

nlohmann::ordered_json instance_to_json(const InstanceData& data);
std::string dump_json(const nlohmann::ordered_json& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace wtap
