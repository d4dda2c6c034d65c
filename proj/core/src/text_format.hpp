#pragma once

// Line-oriented `key = value` text where each value is a JSON literal. A
// value may continue over following lines until it parses; `#` starts a
// comment outside strings.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace poromix::text {

using Json = nlohmann::json;

struct Entry {
  std::string key;
  Json value;
  int line = 0;
};

/// Throws ParseError naming `source` and the line on malformed input, and
/// SchemaError on duplicate keys.
std::vector<Entry> parse(const std::string& text, const std::string& source);

/// %.17g, which round-trips every finite double.
std::string format_number(double x);

/// Compact JSON with sorted object keys and %.17g numbers.
std::string dump(const Json& v);

/// One `key = value` line per entry in key order.
std::string write(const std::map<std::string, Json>& entries);

std::string read_file(const std::string& path);

}  // namespace poromix::text
