#include "text_format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "poromix/errors.hpp"

namespace poromix::text {

namespace {

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'))
      return false;
  return true;
}

void dump_into(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      // nlohmann's default object is a std::map, so iteration is sorted.
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ", ";
        first = false;
        out += Json(it.key()).dump();
        out += ": ";
        dump_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        dump_into(v[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_number(v.get<double>());
      break;
    default:
      out += v.dump();
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  // Keep floats recognisable as floats so integers and reals stay distinct.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& v) {
  std::string out;
  dump_into(v, out);
  return out;
}

std::vector<Entry> parse(const std::string& text, const std::string& source) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(strip_comment(l));
  }
  std::vector<Entry> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    const int lineno = static_cast<int>(i) + 1;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(source + ":" + std::to_string(lineno) +
                       ": expected 'key = value'");
    Entry e;
    e.key = trim(line.substr(0, eq));
    e.line = lineno;
    if (!valid_key(e.key))
      throw ParseError(source + ":" + std::to_string(lineno) + ": bad key '" +
                       e.key + "'");
    std::string value = trim(line.substr(eq + 1));
    while (!Json::accept(value)) {
      if (i + 1 >= lines.size())
        throw ParseError(source + ":" + std::to_string(lineno) +
                         ": malformed value for '" + e.key + "'");
      value += "\n" + lines[++i];
    }
    e.value = Json::parse(value);
    if (!seen.insert(e.key).second)
      throw SchemaError(source + ":" + std::to_string(lineno) +
                        ": duplicate key '" + e.key + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::string write(const std::map<std::string, Json>& entries) {
  std::string out;
  for (const auto& [k, v] : entries) {
    out += k;
    out += " = ";
    out += dump(v);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace poromix::text
