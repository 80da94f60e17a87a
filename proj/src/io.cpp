#include "hcube/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>

#include "hcube/error.hpp"
#include "hcube/rational.hpp"

namespace hcube {
namespace {

std::string trim(const std::string& s) {
  const auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  const auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  return b < e ? std::string(b, e) : std::string();
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw ValidationError(source + ":" + std::to_string(line) + ": " + what);
}

/// Accumulates vertices while enforcing one dimension and no repeats.
class VertexCollector {
 public:
  explicit VertexCollector(std::string source) : source_(std::move(source)) {}

  void add(const std::string& text, std::size_t line) {
    std::optional<Vertex> v;
    try {
      v = parse_vertex(text);
    } catch (const ValidationError&) {
      fail(source_, line, "malformed bitstring '" + text + "'");
    }
    if (!vertices_.empty() && v->dimension() != vertices_.front().dimension())
      fail(source_, line,
           "bitstring '" + text + "' has length " + std::to_string(v->dimension()) + ", expected " +
               std::to_string(vertices_.front().dimension()));
    if (!seen_.insert(v->bits()).second) fail(source_, line, "duplicate vertex " + text);
    vertices_.push_back(*v);
  }

  std::vector<Vertex> take() {
    if (vertices_.empty()) throw ValidationError(source_ + ": no vertices found");
    return std::move(vertices_);
  }

 private:
  std::string source_;
  std::vector<Vertex> vertices_;
  std::unordered_set<std::uint64_t> seen_;
};

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

Design parse_design(std::istream& in, const std::string& source) {
  VertexCollector collector(source);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    collector.add(s, line);
  }
  return Design(collector.take());
}

Design read_design_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_design(in, path.string());
}

void write_design(std::ostream& out, const Design& design) {
  for (const Vertex& v : design.vertices()) out << to_bitstring(v) << '\n';
}

Design parse_values(std::istream& in, const std::string& source) {
  VertexCollector collector(source);
  std::vector<Rational> values;
  std::string raw;
  std::size_t line = 0;
  bool first_record = true;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto comma = s.find(',');
    if (first_record) {
      first_record = false;
      std::string lowered = s;
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      lowered.erase(std::remove_if(lowered.begin(), lowered.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    lowered.end());
      if (lowered == "vertex,value") continue;
    }
    if (comma == std::string::npos) fail(source, line, "expected 'vertex,value'");
    const std::string vertex_text = trim(s.substr(0, comma));
    const std::string value_text = trim(s.substr(comma + 1));
    if (value_text.find(',') != std::string::npos) fail(source, line, "too many fields");
    collector.add(vertex_text, line);
    try {
      values.push_back(parse_rational(value_text));
    } catch (const ValidationError& e) {
      fail(source, line, e.what());
    }
  }
  return Design(collector.take(), std::move(values));
}

Design read_values_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_values(in, path.string());
}

}  // namespace hcube
