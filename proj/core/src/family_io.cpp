#include "degree_forge/family_io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "degree_forge/errors.hpp"

namespace degree_forge {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<int> to_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

UniformFamily read_family(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<std::pair<int, int>> header;
  std::vector<VertexSet> sets;
  std::vector<int> set_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    if (!header) {
      std::istringstream fields{std::string(body)};
      std::string a, b, extra;
      fields >> a >> b;
      const auto n = to_int(a);
      const auto k = to_int(b);
      if (!n || !k || (fields >> extra)) {
        throw ParseError(line_no, "expected header \"n k\", got \"" + std::string(body) + "\"");
      }
      if (*n < 1 || *n > kMaxGround) throw ParseError(line_no, "n must lie in 1..64");
      if (*k < 0 || *k > *n) throw ParseError(line_no, "k must lie in 0..n");
      header = std::pair{*n, *k};
      continue;
    }

    const auto [n, k] = *header;
    std::vector<int> members;
    std::string_view rest = body;
    while (true) {
      const auto comma = rest.find(',');
      const auto token = rest.substr(0, comma);
      const auto v = to_int(token);
      if (!v) throw ParseError(line_no, "malformed vertex \"" + std::string(trim(token)) + "\"");
      if (*v < 1 || *v > n) {
        throw ParseError(line_no, "vertex " + std::to_string(*v) + " outside 1.." +
                                      std::to_string(n));
      }
      if (!members.empty() && *v <= members.back()) {
        throw ParseError(line_no, "vertices must be strictly increasing");
      }
      members.push_back(*v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (static_cast<int>(members.size()) != k) {
      throw ParseError(line_no, "set has " + std::to_string(members.size()) +
                                    " elements, expected " + std::to_string(k));
    }
    sets.push_back(VertexSet::of(members));
    set_lines.push_back(line_no);
  }

  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header \"n k\"");

  std::unordered_set<VertexSet> seen;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!seen.insert(sets[i]).second) {
      throw ParseError(set_lines[i], "duplicate set {" + to_string(sets[i]) + "}");
    }
  }
  return UniformFamily::from_sets(header->first, header->second, std::move(sets));
}

UniformFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_family(in);
}

void write_family(std::ostream& out, const UniformFamily& family) {
  out << family.n() << ' ' << family.k() << '\n';
  for (VertexSet s : family) out << to_string(s) << '\n';
}

std::string format_family(const UniformFamily& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

}  // namespace degree_forge
