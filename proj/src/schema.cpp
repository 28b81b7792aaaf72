#include "olap/schema.hpp"

#include <algorithm>

#include "olap/error.hpp"

namespace olap {

namespace {

constexpr std::string_view kAllToken = "All";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error("line " + std::to_string(line_no) + ": " + what);
}

MemberPath split_dotted(std::string_view text, std::size_t line_no) {
  MemberPath path;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view level = trim(dot == std::string_view::npos ? text.substr(start)
                                                                : text.substr(start, dot - start));
    if (level.empty()) fail(line_no, "empty level in member path '" + std::string(text) + "'");
    path.emplace_back(level);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return path;
}

}  // namespace

std::string join_path(const MemberPath& path) {
  std::string out;
  for (const auto& level : path) {
    if (!out.empty()) out += '.';
    out += level;
  }
  return out;
}

std::string bracket_path(std::span<const std::string> segments) {
  std::string out;
  for (const auto& seg : segments) {
    if (!out.empty()) out += '.';
    out += '[';
    out += seg;
    out += ']';
  }
  return out;
}

std::optional<std::vector<std::string>> unbracket_path(std::string_view token) {
  std::vector<std::string> segments;
  std::size_t pos = 0;
  while (pos < token.size()) {
    if (token[pos] != '[') return std::nullopt;
    std::size_t close = token.find(']', pos + 1);
    if (close == std::string_view::npos) return std::nullopt;
    if (close == pos + 1) return std::nullopt;  // empty name
    segments.emplace_back(token.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    if (pos == token.size()) break;
    if (token[pos] != '.') return std::nullopt;
    ++pos;
    if (pos == token.size()) return std::nullopt;  // trailing dot
  }
  if (segments.empty()) return std::nullopt;
  return segments;
}

bool DimensionDef::has_member(const MemberPath& path) const {
  return std::find(members.begin(), members.end(), path) != members.end();
}

bool CubeDef::has_measure(std::string_view m) const {
  return measures.find(std::string(m)) != measures.end();
}

const DimensionDef* CubeDef::find_dimension(std::string_view name) const {
  for (const auto& d : dimensions)
    if (d.name == name) return &d;
  return nullptr;
}

const CubeDef* SchemaDef::find_cube(std::string_view name) const {
  for (const auto& c : cubes)
    if (c.name == name) return &c;
  return nullptr;
}

EntityKind lookup_entity(const SchemaDef& schema, const std::string& cube,
                         std::string_view token) {
  auto segments = unbracket_path(token);
  if (!segments) return UnknownRef{};
  return lookup_entity(schema, cube, *segments);
}

EntityKind lookup_entity(const SchemaDef& schema, const std::string& cube,
                         std::span<const std::string> segments) {
  const CubeDef* c = schema.find_cube(cube);
  if (!c || segments.size() < 2) return UnknownRef{};
  if (segments[0] == "Measures") {
    if (segments.size() == 2 && c->has_measure(segments[1])) return MeasureRef{segments[1]};
    return UnknownRef{};
  }
  const DimensionDef* d = c->find_dimension(segments[0]);
  if (!d) return UnknownRef{};
  if (segments.size() == 2 && segments[1] == kAllToken) return AllMembersRef{d->name};
  MemberPath path(segments.begin() + 1, segments.end());
  if (d->has_member(path)) return MemberRef{d->name, std::move(path)};
  return UnknownRef{};
}

SchemaDef parse_schema(std::string_view text) {
  SchemaDef schema;
  CubeDef* cube = nullptr;
  DimensionDef* dimension = nullptr;
  std::size_t dimension_line = 0;

  auto close_dimension = [&](std::size_t line_no) {
    if (dimension && dimension->members.empty())
      fail(line_no, "dimension '" + dimension->name + "' declares no members (declared on line " +
                        std::to_string(dimension_line) + ")");
    dimension = nullptr;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    if (indent < raw.size() && raw[indent] == '\t') fail(line_no, "tab indentation not supported");

    std::size_t space = line.find(' ');
    std::string_view keyword = space == std::string_view::npos ? line : line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space + 1));

    if (keyword == "cube") {
      if (indent != 0) fail(line_no, "'cube' must not be indented");
      if (rest.empty()) fail(line_no, "cube declaration missing name");
      close_dimension(line_no);
      if (schema.find_cube(rest)) fail(line_no, "duplicate cube '" + std::string(rest) + "'");
      schema.cubes.push_back(CubeDef{std::string(rest), {}, {}});
      cube = &schema.cubes.back();
    } else if (keyword == "measure") {
      if (!cube) fail(line_no, "'measure' outside a cube");
      if (indent != 2) fail(line_no, "'measure' must be indented two spaces");
      if (rest.empty()) fail(line_no, "measure declaration missing name");
      close_dimension(line_no);
      if (!cube->measures.insert(std::string(rest)).second)
        fail(line_no, "duplicate measure '" + std::string(rest) + "' in cube '" + cube->name + "'");
    } else if (keyword == "dimension") {
      if (!cube) fail(line_no, "'dimension' outside a cube");
      if (indent != 2) fail(line_no, "'dimension' must be indented two spaces");
      if (rest.empty()) fail(line_no, "dimension declaration missing name");
      close_dimension(line_no);
      if (cube->find_dimension(rest))
        fail(line_no, "duplicate dimension '" + std::string(rest) + "' in cube '" + cube->name + "'");
      cube->dimensions.push_back(DimensionDef{std::string(rest), {}});
      dimension = &cube->dimensions.back();
      dimension_line = line_no;
    } else if (keyword == "member") {
      if (!dimension) fail(line_no, "'member' outside a dimension");
      if (indent != 4) fail(line_no, "'member' must be indented four spaces");
      if (rest.empty()) fail(line_no, "member declaration missing path");
      MemberPath path = split_dotted(rest, line_no);
      if (path.front() == kAllToken)
        fail(line_no, "'All' is reserved and may not start a member path");
      if (dimension->has_member(path))
        fail(line_no, "duplicate member '" + join_path(path) + "' in dimension '" + dimension->name + "'");
      dimension->members.push_back(std::move(path));
    } else {
      fail(line_no, "unrecognized keyword '" + std::string(keyword) + "'");
    }
  }
  close_dimension(line_no);
  if (schema.cubes.empty()) throw Error("schema declares no cubes");
  return schema;
}

}  // namespace olap
