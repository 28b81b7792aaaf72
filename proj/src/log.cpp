#include "olap/log.hpp"

#include <cctype>

#include "olap/error.hpp"
#include "olap/mdx.hpp"

namespace olap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with_select(std::string_view line) {
  if (line.size() < 6) return false;
  for (std::size_t i = 0; i < 6; ++i)
    if (std::tolower(static_cast<unsigned char>(line[i])) != "select"[i]) return false;
  return line.size() == 6 || !(std::isalnum(static_cast<unsigned char>(line[6])) || line[6] == '_');
}

}  // namespace

RawLog segment_log(std::string_view text) {
  RawLog log;
  RawSession* session = nullptr;
  std::string statement;

  auto flush = [&] {
    std::string_view body = trim(statement);
    if (!body.empty()) session->queries.emplace_back(body);
    statement.clear();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && text.empty()) break;
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    ++line_no;
    bool last = eol == std::string_view::npos;
    pos = last ? text.size() + 1 : eol + 1;
    if (last && raw.empty()) break;

    std::string_view line = trim(raw);

    if (line.substr(0, 2) == "--") {
      std::string_view rest = trim(line.substr(2));
      if (rest.substr(0, 8) != "session:")
        throw Error("line " + std::to_string(line_no) + ": malformed session header (expected '-- session: <id>')");
      std::string_view id = trim(rest.substr(8));
      if (id.empty())
        throw Error("line " + std::to_string(line_no) + ": session header missing id");
      if (session) flush();
      log.sessions.push_back(RawSession{std::string(id), {}});
      session = &log.sessions.back();
      continue;
    }

    if (line.empty()) {
      if (!statement.empty()) statement += '\n';
      continue;
    }
    if (!session)
      throw Error("line " + std::to_string(line_no) + ": statement outside any session");

    if (starts_with_select(line) && !trim(statement).empty()) flush();

    // Split on ';' within the line; text after a ';' starts a new statement.
    std::size_t start = 0;
    while (true) {
      std::size_t semi = line.find(';', start);
      if (semi == std::string_view::npos) {
        std::string_view tail = trim(line.substr(start));
        if (!tail.empty()) {
          if (!statement.empty()) statement += '\n';
          statement += tail;
        }
        break;
      }
      std::string_view piece = trim(line.substr(start, semi - start));
      if (!piece.empty()) {
        if (!statement.empty()) statement += '\n';
        statement += piece;
      }
      flush();
      start = semi + 1;
    }
  }
  if (session) flush();
  return log;
}

TaggedLog recognize_entities(const RawLog& raw, const SchemaDef& schema) {
  TaggedLog tagged;
  tagged.sessions.reserve(raw.sessions.size());
  for (const auto& session : raw.sessions) {
    TaggedSession out{session.id, {}};
    out.queries.reserve(session.queries.size());
    for (std::size_t i = 0; i < session.queries.size(); ++i) {
      try {
        out.queries.push_back(parse_mdx(session.queries[i], schema));
      } catch (const Error& e) {
        throw Error("session '" + session.id + "' query " + std::to_string(i + 1) + ": " + e.what());
      }
    }
    tagged.sessions.push_back(std::move(out));
  }
  return tagged;
}

std::vector<ParsedQuery> flatten(const TaggedLog& tagged) {
  std::vector<ParsedQuery> out;
  for (const auto& session : tagged.sessions)
    for (const auto& q : session.queries) out.push_back(q);
  return out;
}

}  // namespace olap
