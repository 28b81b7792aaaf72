#include "olap/xml.hpp"

#include <cctype>

#include "olap/error.hpp"
#include "olap/mdx.hpp"

namespace olap {

namespace {

constexpr std::string_view kDecl = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void escape_into(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
}

// ---- writer ----------------------------------------------------------

class XmlWriter {
 public:
  std::string take() { return std::move(out_); }

  void decl() { out_ += kDecl; }

  void open(std::string_view name, std::string_view attr = {}, std::string_view value = {}) {
    indent();
    out_ += '<';
    out_ += name;
    if (!attr.empty()) {
      out_ += ' ';
      out_ += attr;
      out_ += "=\"";
      escape_into(out_, value);
      out_ += '"';
    }
    out_ += ">\n";
    ++depth_;
  }

  void close(std::string_view name) {
    --depth_;
    indent();
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

  void leaf(std::string_view name, std::size_t id, std::string_view text) {
    indent();
    out_ += '<';
    out_ += name;
    out_ += " id=\"";
    out_ += std::to_string(id);
    out_ += "\">";
    escape_into(out_, text);
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

  // <Dimension id="2">Name ... (children follow on their own lines)
  void open_with_text(std::string_view name, std::size_t id, std::string_view text) {
    indent();
    out_ += '<';
    out_ += name;
    out_ += " id=\"";
    out_ += std::to_string(id);
    out_ += "\">";
    escape_into(out_, text);
    out_ += '\n';
    ++depth_;
  }

  void open_id(std::string_view name, std::size_t id) {
    indent();
    out_ += '<';
    out_ += name;
    out_ += " id=\"";
    out_ += std::to_string(id);
    out_ += "\">\n";
    ++depth_;
  }

 private:
  void indent() { out_.append(depth_ * 2, ' '); }

  std::string out_;
  std::size_t depth_ = 0;
};

// ---- reader ----------------------------------------------------------

struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::string text;  // concatenated character data, trimmed
  std::vector<XmlNode> children;

  const std::string* attr(std::string_view key) const {
    for (const auto& [k, v] : attrs)
      if (k == key) return &v;
    return nullptr;
  }
};

class XmlReader {
 public:
  explicit XmlReader(std::string_view text) : text_(text) {}

  XmlNode parse_document() {
    skip_ws();
    if (text_.substr(pos_, 5) == "<?xml") {
      std::size_t end = text_.find("?>", pos_);
      if (end == std::string_view::npos) fail("unterminated XML declaration");
      pos_ = end + 2;
    }
    skip_ws();
    XmlNode root = parse_element();
    skip_ws();
    if (pos_ != text_.size()) fail("content after document root");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error("xml offset " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string unescape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size();) {
      if (raw[i] != '&') {
        out += raw[i++];
        continue;
      }
      std::size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity");
      std::string_view entity = raw.substr(i + 1, semi - i - 1);
      if (entity == "amp") out += '&';
      else if (entity == "lt") out += '<';
      else if (entity == "gt") out += '>';
      else if (entity == "quot") out += '"';
      else if (entity == "apos") out += '\'';
      else fail("unknown entity '&" + std::string(entity) + ";'");
      i = semi + 1;
    }
    return out;
  }

  XmlNode parse_element() {
    if (pos_ >= text_.size() || text_[pos_] != '<') fail("expected element");
    ++pos_;
    XmlNode node;
    node.name = read_name();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated start tag");
      if (text_[pos_] == '>') {
        ++pos_;
        break;
      }
      std::string key = read_name();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '=') fail("expected '=' in attribute");
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected '\"'");
      std::size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated attribute value");
      node.attrs.emplace_back(std::move(key), unescape(text_.substr(pos_ + 1, close - pos_ - 1)));
      pos_ = close + 1;
    }
    std::string raw_text;
    while (true) {
      std::size_t lt = text_.find('<', pos_);
      if (lt == std::string_view::npos) fail("unterminated element '" + node.name + "'");
      raw_text.append(text_.substr(pos_, lt - pos_));
      pos_ = lt;
      if (text_.substr(pos_, 2) == "</") {
        pos_ += 2;
        std::string closing = read_name();
        if (closing != node.name)
          fail("mismatched close tag '" + closing + "' for '" + node.name + "'");
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '>') fail("expected '>'");
        ++pos_;
        break;
      }
      node.children.push_back(parse_element());
    }
    node.text = unescape(trim(raw_text));
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---- shared helpers --------------------------------------------------

std::size_t require_id(const XmlNode& node, std::size_t expected) {
  const std::string* id = node.attr("id");
  if (!id) throw Error("<" + node.name + "> missing id attribute");
  if (*id != std::to_string(expected))
    throw Error("<" + node.name + "> id \"" + *id + "\" out of sequence (expected " +
                std::to_string(expected) + ")");
  return expected;
}

std::string axis_member_text(const SyntacticMember& m) {
  std::string out;
  for (std::size_t i = 1; i < m.segments.size(); ++i) {
    if (i > 1) out += '.';
    out += m.segments[i];
  }
  return out;
}

const char* segment_name(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::columns: return "Columns";
    case SegmentKind::rows: return "Rows";
    case SegmentKind::cube: return "Cube";
    case SegmentKind::condition: return "Condition";
  }
  return "?";
}

}  // namespace

// ---- segmented -------------------------------------------------------

SegmentedDoc segment_queries(const RawLog& raw) {
  SegmentedDoc doc;
  for (const auto& session : raw.sessions) {
    SegmentedSession out{session.id, {}};
    for (std::size_t i = 0; i < session.queries.size(); ++i) {
      SyntacticQuery syn;
      try {
        syn = parse_mdx_syntax(session.queries[i]);
      } catch (const Error& e) {
        throw Error("session '" + session.id + "' query " + std::to_string(i + 1) + ": " + e.what());
      }
      SegmentedQuery q;
      for (AxisKind kind : {AxisKind::columns, AxisKind::rows}) {
        SegmentKind seg = kind == AxisKind::columns ? SegmentKind::columns : SegmentKind::rows;
        for (const auto& axis : syn.axes)
          if (axis.kind == kind)
            for (const auto& member : axis.members)
              q.items.push_back({seg, axis_member_text(member)});
      }
      q.items.push_back({SegmentKind::cube, syn.cube});
      for (const auto& member : syn.where)
        q.items.push_back({SegmentKind::condition, bracket_path(member.segments)});
      out.queries.push_back(std::move(q));
    }
    doc.sessions.push_back(std::move(out));
  }
  return doc;
}

std::string render_segmented_xml(const SegmentedDoc& doc) {
  XmlWriter w;
  w.decl();
  w.open("OlapLog");
  for (const auto& session : doc.sessions) {
    w.open("Log", "session", session.id);
    std::size_t query_id = 0;
    for (const auto& query : session.queries) {
      w.open_id("Query", ++query_id);
      std::size_t counters[4] = {0, 0, 0, 0};
      for (const auto& item : query.items)
        w.leaf(segment_name(item.kind), ++counters[static_cast<int>(item.kind)], item.text);
      w.close("Query");
    }
    w.close("Log");
  }
  w.close("OlapLog");
  return w.take();
}

std::string emit_segmented_xml(const RawLog& raw) {
  return render_segmented_xml(segment_queries(raw));
}

SegmentedDoc parse_segmented_xml(std::string_view xml) {
  XmlNode root = XmlReader(xml).parse_document();
  if (root.name != "OlapLog") throw Error("expected <OlapLog> document root, found <" + root.name + ">");
  SegmentedDoc doc;
  for (const auto& log : root.children) {
    if (log.name != "Log") throw Error("expected <Log>, found <" + log.name + ">");
    const std::string* session = log.attr("session");
    if (!session) throw Error("<Log> missing session attribute");
    SegmentedSession out{*session, {}};
    std::size_t query_id = 0;
    for (const auto& query : log.children) {
      if (query.name != "Query") throw Error("expected <Query>, found <" + query.name + ">");
      require_id(query, ++query_id);
      SegmentedQuery q;
      std::size_t counters[4] = {0, 0, 0, 0};
      for (const auto& item : query.children) {
        SegmentKind kind;
        if (item.name == "Columns") kind = SegmentKind::columns;
        else if (item.name == "Rows") kind = SegmentKind::rows;
        else if (item.name == "Cube") kind = SegmentKind::cube;
        else if (item.name == "Condition") kind = SegmentKind::condition;
        else throw Error("unexpected <" + item.name + "> in <Query>");
        require_id(item, ++counters[static_cast<int>(kind)]);
        if (!item.children.empty()) throw Error("<" + item.name + "> must not have children");
        q.items.push_back({kind, item.text});
      }
      out.queries.push_back(std::move(q));
    }
    doc.sessions.push_back(std::move(out));
  }
  return doc;
}

// ---- tagged ----------------------------------------------------------

std::string emit_tagged_xml(const TaggedLog& tagged) {
  XmlWriter w;
  w.decl();
  w.open("TaggedLog");
  for (const auto& session : tagged.sessions) {
    w.open("Log", "session", session.id);
    std::size_t query_id = 0;
    for (const auto& q : session.queries) {
      w.open_id("Query", ++query_id);
      std::size_t measure_id = 0, dimension_id = 0, condition_id = 0;
      for (const auto& m : q.measures) w.leaf("Measure", ++measure_id, m);
      for (const auto& [dim, paths] : q.dim_attrs) {
        w.open_with_text("Dimension", ++dimension_id, dim);
        std::size_t member_id = 0;
        for (const auto& path : paths) w.leaf("Member", ++member_id, join_path(path));
        w.close("Dimension");
      }
      w.leaf("Cube", 1, q.cube);
      for (const auto& s : q.slicer) {
        std::vector<std::string> segments{s.dimension};
        segments.insert(segments.end(), s.path.begin(), s.path.end());
        w.leaf("Condition", ++condition_id, bracket_path(segments));
      }
      for (const auto& s : q.slicer) {
        w.open_with_text("Dimension", ++dimension_id, s.dimension);
        std::size_t member_id = 0;
        for (const auto& level : s.path) w.leaf("Member", ++member_id, level);
        w.close("Dimension");
      }
      w.close("Query");
    }
    w.close("Log");
  }
  w.close("TaggedLog");
  return w.take();
}

TaggedLog parse_tagged_xml(std::string_view xml) {
  XmlNode root = XmlReader(xml).parse_document();
  if (root.name != "TaggedLog") throw Error("expected <TaggedLog> document root, found <" + root.name + ">");
  TaggedLog tagged;
  for (const auto& log : root.children) {
    if (log.name != "Log") throw Error("expected <Log>, found <" + log.name + ">");
    const std::string* session = log.attr("session");
    if (!session) throw Error("<Log> missing session attribute");
    TaggedSession out{*session, {}};
    std::size_t query_id = 0;
    for (const auto& query : log.children) {
      if (query.name != "Query") throw Error("expected <Query>, found <" + query.name + ">");
      require_id(query, ++query_id);

      ParsedQuery q;
      std::size_t measure_id = 0, dimension_id = 0, condition_id = 0;
      std::vector<SlicerMember> conditions;
      std::size_t slicer_blocks = 0;
      enum { measures, axis_dims, conditions_section, slicer_dims } phase = measures;

      for (const auto& node : query.children) {
        if (node.name == "Measure") {
          if (phase != measures) throw Error("<Measure> out of order");
          require_id(node, ++measure_id);
          q.measures.insert(node.text);
        } else if (node.name == "Cube") {
          if (phase > axis_dims) throw Error("<Cube> out of order");
          require_id(node, 1);
          if (!q.cube.empty()) throw Error("duplicate <Cube>");
          if (node.text.empty()) throw Error("<Cube> missing name");
          q.cube = node.text;
          phase = conditions_section;
        } else if (node.name == "Condition") {
          if (phase != conditions_section) throw Error("<Condition> out of order");
          require_id(node, ++condition_id);
          auto segments = unbracket_path(node.text);
          if (!segments || segments->size() < 2)
            throw Error("malformed <Condition> '" + node.text + "'");
          conditions.push_back(SlicerMember{
              (*segments)[0], MemberPath(segments->begin() + 1, segments->end())});
        } else if (node.name == "Dimension") {
          require_id(node, ++dimension_id);
          if (node.text.empty()) throw Error("<Dimension> missing name");
          if (phase <= axis_dims) {
            phase = axis_dims;
            auto& attrs = q.dim_attrs[node.text];
            std::size_t member_id = 0;
            for (const auto& member : node.children) {
              if (member.name != "Member") throw Error("expected <Member> in <Dimension>");
              require_id(member, ++member_id);
              MemberPath path;
              std::size_t start = 0;
              const std::string& text = member.text;
              while (true) {
                std::size_t dot = text.find('.', start);
                path.push_back(dot == std::string::npos ? text.substr(start)
                                                        : text.substr(start, dot - start));
                if (dot == std::string::npos) break;
                start = dot + 1;
              }
              attrs.insert(std::move(path));
            }
            if (attrs.empty()) throw Error("<Dimension> '" + node.text + "' has no members");
          } else {
            phase = slicer_dims;
            if (slicer_blocks >= conditions.size())
              throw Error("slicer <Dimension> without matching <Condition>");
            const SlicerMember& cond = conditions[slicer_blocks];
            if (node.text != cond.dimension)
              throw Error("slicer <Dimension> '" + node.text + "' does not match condition dimension '" +
                          cond.dimension + "'");
            if (node.children.size() != cond.path.size())
              throw Error("slicer <Dimension> '" + node.text + "' level count does not match condition");
            std::size_t member_id = 0;
            for (std::size_t i = 0; i < node.children.size(); ++i) {
              const auto& member = node.children[i];
              if (member.name != "Member") throw Error("expected <Member> in <Dimension>");
              require_id(member, ++member_id);
              if (member.text != cond.path[i])
                throw Error("slicer <Member> '" + member.text + "' does not match condition level '" +
                            cond.path[i] + "'");
            }
            ++slicer_blocks;
          }
        } else {
          throw Error("unexpected <" + node.name + "> in <Query>");
        }
      }
      if (q.cube.empty()) throw Error("query " + std::to_string(query_id) + " missing <Cube>");
      if (slicer_blocks != conditions.size())
        throw Error("query " + std::to_string(query_id) + " missing slicer <Dimension> tagging");
      for (auto& c : conditions) q.slicer.insert(std::move(c));
      out.queries.push_back(std::move(q));
    }
    tagged.sessions.push_back(std::move(out));
  }
  return tagged;
}

}  // namespace olap
