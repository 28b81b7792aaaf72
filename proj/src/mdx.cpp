#include "olap/mdx.hpp"

#include <cctype>

#include "olap/error.hpp"

namespace olap {

namespace {

enum class Tok { bracketed, word, comma, dot, lparen, rparen, semi, end };

struct Token {
  Tok kind;
  std::string text;    // name for bracketed, raw word for word
  std::size_t offset;  // 1-based character offset
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::bracketed: return "bracketed name";
    case Tok::word: return "word";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::semi: return "';'";
    case Tok::end: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t off = pos_ + 1;
    if (pos_ >= text_.size()) {
      current_ = {Tok::end, "", off};
      return;
    }
    char c = text_[pos_];
    if (c == '[') {
      std::size_t close = text_.find(']', pos_ + 1);
      if (close == std::string_view::npos)
        throw Error("offset " + std::to_string(off) + ": unterminated '['");
      if (close == pos_ + 1)
        throw Error("offset " + std::to_string(off) + ": empty bracketed name");
      current_ = {Tok::bracketed, std::string(text_.substr(pos_ + 1, close - pos_ - 1)), off};
      pos_ = close + 1;
      return;
    }
    if (c == ',') { current_ = {Tok::comma, ",", off}; ++pos_; return; }
    if (c == '.') { current_ = {Tok::dot, ".", off}; ++pos_; return; }
    if (c == '(') { current_ = {Tok::lparen, "(", off}; ++pos_; return; }
    if (c == ')') { current_ = {Tok::rparen, ")", off}; ++pos_; return; }
    if (c == ';') { current_ = {Tok::semi, ";", off}; ++pos_; return; }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_ = {Tok::word, std::string(text_.substr(start, pos_ - start)), off};
      return;
    }
    throw Error("offset " + std::to_string(off) + ": unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::end, "", 0};
};

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

bool is_keyword(const Token& t, std::string_view kw) {
  return t.kind == Tok::word && iequals(t.text, kw);
}

[[noreturn]] void expected(const Token& got, const std::string& what) {
  std::string found = got.kind == Tok::end ? std::string(describe(Tok::end))
                                           : "'" + got.text + "'";
  throw Error("offset " + std::to_string(got.offset) + ": expected " + what + ", found " + found);
}

SyntacticMember parse_member(Lexer& lex) {
  SyntacticMember m;
  Token first = lex.take();
  if (first.kind != Tok::bracketed) expected(first, "bracketed name");
  m.segments.push_back(std::move(first.text));
  while (lex.peek().kind == Tok::dot) {
    lex.take();
    Token seg = lex.take();
    if (seg.kind != Tok::bracketed) expected(seg, "bracketed name after '.'");
    m.segments.push_back(std::move(seg.text));
  }
  if (m.segments.size() < 2)
    throw Error("offset " + std::to_string(first.offset) +
                ": member reference needs at least two bracketed segments");
  return m;
}

}  // namespace

SyntacticQuery parse_mdx_syntax(std::string_view text) {
  Lexer lex(text);
  SyntacticQuery query;

  Token select = lex.take();
  if (!is_keyword(select, "SELECT")) expected(select, "SELECT");

  std::vector<SyntacticMember> current{parse_member(lex)};
  while (true) {
    if (lex.peek().kind == Tok::comma) {
      lex.take();
      current.push_back(parse_member(lex));
      continue;
    }
    if (is_keyword(lex.peek(), "ON")) {
      lex.take();
      Token kind = lex.take();
      AxisKind axis;
      if (is_keyword(kind, "COLUMNS")) axis = AxisKind::columns;
      else if (is_keyword(kind, "ROWS")) axis = AxisKind::rows;
      else expected(kind, "COLUMNS or ROWS");
      query.axes.push_back({axis, std::move(current)});
      current.clear();
      if (lex.peek().kind == Tok::comma) {
        lex.take();
        current.push_back(parse_member(lex));
        continue;
      }
      break;
    }
    expected(lex.peek(), "',' or ON");
  }

  Token from = lex.take();
  if (!is_keyword(from, "FROM")) expected(from, "FROM");
  Token cube = lex.take();
  if (cube.kind != Tok::word) expected(cube, "cube name");
  query.cube = std::move(cube.text);

  if (is_keyword(lex.peek(), "WHERE")) {
    lex.take();
    Token open = lex.take();
    if (open.kind != Tok::lparen) expected(open, "'('");
    query.where.push_back(parse_member(lex));
    while (lex.peek().kind == Tok::comma) {
      lex.take();
      query.where.push_back(parse_member(lex));
    }
    Token close = lex.take();
    if (close.kind != Tok::rparen) expected(close, "')'");
  }

  if (lex.peek().kind == Tok::semi) lex.take();
  if (lex.peek().kind != Tok::end) expected(lex.peek(), "end of query");
  return query;
}

ParsedQuery parse_mdx(std::string_view text, const SchemaDef& schema) {
  SyntacticQuery syn = parse_mdx_syntax(text);
  const CubeDef* cube = schema.find_cube(syn.cube);
  if (!cube) throw Error("unknown cube '" + syn.cube + "'");

  ParsedQuery q;
  q.cube = syn.cube;
  for (const auto& axis : syn.axes) {
    for (const auto& member : axis.members) {
      EntityKind entity = lookup_entity(schema, q.cube, member.segments);
      if (const auto* m = std::get_if<MeasureRef>(&entity)) {
        q.measures.insert(m->name);
      } else if (const auto* all = std::get_if<AllMembersRef>(&entity)) {
        const DimensionDef* d = cube->find_dimension(all->dimension);
        auto& attrs = q.dim_attrs[d->name];
        for (const auto& path : d->members) attrs.insert(path);
      } else if (const auto* mem = std::get_if<MemberRef>(&entity)) {
        q.dim_attrs[mem->dimension].insert(mem->path);
      } else {
        throw Error("unrecognized entity '" + bracket_path(member.segments) + "'");
      }
    }
  }
  for (const auto& member : syn.where) {
    EntityKind entity = lookup_entity(schema, q.cube, member.segments);
    if (const auto* mem = std::get_if<MemberRef>(&entity)) {
      q.slicer.insert(SlicerMember{mem->dimension, mem->path});
    } else if (std::holds_alternative<MeasureRef>(entity)) {
      throw Error("measure reference '" + bracket_path(member.segments) + "' not supported in WHERE");
    } else if (std::holds_alternative<AllMembersRef>(entity)) {
      throw Error("'" + bracket_path(member.segments) + "' not supported in WHERE");
    } else {
      throw Error("unrecognized entity '" + bracket_path(member.segments) + "'");
    }
  }
  return q;
}

ParsedQuery from_syntax_unchecked(const SyntacticQuery& syn) {
  ParsedQuery q;
  q.cube = syn.cube;
  for (const auto& axis : syn.axes) {
    for (const auto& member : axis.members) {
      if (member.segments[0] == "Measures") {
        // Join any extra segments rather than dropping them; canonical
        // renderings only ever produce two.
        std::string name = member.segments[1];
        for (std::size_t i = 2; i < member.segments.size(); ++i) name += "." + member.segments[i];
        q.measures.insert(std::move(name));
      } else {
        q.dim_attrs[member.segments[0]].insert(
            MemberPath(member.segments.begin() + 1, member.segments.end()));
      }
    }
  }
  for (const auto& member : syn.where) {
    q.slicer.insert(SlicerMember{member.segments[0],
                                 MemberPath(member.segments.begin() + 1, member.segments.end())});
  }
  return q;
}

}  // namespace olap
