#include "olap/profile.hpp"

#include <charconv>
#include <utility>

#include "olap/error.hpp"
#include "olap/io.hpp"
#include "olap/mdx.hpp"

namespace olap {

std::string_view clause_kind_token(ClauseKind kind) {
  switch (kind) {
    case ClauseKind::fact: return "fact";
    case ClauseKind::measure: return "measure";
    case ClauseKind::dimension: return "dimension";
    case ClauseKind::slicer_member: return "slicer-member";
  }
  return "?";
}

std::optional<ClauseKind> parse_clause_kind(std::string_view token) {
  for (ClauseKind kind : {ClauseKind::fact, ClauseKind::measure, ClauseKind::dimension,
                          ClauseKind::slicer_member})
    if (token == clause_kind_token(kind)) return kind;
  return std::nullopt;
}

AnalystProfile enrich(PreferencePools pools, std::string analyst_id,
                      std::optional<PersonalView> personal,
                      std::optional<ProfessionalView> professional) {
  if (analyst_id.empty()) throw Error("analyst id must not be empty");
  if (personal && personal->name.empty())
    throw Error("personal view requires a non-empty name");
  if (professional && professional->function.empty())
    throw Error("professional view requires a non-empty function");
  AnalystProfile profile;
  profile.analyst_id = std::move(analyst_id);
  profile.personal = std::move(personal);
  profile.professional = std::move(professional);
  profile.behavioral = std::move(pools);
  return profile;
}

AnnotatedProfile annotate(AnalystProfile profile, std::span<const ParsedQuery> corpus) {
  struct Tally {
    std::map<std::string, std::size_t> facts, measures, dimensions, slicers;
  };
  std::array<Tally, kPoolLabels.size()> tallies;

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ParsedQuery& q = corpus[i];
    Tally* tally = nullptr;
    for (PoolLabel label : kPoolLabels) {
      if (profile.behavioral.pool(label).queries.contains(q)) {
        tally = &tallies[static_cast<std::size_t>(label)];
        break;
      }
    }
    if (!tally)
      throw Error("corpus occurrence " + std::to_string(i + 1) +
                  " belongs to no behavioral pool; annotate with the same corpus the pools were mined from");
    ++tally->facts[q.cube];
    for (const auto& m : q.measures) ++tally->measures[m];
    for (const auto& [dim, attrs] : q.dim_attrs) ++tally->dimensions[dim];
    for (const auto& s : q.slicer) ++tally->slicers[s.dimension + "." + join_path(s.path)];
  }

  AnnotatedProfile ap;
  ap.profile = std::move(profile);
  for (PoolLabel label : kPoolLabels) {
    const Tally& tally = tallies[static_cast<std::size_t>(label)];
    auto& out = ap.annotations[static_cast<std::size_t>(label)];
    auto append = [&out](ClauseKind kind, const std::map<std::string, std::size_t>& counts) {
      for (const auto& [value, freq] : counts) out.push_back({kind, value, freq});
    };
    append(ClauseKind::fact, tally.facts);
    append(ClauseKind::measure, tally.measures);
    append(ClauseKind::dimension, tally.dimensions);
    append(ClauseKind::slicer_member, tally.slicers);
  }
  return ap;
}

// ---- document rendering ------------------------------------------------

namespace {

constexpr std::string_view kProfileVersion = "olap-profile/1";

void render_labeled_map(std::string& out, std::string_view kind,
                        const std::map<std::string, std::string>& entries) {
  for (const auto& [label, value] : entries) {
    if (label.empty() || label.find(':') != std::string::npos)
      throw Error("view label '" + label + "' must be non-empty and must not contain ':'");
    out += "  ";
    out += kind;
    out += ' ';
    out += label;
    out += ": ";
    out += value;
    out += '\n';
  }
}

void render_list(std::string& out, std::string_view kind, const std::vector<std::string>& values) {
  for (const auto& value : values) {
    out += "  ";
    out += kind;
    out += ' ';
    out += value;
    out += '\n';
  }
}

}  // namespace

std::string render_profile(const AnnotatedProfile& ap) {
  const AnalystProfile& p = ap.profile;
  if (p.analyst_id.empty()) throw Error("profile is missing an analyst id");

  std::string out;
  out += kProfileVersion;
  out += '\n';
  out += "analyst " + p.analyst_id + "\n";

  if (p.personal) {
    out += "personal\n";
    out += "  name " + p.personal->name + "\n";
    render_labeled_map(out, "identifier", p.personal->identifiers);
    render_labeled_map(out, "demographic", p.personal->demographics);
    render_labeled_map(out, "contact", p.personal->contacts);
  }
  if (p.professional) {
    out += "professional\n";
    out += "  function " + p.professional->function + "\n";
    render_list(out, "responsibility", p.professional->responsibilities);
    render_list(out, "role", p.professional->roles);
    render_list(out, "duty", p.professional->duties);
  }

  out += "pools\n";
  for (PoolLabel label : kPoolLabels) {
    const QueryCluster& c = p.behavioral.pool(label);
    out += "  pool ";
    out += label_token(label);
    if (!c.id.empty()) out += " " + c.id;
    out += '\n';
    out += "    frequency " + std::to_string(c.frequency) + "\n";
    for (const ParsedQuery& q : c.queries) out += "    query " + render_canonical(q) + "\n";
  }

  out += "annotations\n";
  for (PoolLabel label : kPoolLabels) {
    out += "  pool ";
    out += label_token(label);
    out += '\n';
    for (const ClauseAnnotation& a : ap.annotations_for(label)) {
      out += "    ";
      out += clause_kind_token(a.kind);
      out += ' ';
      out += a.value;
      out += ' ';
      out += std::to_string(a.frequency);
      out += '\n';
    }
  }
  out += "end\n";
  return out;
}

// ---- document parsing ----------------------------------------------------

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw Error("line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_count(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail_at(line_no, "malformed count '" + std::string(token) + "'");
  return value;
}

// "<label>: <value>" (one space after the colon is consumed if present).
std::pair<std::string, std::string> split_labeled(std::string_view rest, std::size_t line_no) {
  std::size_t colon = rest.find(':');
  if (colon == std::string_view::npos || colon == 0)
    fail_at(line_no, "expected '<label>: <value>'");
  std::string_view value = rest.substr(colon + 1);
  if (value.starts_with(' ')) value.remove_prefix(1);
  return {std::string(rest.substr(0, colon)), std::string(value)};
}

class ProfileParser {
 public:
  explicit ProfileParser(std::string_view text) : lines_(split_lines(text)) {}

  AnnotatedProfile run() {
    AnnotatedProfile ap;
    if (lines_.empty() || lines_[0] != kProfileVersion)
      fail_at(1, "expected profile header '" + std::string(kProfileVersion) + "'");
    ++i_;

    std::string_view analyst = need("'analyst <id>'");
    if (!analyst.starts_with("analyst ") || analyst.size() <= 8)
      fail_at(i_ + 1, "expected 'analyst <id>'");
    ap.profile.analyst_id = std::string(analyst.substr(8));
    ++i_;

    if (!done() && peek() == "personal") parse_personal(ap.profile);
    if (!done() && peek() == "professional") parse_professional(ap.profile);

    if (done() || peek() != "pools") fail_at(i_ + 1, "expected 'pools'");
    ++i_;
    for (PoolLabel label : kPoolLabels) parse_pool(label, ap.profile.behavioral.pool(label));

    if (done() || peek() != "annotations") fail_at(i_ + 1, "expected 'annotations'");
    ++i_;
    for (PoolLabel label : kPoolLabels)
      parse_annotations(label, ap.annotations[static_cast<std::size_t>(label)]);

    if (done() || peek() != "end") fail_at(i_ + 1, "truncated profile document (missing 'end')");
    ++i_;
    for (; i_ < lines_.size(); ++i_)
      if (!lines_[i_].empty()) fail_at(i_ + 1, "content after 'end'");
    return ap;
  }

 private:
  bool done() const { return i_ >= lines_.size(); }
  std::string_view peek() const { return lines_[i_]; }

  std::string_view need(const char* what) {
    if (done()) fail_at(lines_.size() + 1, std::string("truncated profile document (missing ") + what + ")");
    return lines_[i_];
  }

  // Body line of a top-level block: two-space indent, "<kind> <rest>".
  bool body_line(std::string_view& kind, std::string_view& rest) {
    if (done() || !peek().starts_with("  ")) return false;
    std::string_view line = peek().substr(2);
    std::size_t space = line.find(' ');
    if (space == 0 || space == std::string_view::npos)
      fail_at(i_ + 1, "expected '<kind> <value>'");
    kind = line.substr(0, space);
    rest = line.substr(space + 1);
    ++i_;
    return true;
  }

  void parse_personal(AnalystProfile& profile) {
    ++i_;
    PersonalView view;
    std::string_view kind, rest;
    while (body_line(kind, rest)) {
      std::size_t line_no = i_;  // 1-based line just consumed
      if (kind == "name") {
        if (!view.name.empty()) fail_at(line_no, "duplicate personal name");
        view.name = std::string(rest);
      } else if (kind == "identifier" || kind == "demographic" || kind == "contact") {
        auto [label, value] = split_labeled(rest, line_no);
        auto& map = kind == "identifier" ? view.identifiers
                    : kind == "demographic" ? view.demographics
                                            : view.contacts;
        if (!map.emplace(label, value).second)
          fail_at(line_no, "duplicate " + std::string(kind) + " label '" + label + "'");
      } else {
        fail_at(line_no, "unknown personal field '" + std::string(kind) + "'");
      }
    }
    if (view.name.empty()) fail_at(i_ + 1, "personal view is missing a name");
    profile.personal = std::move(view);
  }

  void parse_professional(AnalystProfile& profile) {
    ++i_;
    ProfessionalView view;
    std::string_view kind, rest;
    while (body_line(kind, rest)) {
      std::size_t line_no = i_;
      if (kind == "function") {
        if (!view.function.empty()) fail_at(line_no, "duplicate professional function");
        view.function = std::string(rest);
      } else if (kind == "responsibility") {
        view.responsibilities.emplace_back(rest);
      } else if (kind == "role") {
        view.roles.emplace_back(rest);
      } else if (kind == "duty") {
        view.duties.emplace_back(rest);
      } else {
        fail_at(line_no, "unknown professional field '" + std::string(kind) + "'");
      }
    }
    if (view.function.empty()) fail_at(i_ + 1, "professional view is missing a function");
    profile.professional = std::move(view);
  }

  void parse_pool(PoolLabel label, QueryCluster& cluster) {
    std::string expected = "  pool " + std::string(label_token(label));
    std::string_view line = need(("'" + expected + "'").c_str());
    if (line != expected && !line.starts_with(expected + " "))
      fail_at(i_ + 1, "expected '" + expected + "'");
    cluster.id = line.size() > expected.size() + 1 ? std::string(line.substr(expected.size() + 1))
                                                   : std::string();
    ++i_;

    std::string_view freq_line = need("'frequency'");
    if (!freq_line.starts_with("    frequency "))
      fail_at(i_ + 1, "expected '    frequency <count>'");
    cluster.frequency = parse_count(freq_line.substr(14), i_ + 1);
    ++i_;

    while (!done() && peek().starts_with("    query ")) {
      std::string_view text = peek().substr(10);
      try {
        cluster.queries.insert(from_syntax_unchecked(parse_mdx_syntax(text)));
      } catch (const Error& e) {
        fail_at(i_ + 1, std::string("bad pool query: ") + e.what());
      }
      ++i_;
    }
    if (cluster.frequency < cluster.queries.size())
      fail_at(i_, "pool '" + std::string(label_token(label)) +
                      "' frequency is smaller than its query count");
  }

  void parse_annotations(PoolLabel label, std::vector<ClauseAnnotation>& out) {
    std::string expected = "  pool " + std::string(label_token(label));
    std::string_view line = need(("'" + expected + "'").c_str());
    if (line != expected) fail_at(i_ + 1, "expected '" + expected + "'");
    ++i_;

    while (!done() && peek().starts_with("    ")) {
      std::string_view body = peek().substr(4);
      std::size_t line_no = i_ + 1;
      std::size_t first = body.find(' ');
      std::size_t last = body.rfind(' ');
      if (first == std::string_view::npos || last == first)
        fail_at(line_no, "expected '<kind> <value> <count>'");
      auto kind = parse_clause_kind(body.substr(0, first));
      if (!kind) fail_at(line_no, "unknown clause kind '" + std::string(body.substr(0, first)) + "'");
      std::string_view value = body.substr(first + 1, last - first - 1);
      if (value.empty()) fail_at(line_no, "empty clause value");
      std::size_t freq = parse_count(body.substr(last + 1), line_no);
      if (freq == 0) fail_at(line_no, "clause frequency must be positive");
      out.push_back({*kind, std::string(value), freq});
      ++i_;
    }
  }

  std::vector<std::string_view> lines_;
  std::size_t i_ = 0;
};

}  // namespace

AnnotatedProfile parse_profile(std::string_view text) { return ProfileParser(text).run(); }

void save_profile(const AnnotatedProfile& ap, const std::string& path) {
  write_file(path, render_profile(ap));
}

AnnotatedProfile load_profile(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_profile(text);
  } catch (const Error& e) {
    throw Error("profile '" + path + "': " + e.what());
  }
}

// ---- views sidecar -------------------------------------------------------

ViewsFile parse_views(std::string_view text) {
  ViewsFile views;
  enum class Block { none, personal, professional };
  Block block = Block::none;
  PersonalView personal;
  ProfessionalView professional;
  bool saw_personal = false, saw_professional = false;

  std::vector<std::string_view> lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    std::string_view line = lines[idx];
    std::size_t line_no = idx + 1;
    std::string_view stripped = line;
    while (stripped.starts_with(' ')) stripped.remove_prefix(1);
    if (stripped.empty() || stripped.starts_with('#')) continue;
    std::size_t indent = line.size() - stripped.size();

    if (indent == 0) {
      if (line == "personal") {
        if (saw_personal) fail_at(line_no, "duplicate personal block");
        saw_personal = true;
        block = Block::personal;
      } else if (line == "professional") {
        if (saw_professional) fail_at(line_no, "duplicate professional block");
        saw_professional = true;
        block = Block::professional;
      } else if (line.starts_with("analyst:")) {
        if (!views.analyst_id.empty()) fail_at(line_no, "duplicate analyst line");
        std::string_view id = line.substr(8);
        while (id.starts_with(' ')) id.remove_prefix(1);
        while (id.ends_with(' ')) id.remove_suffix(1);
        if (id.empty()) fail_at(line_no, "analyst line has no id");
        views.analyst_id = std::string(id);
      } else {
        fail_at(line_no, "expected 'analyst: <id>', 'personal' or 'professional'");
      }
      continue;
    }
    if (indent != 2) fail_at(line_no, "expected two-space indentation");
    if (block == Block::none) fail_at(line_no, "field outside any block");

    std::size_t colon = stripped.find(':');
    if (colon == std::string_view::npos || colon == 0)
      fail_at(line_no, "expected '<key>: <value>'");
    std::string_view key = stripped.substr(0, colon);
    while (key.ends_with(' ')) key.remove_suffix(1);
    std::string_view value = stripped.substr(colon + 1);
    while (value.starts_with(' ')) value.remove_prefix(1);
    while (value.ends_with(' ')) value.remove_suffix(1);

    std::size_t space = key.find(' ');
    std::string_view kind = space == std::string_view::npos ? key : key.substr(0, space);
    std::string_view label = space == std::string_view::npos ? std::string_view()
                                                             : key.substr(space + 1);
    while (label.starts_with(' ')) label.remove_prefix(1);

    if (block == Block::personal) {
      if (kind == "name" && label.empty()) {
        if (!personal.name.empty()) fail_at(line_no, "duplicate name");
        if (value.empty()) fail_at(line_no, "name must not be empty");
        personal.name = std::string(value);
      } else if (kind == "identifier" || kind == "demographic" || kind == "contact") {
        if (label.empty()) fail_at(line_no, std::string(kind) + " needs a label, e.g. '" +
                                                std::string(kind) + " ssn: ...'");
        auto& map = kind == "identifier" ? personal.identifiers
                    : kind == "demographic" ? personal.demographics
                                            : personal.contacts;
        if (!map.emplace(std::string(label), std::string(value)).second)
          fail_at(line_no, "duplicate " + std::string(kind) + " label '" + std::string(label) + "'");
      } else {
        fail_at(line_no, "unknown personal key '" + std::string(key) + "'");
      }
    } else {
      if (!label.empty()) fail_at(line_no, "unknown professional key '" + std::string(key) + "'");
      if (kind == "function") {
        if (!professional.function.empty()) fail_at(line_no, "duplicate function");
        if (value.empty()) fail_at(line_no, "function must not be empty");
        professional.function = std::string(value);
      } else if (kind == "responsibility") {
        professional.responsibilities.emplace_back(value);
      } else if (kind == "role") {
        professional.roles.emplace_back(value);
      } else if (kind == "duty") {
        professional.duties.emplace_back(value);
      } else {
        fail_at(line_no, "unknown professional key '" + std::string(key) + "'");
      }
    }
  }

  if (saw_personal) {
    if (personal.name.empty()) throw Error("personal block is missing a name");
    views.personal = std::move(personal);
  }
  if (saw_professional) {
    if (professional.function.empty()) throw Error("professional block is missing a function");
    views.professional = std::move(professional);
  }
  return views;
}

ViewsFile load_views(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_views(text);
  } catch (const Error& e) {
    throw Error("views '" + path + "': " + e.what());
  }
}

}  // namespace olap
