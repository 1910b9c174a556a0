#include "gentle/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace gentle {

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string const& message)
    : std::runtime_error("line " + std::to_string(line) + ", column "
                         + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

bool name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || c == '_' || c == '.' || c == '\'' || c == '^'
         || c == '+' || c == '-' || c == '[' || c == ']' || c == '{' || c == '}'
         || (u & 0x80U) != 0;
}

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'
                                   || text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(std::string const& message) const {
    throw ParseError(line_, column(), message);
  }

  std::string name(char const* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])
           && text_.substr(pos_, 2) != "->") {
      ++pos_;
    }
    if (pos_ == start) {
      fail(std::string("expected ") + what);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  void finish() {
    if (!at_end()) {
      fail("unexpected trailing text");
    }
  }

 private:
  std::string_view text_;
  std::size_t      line_;
  std::size_t      pos_ = 0;
};

struct Located {
  std::size_t line;
  std::size_t column;
};

}  // namespace

BoundQuiver parse_quiver(std::string_view text) {
  std::string                     quiver_name;
  std::vector<std::string>        vertices;
  std::vector<Arrow>              arrows;
  std::vector<Relation>           relations;
  std::map<std::string, Located>  vertex_at;
  std::map<std::string, Located>  arrow_at;
  std::map<std::string, Arrow>    arrow_by_name;
  std::vector<Located>            relation_at;
  std::vector<Located>            endpoint_at;  // per arrow, source position
  std::vector<Located>            target_at;
  bool                            named = false;

  std::size_t line_no = 0;
  std::size_t start   = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineScanner scan(line, line_no);
    if (!scan.at_end()) {
      std::size_t const keyword_col = scan.column();
      std::string       keyword     = scan.name("a keyword");
      if (keyword == "quiver") {
        if (named) {
          throw ParseError(line_no, keyword_col, "quiver name given twice");
        }
        quiver_name = scan.name("quiver name");
        named       = true;
        scan.finish();
      } else if (keyword == "vertex") {
        scan.skip_space();
        Located     at{line_no, scan.column()};
        std::string v = scan.name("vertex name");
        scan.finish();
        if (vertex_at.contains(v)) {
          throw ParseError(at.line, at.column, "duplicate vertex '" + v + "'");
        }
        vertex_at.emplace(v, at);
        vertices.push_back(v);
      } else if (keyword == "arrow") {
        scan.skip_space();
        Located     at{line_no, scan.column()};
        std::string a = scan.name("arrow name");
        scan.expect(":");
        scan.skip_space();
        Located     src_at{line_no, scan.column()};
        std::string src = scan.name("source vertex");
        scan.expect("->");
        scan.skip_space();
        Located     tgt_at{line_no, scan.column()};
        std::string tgt = scan.name("target vertex");
        scan.finish();
        if (arrow_at.contains(a)) {
          throw ParseError(at.line, at.column, "duplicate arrow '" + a + "'");
        }
        arrow_at.emplace(a, at);
        arrow_by_name.emplace(a, Arrow{a, src, tgt});
        arrows.push_back({a, src, tgt});
        endpoint_at.push_back(src_at);
        target_at.push_back(tgt_at);
      } else if (keyword == "relation") {
        scan.skip_space();
        Located     at{line_no, scan.column()};
        std::string first  = scan.name("arrow name");
        std::string second = scan.name("arrow name");
        scan.finish();
        relations.push_back({first, second});
        relation_at.push_back(at);
      } else {
        throw ParseError(line_no, keyword_col,
                         "unknown keyword '" + keyword + "'");
      }
    }
    if (end == text.size()) {
      break;
    }
    start = end + 1;
  }

  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (!vertex_at.contains(arrows[i].source)) {
      throw ParseError(endpoint_at[i].line, endpoint_at[i].column,
                       "arrow '" + arrows[i].name + "' leaves undeclared vertex '"
                           + arrows[i].source + "'");
    }
    if (!vertex_at.contains(arrows[i].target)) {
      throw ParseError(target_at[i].line, target_at[i].column,
                       "arrow '" + arrows[i].name + "' enters undeclared vertex '"
                           + arrows[i].target + "'");
    }
  }
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    auto const& r  = relations[i];
    auto const& at = relation_at[i];
    for (auto const* n : {&r.first, &r.second}) {
      if (!arrow_by_name.contains(*n)) {
        throw ParseError(at.line, at.column,
                         "relation uses undeclared arrow '" + *n + "'");
      }
    }
    auto const& a = arrow_by_name.at(r.first);
    auto const& b = arrow_by_name.at(r.second);
    if (a.target != b.source) {
      throw ParseError(at.line, at.column,
                       "relation " + r.first + " " + r.second
                           + " is not composable: '" + r.first + "' ends at '"
                           + a.target + "' but '" + r.second + "' starts at '"
                           + b.source + "'");
    }
    if (!seen.emplace(std::pair{r.first, r.second}, i).second) {
      throw ParseError(at.line, at.column,
                       "duplicate relation " + r.first + " " + r.second);
    }
  }
  return BoundQuiver(std::move(vertices), std::move(arrows),
                     std::move(relations), std::move(quiver_name));
}

BoundQuiver read_quiver_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_quiver(buffer.str());
}

std::string serialize(BoundQuiver const& q) {
  std::string out;
  if (!q.name().empty()) {
    out += "quiver " + q.name() + "\n";
  }
  for (auto const& v : q.vertex_names()) {
    out += "vertex " + v + "\n";
  }
  for (auto const& a : q.arrow_list()) {
    out += "arrow " + a.name + ": " + a.source + " -> " + a.target + "\n";
  }
  for (auto const& r : q.relation_list()) {
    out += "relation " + r.first + " " + r.second + "\n";
  }
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(BoundQuiver const& q) {
  return fnv1a_hex(serialize(q.renamed({})));
}

}  // namespace gentle
