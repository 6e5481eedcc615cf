#include "gradus/ringfile.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "gradus/lexer.hpp"

namespace gradus {

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

struct Line {
  size_t number = 0;
  std::string keyword;
  std::string rest;  // text after the keyword
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  size_t lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string line(text.substr(start, end == std::string_view::npos
                                            ? std::string_view::npos
                                            : end - start));
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line.erase(0, first);
    size_t space = line.find_first_of(" \t");
    Line l;
    l.number = lineno;
    l.keyword = line.substr(0, space);
    if (space != std::string::npos) {
      size_t rest = line.find_first_not_of(" \t", space);
      if (rest != std::string::npos) l.rest = line.substr(rest);
    }
    out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(size_t lineno, const std::string& msg) {
  throw Error("ring-spec line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

RingFile parse_ring_file(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  size_t i = 0;

  if (i >= lines.size() || lines[i].keyword != "ring")
    fail(lines.empty() ? 1 : lines[0].number, "expected 'ring NAME' first");
  std::string name = lines[i].rest;
  if (name.empty() || name.find_first_of(" \t") != std::string::npos)
    fail(lines[i].number, "malformed ring name");
  ++i;

  RingSpec spec;
  for (; i < lines.size() && lines[i].keyword == "var"; ++i) {
    TokenStream ts(lines[i].rest);
    try {
      Token vname = ts.expect(Tok::Ident, "a variable name");
      ts.expect(Tok::Colon, "':'");
      Token weight = ts.expect(Tok::Int, "a weight");
      Parity parity = Parity::Even;
      Token tag;
      if (ts.accept(Tok::Ident, &tag)) {
        if (tag.text != "odd") fail(lines[i].number, "expected 'odd' or end of line");
        parity = Parity::Odd;
      }
      if (!ts.at_end()) fail(lines[i].number, "trailing input after variable declaration");
      spec.vars.push_back({vname.text, std::stoi(weight.text), parity});
    } catch (const ParseError& e) {
      fail(lines[i].number, e.what());
    }
  }

  Ring ring = [&] {
    try {
      return Ring(std::move(spec));
    } catch (const RingError& e) {
      fail(lines.empty() ? 1 : lines[0].number, e.what());
    }
  }();

  Scope lets;
  for (; i < lines.size() && lines[i].keyword == "let"; ++i) {
    size_t eq = lines[i].rest.find('=');
    if (eq == std::string::npos) fail(lines[i].number, "expected 'let NAME = EXPR'");
    std::string lname = lines[i].rest.substr(0, eq);
    while (!lname.empty() && (lname.back() == ' ' || lname.back() == '\t')) lname.pop_back();
    if (lname.empty()) fail(lines[i].number, "missing let name");
    if (ring.index_of(lname) || lets.count(lname))
      fail(lines[i].number, "name '" + lname + "' is already defined");
    try {
      Polynomial value = parse_poly(ring, lines[i].rest.substr(eq + 1), &lets);
      lets.emplace(lname, std::move(value));
    } catch (const ParseError& e) {
      fail(lines[i].number, e.what());
    }
  }

  std::vector<Polynomial> gens;
  if (i < lines.size() && lines[i].keyword == "ideal") {
    if (!lines[i].rest.empty()) fail(lines[i].number, "trailing input after 'ideal'");
    ++i;
    for (; i < lines.size() && lines[i].keyword == "gen"; ++i) {
      try {
        gens.push_back(parse_poly(ring, lines[i].rest, &lets));
      } catch (const ParseError& e) {
        fail(lines[i].number, e.what());
      }
    }
  }
  if (i < lines.size())
    fail(lines[i].number, "unexpected directive '" + lines[i].keyword + "'");

  return RingFile{std::move(name), ring, std::move(lets), Ideal(ring, std::move(gens))};
}

RingFile load_ring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open ring-spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_file(buf.str());
}

}  // namespace gradus
