#include "blockspace/textio.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace blockspace {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::uint64_t parse_number(std::string_view s, std::size_t line, Errc code) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(code, "expected a number, got '" + std::string(s) + "'", line);
  return value;
}

Vec parse_vector_line(std::string_view line, const Field& field, std::size_t lineno) {
  std::vector<Vec::Entry> entries;
  std::size_t pos = 0;
  long last_index = -1;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) break;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    std::string_view pair = line.substr(pos, end - pos);
    std::size_t colon = pair.find(':');
    if (colon == std::string_view::npos)
      throw Error(Errc::BadPair, "expected index:coeff, got '" + std::string(pair) + "'",
                  lineno);
    std::uint64_t index = parse_number(pair.substr(0, colon), lineno, Errc::BadPair);
    std::uint64_t coeff = parse_number(pair.substr(colon + 1), lineno, Errc::BadPair);
    if (static_cast<long>(index) <= last_index)
      throw Error(Errc::BadPair, "indices must strictly ascend", lineno);
    last_index = static_cast<long>(index);
    if (coeff == 0 || coeff >= field.q())
      throw Error(Errc::CoefficientOutOfRange,
                  "coefficient " + std::to_string(coeff) + " outside [1, " +
                      std::to_string(field.q()) + ")",
                  lineno);
    entries.emplace_back(static_cast<std::uint32_t>(index),
                         static_cast<std::uint8_t>(coeff));
    pos = end;
  }
  return Vec::make(std::move(entries), field);
}

struct RawFile {
  Field field{2};
  std::vector<std::vector<std::pair<Vec, std::size_t>>> groups;  // vec, line
};

RawFile parse_raw(std::string_view text) {
  RawFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::vector<std::pair<Vec, std::size_t>> current;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim(line);
    if (std::size_t hash = body.find('#'); hash != std::string_view::npos)
      body = trim(body.substr(0, hash));
    if (body.empty()) {
      if (!current.empty()) {
        out.groups.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    if (!have_header) {
      if (body.substr(0, 6) != "field ")
        throw Error(Errc::BadHeader, "expected 'field <q>' header", lineno);
      std::uint64_t q = parse_number(trim(body.substr(6)), lineno, Errc::BadHeader);
      if (q != 2 && q != 3 && q != 5 && q != 7)
        throw Error(Errc::BadHeader, "field must be a prime in {2,3,5,7}", lineno);
      out.field = Field(static_cast<unsigned>(q));
      have_header = true;
      continue;
    }
    current.emplace_back(parse_vector_line(body, out.field, lineno), lineno);
  }
  if (!have_header) throw Error(Errc::BadHeader, "missing 'field <q>' header", 1);
  if (!current.empty()) out.groups.push_back(std::move(current));
  return out;
}

}  // namespace

VectorFileContent parse_vector_file(std::string_view text) {
  RawFile raw = parse_raw(text);
  VectorFileContent out;
  out.field = raw.field;
  for (const auto& group : raw.groups) {
    std::vector<Vec> vs;
    for (const auto& [v, lineno] : group) {
      if (v.is_zero())
        throw Error(Errc::ZeroVector, "zero vector in a block sequence", lineno);
      if (!vs.empty() && !block_lt(vs.back(), v))
        throw Error(Errc::NotBlockOrdered,
                    "vector does not lie above its predecessor", lineno);
      vs.push_back(v);
    }
    out.sequences.push_back(BlockSeq::validate(std::move(vs), raw.field));
  }
  return out;
}

VectorListContent parse_vector_lines(std::string_view text) {
  RawFile raw = parse_raw(text);
  VectorListContent out;
  out.field = raw.field;
  for (const auto& group : raw.groups) {
    std::vector<Vec> vs;
    for (const auto& [v, lineno] : group) vs.push_back(v);
    out.groups.push_back(std::move(vs));
  }
  return out;
}

std::string print_vector(const Vec& v) {
  std::string out;
  for (const auto& [index, coeff] : v.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(index) + ':' + std::to_string(coeff);
  }
  return out;
}

std::string print_vector_file(const VectorFileContent& content) {
  std::string out = "field " + std::to_string(content.field.q()) + "\n";
  for (std::size_t i = 0; i < content.sequences.size(); ++i) {
    if (i) out += "\n";
    for (const Vec& v : content.sequences[i]) out += print_vector(v) + "\n";
  }
  return out;
}

// ------------------------------------------------------- stream expressions

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;
  Field field{2};

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw Error(Errc::BadExpr,
                  "expected '" + std::string(1, c) + "' at offset " +
                      std::to_string(pos) + " in '" + std::string(text) + "'");
  }
  std::string_view ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '-' || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) throw Error(Errc::BadExpr, "expected a number in stream expression");
    return parse_number(text.substr(start, pos - start), 0, Errc::BadExpr);
  }

  Vec vector_literal() {
    // i:c(+i:c)*
    std::vector<Vec::Entry> entries;
    for (;;) {
      std::uint64_t index = number();
      expect(':');
      std::uint64_t coeff = number();
      entries.emplace_back(static_cast<std::uint32_t>(index),
                           static_cast<std::uint8_t>(coeff));
      if (!eat('+')) break;
    }
    return Vec::make(std::move(entries), field);
  }

  BlockSeq seq_literal() {
    std::vector<Vec> vs{vector_literal()};
    while (eat('|')) vs.push_back(vector_literal());
    return BlockSeq::validate(std::move(vs), field);
  }

  IndexSet index_set() {
    std::string_view name = ident();
    if (name == "all") return IndexSet::all();
    if (name == "evens") return IndexSet::evens();
    if (name == "odds") return IndexSet::odds();
    if (name == "ap") {
      expect('(');
      std::uint64_t offset = number();
      expect(',');
      std::uint64_t stride = number();
      expect(')');
      return IndexSet::ap(offset, stride);
    }
    if (name == "val") {
      expect('(');
      std::uint64_t v = number();
      expect(')');
      return IndexSet::valuation_class(2, static_cast<unsigned>(v));
    }
    if (name == "union") {
      expect('(');
      std::vector<IndexSet> parts{index_set()};
      while (eat(',')) parts.push_back(index_set());
      expect(')');
      return IndexSet::union_of(parts);
    }
    throw Error(Errc::BadExpr, "unknown index set '" + std::string(name) + "'");
  }

  IntervalSeq intervals_spec() {
    std::string_view name = ident();
    if (name == "singletons") return IntervalSeq::singletons();
    if (name == "blocks") {
      expect('(');
      std::uint64_t len = number();
      expect(')');
      return IntervalSeq::affine(0, len, 0);
    }
    if (name == "aff") {
      expect('(');
      std::uint64_t start = number();
      expect(',');
      std::uint64_t len = number();
      expect(',');
      std::uint64_t gap = number();
      expect(')');
      return IntervalSeq::affine(start, len, gap);
    }
    throw Error(Errc::BadExpr, "unknown interval spec '" + std::string(name) + "'");
  }

  BlockStream expr() {
    std::string_view name = ident();
    if (name == "basis") {
      expect('(');
      IndexSet s = index_set();
      expect(')');
      return BlockStream::basis(std::move(s), field);
    }
    if (name == "pattern") {
      expect('(');
      BlockSeq shape = seq_literal();
      expect(';');
      if (ident() != "shift") throw Error(Errc::BadExpr, "expected shift=<n>");
      expect('=');
      std::uint64_t shift = number();
      expect(')');
      return BlockStream::pattern(std::move(shape), static_cast<std::uint32_t>(shift));
    }
    if (name == "tail") {
      expect('(');
      BlockStream inner = expr();
      expect(',');
      std::uint64_t n = number();
      expect(')');
      return BlockStream::tail_of(std::move(inner), n);
    }
    if (name == "concat") {
      expect('(');
      BlockSeq head = seq_literal();
      expect(',');
      BlockStream rest = expr();
      expect(')');
      return BlockStream::concat(std::move(head), std::move(rest));
    }
    if (name == "interleave") {
      expect('(');
      std::vector<BlockStream> sources{expr()};
      while (eat(',')) sources.push_back(expr());
      expect(';');
      if (ident() != "rr") throw Error(Errc::BadExpr, "only the rr schedule is supported");
      expect(')');
      auto schedule = InterleaveSchedule::round_robin(sources.size());
      return BlockStream::interleave(std::move(sources), std::move(schedule));
    }
    if (name == "sparse") {
      expect('(');
      BlockStream inner = expr();
      expect(';');
      if (ident() != "intervals") throw Error(Errc::BadExpr, "expected intervals=<spec>");
      expect('=');
      IntervalSeq seq = intervals_spec();
      expect(')');
      return BlockStream::sparse(std::move(inner), std::move(seq));
    }
    throw Error(Errc::BadExpr, "unknown stream constructor '" + std::string(name) + "'");
  }
};

}  // namespace

BlockStream parse_stream_expr(std::string_view text, Field field) {
  ExprParser parser{text, 0, field};
  BlockStream out = parser.expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw Error(Errc::BadExpr, "trailing input in stream expression");
  return out;
}

IndexSet parse_index_set(std::string_view text) {
  ExprParser parser{text, 0, Field(2)};
  IndexSet out = parser.index_set();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw Error(Errc::BadExpr, "trailing input in index set");
  return out;
}

Coloring parse_coloring_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  unsigned window = 0;
  bool have_field = false;
  std::string builtin_name;
  std::string bitstring;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim(line);
    if (std::size_t hash = body.find('#'); hash != std::string_view::npos)
      body = trim(body.substr(0, hash));
    if (body.empty()) continue;
    if (body.substr(0, 6) == "field ") {
      if (parse_number(trim(body.substr(6)), lineno, Errc::BadHeader) != 2)
        throw Error(Errc::BadHeader, "colorings require field 2", lineno);
      have_field = true;
    } else if (body.substr(0, 7) == "window ") {
      window = static_cast<unsigned>(
          parse_number(trim(body.substr(7)), lineno, Errc::BadHeader));
    } else if (body.substr(0, 7) == "colors ") {
      bitstring = std::string(trim(body.substr(7)));
    } else if (body.substr(0, 8) == "builtin ") {
      builtin_name = std::string(trim(body.substr(8)));
    } else {
      throw Error(Errc::BadHeader, "unrecognized coloring line", lineno);
    }
  }
  if (!have_field) throw Error(Errc::BadHeader, "missing 'field 2' line", 1);
  if (window == 0) throw Error(Errc::BadHeader, "missing 'window <N>' line", 1);
  if (!builtin_name.empty()) return Coloring::builtin(builtin_name, window);
  std::vector<std::uint8_t> bits;
  bits.reserve(bitstring.size());
  for (char c : bitstring) {
    if (c != '0' && c != '1')
      throw Error(Errc::OutOfRange, "colors must be a 0/1 string", 1);
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Coloring(window, std::move(bits));
}

}  // namespace blockspace
