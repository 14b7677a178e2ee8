#include "irack/text_format.hpp"

#include <fstream>
#include <sstream>

#include "irack/errors.hpp"

namespace irack {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    ++number;
    const auto t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, std::string(t)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

class Cursor {
 public:
  Cursor(std::string_view text, std::string source)
      : lines_(content_lines(text)), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& message) const {
    const std::size_t line = pos_ < lines_.size() ? lines_[pos_].number
                             : lines_.empty()     ? 0
                                                  : lines_.back().number;
    throw ParseError(source_, line, message);
  }

  std::size_t line() const { return pos_ < lines_.size() ? lines_[pos_].number : 0; }
  const std::string& source() const { return source_; }

  /// Consumes "key: rest" and returns rest.
  std::string keyed(std::string_view key) {
    if (pos_ >= lines_.size()) fail("expected '" + std::string(key) + ":' but input ended");
    std::string_view t = lines_[pos_].text;
    const auto colon = t.find(':');
    if (colon == std::string_view::npos || trim(t.substr(0, colon)) != key)
      fail("expected '" + std::string(key) + ":'");
    ++pos_;
    return std::string(trim(t.substr(colon + 1)));
  }

  std::string next(const std::string& what) {
    if (pos_ >= lines_.size()) fail("expected " + what + " but input ended");
    return lines_[pos_++].text;
  }

  bool done() const { return pos_ >= lines_.size(); }
  void back() { --pos_; }

 private:
  std::vector<Line> lines_;
  std::string source_;
  std::size_t pos_ = 0;
};

std::vector<Element> resolve(Cursor& cur, const Carrier& carrier, const std::vector<std::string>& labels,
                             std::size_t expected, const std::string& what) {
  if (labels.size() != expected) {
    cur.back();
    cur.fail(what + " has " + std::to_string(labels.size()) + " entries, expected " +
             std::to_string(expected));
  }
  std::vector<Element> out;
  for (const auto& l : labels) {
    auto e = carrier.find(l);
    if (!e) {
      cur.back();
      cur.fail("unknown element '" + l + "' in " + what);
    }
    out.push_back(*e);
  }
  return out;
}

Carrier read_carrier(Cursor& cur) {
  auto labels = words(cur.keyed("elements"));
  try {
    return Carrier(std::move(labels));
  } catch (const MalformedTable& e) {
    cur.back();
    cur.fail(e.what());
  }
}

Grid read_grid(Cursor& cur, const Carrier& carrier, std::string_view key) {
  if (!cur.keyed(key).empty()) {
    cur.back();
    cur.fail("'" + std::string(key) + ":' must be followed by rows on their own lines");
  }
  Grid grid;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    auto row = words(cur.next(std::string(key) + " row " + std::to_string(i + 1)));
    grid.push_back(resolve(cur, carrier, row, carrier.size(), std::string(key) + " row " + std::to_string(i + 1)));
  }
  if (!cur.done()) cur.fail("unexpected trailing content");
  return grid;
}

std::string join(const Carrier& carrier, const std::vector<Element>& xs) {
  std::string out;
  for (Element x : xs) {
    if (!out.empty()) out += ' ';
    out += carrier.label(x);
  }
  return out;
}

}  // namespace

RawIrack parse_irack(std::string_view text, const std::string& source) {
  Cursor cur(text, source);
  RawIrack raw;
  raw.carrier = read_carrier(cur);
  const std::size_t k = raw.carrier.size();
  raw.plus = resolve(cur, raw.carrier, words(cur.keyed("plus")), k, "plus");
  raw.minus = resolve(cur, raw.carrier, words(cur.keyed("minus")), k, "minus");
  raw.rhd = read_grid(cur, raw.carrier, "rhd");
  return raw;
}

GroupTable parse_group(std::string_view text, const std::string& source) {
  Cursor cur(text, source);
  GroupTable g;
  g.carrier = read_carrier(cur);
  g.mult = read_grid(cur, g.carrier, "mult");
  return g;
}

Relation parse_relation(std::string_view text, const Carrier& carrier, const std::string& source) {
  Cursor cur(text, source);
  const std::string header = cur.keyed("arity");
  const auto arrow = header.find("->");
  std::size_t m = 0;
  std::size_t n = 0;
  try {
    if (arrow == std::string::npos) throw std::invalid_argument("arrow");
    std::size_t used = 0;
    const std::string lhs(trim(std::string_view(header).substr(0, arrow)));
    const std::string rhs(trim(std::string_view(header).substr(arrow + 2)));
    m = std::stoul(lhs, &used);
    if (used != lhs.size()) throw std::invalid_argument("m");
    n = std::stoul(rhs, &used);
    if (used != rhs.size()) throw std::invalid_argument("n");
  } catch (const std::logic_error&) {
    cur.back();
    cur.fail("expected 'arity: m -> n'");
  }

  std::vector<Pair> pairs;
  while (!cur.done()) {
    const std::size_t line = cur.line();
    const std::string text_line = cur.next("pair");
    const auto bar = text_line.find('|');
    if (bar == std::string::npos) throw ParseError(source, line, "expected 'LHS | RHS'");
    Tuple a = parse_tuple(carrier, std::string_view(text_line).substr(0, bar), source, line);
    Tuple b = parse_tuple(carrier, std::string_view(text_line).substr(bar + 1), source, line);
    if (a.arity() != m || b.arity() != n) {
      throw ParseError(source, line,
                       "pair arities " + std::to_string(a.arity()) + " -> " + std::to_string(b.arity()) +
                           " do not match the header");
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }
  try {
    return Relation(m, n, std::move(pairs));
  } catch (const CapExceeded& e) {
    throw ParseError(source, 0, e.what());
  }
}

std::string format_irack(const RawIrack& raw) {
  check_well_formed(raw);
  std::ostringstream os;
  std::vector<Element> all(raw.carrier.size());
  for (Element i = 0; i < all.size(); ++i) all[i] = i;
  auto line = [&](const char* key, const std::vector<Element>& xs) {
    os << key << ':';
    if (!xs.empty()) os << ' ' << join(raw.carrier, xs);
    os << '\n';
  };
  line("elements", all);
  line("plus", raw.plus);
  line("minus", raw.minus);
  os << "rhd:\n";
  for (const auto& row : raw.rhd) os << join(raw.carrier, row) << '\n';
  return os.str();
}

std::string format_irack(const IrackTable& irack) { return format_irack(irack.raw()); }

std::string format_relation(const Carrier& carrier, const Relation& r) {
  std::ostringstream os;
  os << "arity: " << r.src_arity() << " -> " << r.dst_arity() << '\n';
  for (const auto& [a, b] : r.pairs())
    os << format_tuple(carrier, a) << " | " << format_tuple(carrier, b) << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

IrackTable load_irack(const std::string& source) {
  if (source == kBuiltinExample) return builtin_example_irack();
  if (source.rfind("builtin:", 0) == 0) throw ParseError(source, 0, "unknown builtin irack");
  return IrackTable::validate(parse_irack(read_file(source), source));
}

}  // namespace irack
