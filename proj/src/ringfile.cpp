#include "gring/ringfile.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "gring/error.hpp"

namespace gring {

namespace {

struct Lines {
  std::vector<std::pair<std::size_t, std::string>> content;  // (line number, text)
  std::size_t pos = 0;

  bool done() const { return pos >= content.size(); }
  std::size_t line() const {
    return done() ? (content.empty() ? 0 : content.back().first) : content[pos].first;
  }
  const std::string& next() {
    if (done()) throw Error(ErrorKind::parse_error, "unexpected end of file");
    return content[pos++].second;
  }
};

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + reason);
}

Lines split_lines(const std::string& text) {
  Lines out;
  std::size_t lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = raw.find_last_not_of(" \t\r");
    out.content.emplace_back(lineno, raw.substr(begin, end - begin + 1));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_int(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size()) fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const std::exception&) {
    fail(line, "bad integer '" + tok + "'");
  }
}

std::vector<std::vector<Elem>> parse_table(Lines& in, std::size_t n, const char* what) {
  std::vector<std::vector<Elem>> table;
  table.reserve(n);
  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t line = in.line();
    const auto toks = tokens(in.next());
    if (toks.size() != n)
      fail(line, std::string(what) + " row " + std::to_string(row) + " has " +
                     std::to_string(toks.size()) + " entries, expected " +
                     std::to_string(n));
    std::vector<Elem> r;
    r.reserve(n);
    for (const std::string& t : toks) {
      const long v = parse_int(t, line);
      if (v < 0 || v >= static_cast<long>(n))
        fail(line, std::string(what) + " entry " + t + " out of range [0, " +
                       std::to_string(n) + ")");
      r.push_back(static_cast<Elem>(v));
    }
    table.push_back(std::move(r));
  }
  return table;
}

void expect_keyword(Lines& in, const std::string& kw) {
  const std::size_t line = in.line();
  const std::string got = in.next();
  if (got != kw) fail(line, "expected '" + kw + "', got '" + got + "'");
}

}  // namespace

NamedRing parse_ring_file(const std::string& text, const Config& cfg) {
  Lines in = split_lines(text);

  std::size_t line = in.line();
  auto header = tokens(in.next());
  if (header.size() != 2 || header[0] != "ring") fail(line, "expected 'ring <name>'");
  const std::string name = header[1];

  line = in.line();
  auto order_toks = tokens(in.next());
  if (order_toks.size() != 2 || order_toks[0] != "order")
    fail(line, "expected 'order <n>'");
  const long n = parse_int(order_toks[1], line);
  if (n < 1) fail(line, "order must be positive");
  if (static_cast<std::size_t>(n) > cfg.max_order)
    throw Error(ErrorKind::cap_exceeded,
                "ring order " + std::to_string(n) + " exceeds max-order cap " +
                    std::to_string(cfg.max_order));

  line = in.line();
  auto unity_toks = tokens(in.next());
  if (unity_toks.size() != 2 || unity_toks[0] != "unity")
    fail(line, "expected 'unity <index|none>'");
  std::optional<Elem> unity;
  if (unity_toks[1] != "none") {
    const long u = parse_int(unity_toks[1], line);
    if (u < 0 || u >= n) fail(line, "unity index out of range");
    unity = static_cast<Elem>(u);
  }

  expect_keyword(in, "add");
  auto add = parse_table(in, static_cast<std::size_t>(n), "add");
  expect_keyword(in, "mul");
  auto mul = parse_table(in, static_cast<std::size_t>(n), "mul");

  line = in.line();
  auto group_toks = tokens(in.next());
  if (group_toks.size() != 2 || group_toks[0] != "group")
    fail(line, "expected 'group <m>'");
  const long m = parse_int(group_toks[1], line);
  if (m < 1) fail(line, "group order must be positive");

  expect_keyword(in, "cayley");
  auto cayley = parse_table(in, static_cast<std::size_t>(m), "cayley");

  expect_keyword(in, "grading");
  std::vector<ElementSet> comps;
  for (long g = 0; g < m; ++g) {
    line = in.line();
    auto toks = tokens(in.next());
    const std::string label = "g" + std::to_string(g) + ":";
    if (toks.empty() || toks[0] != label)
      fail(line, "expected component line starting with '" + label + "'");
    ElementSet s(static_cast<std::size_t>(n));
    long prev = -1;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const long v = parse_int(toks[i], line);
      if (v < 0 || v >= n) fail(line, "component index out of range");
      if (v <= prev) fail(line, "component indices must be strictly ascending");
      prev = v;
      s.set(static_cast<Elem>(v));
    }
    comps.push_back(std::move(s));
  }

  expect_keyword(in, "end");
  if (!in.done()) fail(in.line(), "trailing content after 'end'");

  try {
    GradedRing graded = GradedRing::validate(
        FiniteRing::validate(add, mul, unity, cfg), FiniteGroup::validate(cayley),
        std::move(comps), cfg);
    return NamedRing{name, std::move(graded)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::axiom_violation || e.kind() == ErrorKind::domain_error)
      throw e.with_context("ring '" + name + "': ");
    throw;
  }
}

NamedRing load_ring_file(const std::string& path, const Config& cfg) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_file(buf.str(), cfg);
}

std::string emit_ring_file(const std::string& name, const GradedRing& gr) {
  std::ostringstream out;
  const FiniteRing& r = gr.ring();
  const std::size_t n = r.order();
  out << "ring " << name << "\n";
  out << "order " << n << "\n";
  if (r.has_unity())
    out << "unity " << *r.unity() << "\n";
  else
    out << "unity none\n";
  out << "add\n";
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* row = r.add_row(static_cast<Elem>(a));
    for (std::size_t b = 0; b < n; ++b) out << (b ? " " : "") << row[b];
    out << "\n";
  }
  out << "mul\n";
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* row = r.mul_row(static_cast<Elem>(a));
    for (std::size_t b = 0; b < n; ++b) out << (b ? " " : "") << row[b];
    out << "\n";
  }
  const std::size_t m = gr.group_order();
  out << "group " << m << "\n";
  out << "cayley\n";
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      out << (b ? " " : "") << gr.group().op(static_cast<Elem>(a), static_cast<Elem>(b));
    out << "\n";
  }
  out << "grading\n";
  for (std::size_t g = 0; g < m; ++g) {
    out << "g" << g << ":";
    gr.component(static_cast<Elem>(g)).for_each([&](Elem e) { out << " " << e; });
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace gring
