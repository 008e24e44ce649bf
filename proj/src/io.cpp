#include "shellforge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "shellforge/errors.hpp"

namespace shellforge::io {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> words;
};

// Splits into non-empty lines of whitespace-separated words, comments dropped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) parsed.words.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.words.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

int to_int(const Line& line, std::string_view word) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line.number, "expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

int vertex(const Line& line, std::string_view word, int n) {
  int v = to_int(line, word);
  if (v < 0 || v >= n) {
    throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range for n = " +
                                      std::to_string(n));
  }
  return v;
}

// Header "<keyword> a [b]" returning the integer arguments.
std::vector<int> header(const std::vector<Line>& lines, std::string_view keyword, std::size_t args) {
  if (lines.empty()) throw ParseError(1, "missing '" + std::string(keyword) + "' header");
  const Line& h = lines.front();
  if (h.words[0] != keyword || h.words.size() != args + 1) {
    throw ParseError(h.number, "expected header '" + std::string(keyword) + "' with " +
                                   std::to_string(args) + " integer(s)");
  }
  std::vector<int> out;
  for (std::size_t i = 1; i <= args; ++i) out.push_back(to_int(h, h.words[i]));
  if (out[0] < 0 || out[0] > kMaxVertices) throw ParseError(h.number, "vertex count out of range");
  return out;
}

std::vector<Edge> edge_lines(const std::vector<Line>& lines, int n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.words.size() != 2) throw ParseError(line.number, "expected 'u v'");
    int u = vertex(line, line.words[0], n);
    int v = vertex(line, line.words[1], n);
    if (u == v) throw ParseError(line.number, "loop edge");
    edges.emplace_back(u, v);
  }
  return edges;
}

std::vector<Face> facet_lines(const std::vector<Line>& lines, std::size_t first, std::size_t last,
                              int n, int k) {
  std::vector<Face> facets;
  for (std::size_t i = first; i < last; ++i) {
    const Line& line = lines[i];
    if (line.words.size() != static_cast<std::size_t>(k)) {
      throw ParseError(line.number, "expected " + std::to_string(k) + " vertices");
    }
    Face f = 0;
    for (std::string_view w : line.words) {
      int v = vertex(line, w, n);
      if (contains(f, v)) throw ParseError(line.number, "repeated vertex");
      f |= bit(v);
    }
    facets.push_back(f);
  }
  return facets;
}

void write_face(std::ostringstream& out, Face f) {
  bool first = true;
  for_each_bit(f, [&](int v) {
    if (!first) out << ' ';
    out << v;
    first = false;
  });
  out << '\n';
}

ShellingFile parse_shelling_lines(const std::vector<Line>& lines, std::size_t last) {
  std::vector<int> h = header(lines, "shelling", 2);
  if (h[1] < 0 || h[1] > h[0]) throw ParseError(lines.front().number, "facet size out of range");
  ShellingFile file{h[0], h[1], facet_lines(lines, 1, last, h[0], h[1])};
  return file;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  int n = header(lines, "graph", 1)[0];
  auto edges = edge_lines(lines, n);
  Graph g(n, edges);
  if (g.edge_count() != edges.size()) throw ParseError(lines.front().number, "repeated edge");
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

ErasureFile parse_erasure(std::string_view text) {
  auto lines = tokenize(text);
  int n = header(lines, "erasure", 1)[0];
  return ErasureFile{n, edge_lines(lines, n)};
}

std::string format_erasure(const ErasureSequence& seq) {
  std::ostringstream out;
  out << "erasure " << seq.base.order() << '\n';
  for (const Edge& e : seq.edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Clutter parse_complex(std::string_view text) {
  auto lines = tokenize(text);
  std::vector<int> h = header(lines, "complex", 2);
  if (h[1] < 0 || h[1] > h[0]) throw ParseError(lines.front().number, "facet size out of range");
  auto facets = facet_lines(lines, 1, lines.size(), h[0], h[1]);
  try {
    return Clutter(h[0], h[1], std::move(facets));
  } catch (const ArgumentError& e) {
    throw ParseError(lines.front().number, e.what());
  }
}

std::string format_complex(const Clutter& c) {
  std::ostringstream out;
  out << "complex " << c.vertex_count() << ' ' << c.facet_size() << '\n';
  for (Face f : c.facets()) write_face(out, f);
  return out.str();
}

ShellingFile parse_shelling(std::string_view text) {
  auto lines = tokenize(text);
  return parse_shelling_lines(lines, lines.size());
}

std::string format_shelling(int n, int k, const ShellingOrder& order) {
  std::ostringstream out;
  out << "shelling " << n << ' ' << k << '\n';
  for (Face f : order) write_face(out, f);
  return out.str();
}

CertificateFile parse_certificate(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty certificate");
  const Line& last = lines.back();
  if (last.words.size() != 2 || last.words[0] != "verdict") {
    throw ParseError(last.number, "expected 'verdict <word>' as the last line");
  }
  CertificateFile file;
  if (last.words[1] == "extendable") {
    file.verdict = Verdict::Extendable;
  } else if (last.words[1] == "stuck") {
    file.verdict = Verdict::Stuck;
  } else if (last.words[1] == "inconclusive") {
    file.verdict = Verdict::Inconclusive;
  } else {
    throw ParseError(last.number, "unknown verdict '" + std::string(last.words[1]) + "'");
  }
  file.shelling = parse_shelling_lines(lines, lines.size() - 1);
  return file;
}

std::string format_certificate(int n, int k, const ExtendabilityCertificate& cert) {
  return format_shelling(n, k, cert.order) + "verdict " + std::string(to_string(cert.verdict)) + "\n";
}

void Report::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

void Report::set(std::string key, std::uint64_t value) { set(std::move(key), std::to_string(value)); }

std::string Report::format() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

std::optional<std::string> Report::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace shellforge::io
