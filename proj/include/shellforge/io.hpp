#pragma once

// Line-oriented text formats. Every format starts with a header line naming
// it; blank lines and everything after '#' on a line are ignored.
//
//   graph n        then one "u v" line per edge
//   erasure n      then one "u v" line per removal, in order
//   complex n k    then one facet per line, k vertex indices
//   shelling n k   as complex, but line order is the shelling order
//
// A certificate is a shelling block followed by "verdict <word>".

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shellforge/complex.hpp"
#include "shellforge/erasure.hpp"
#include "shellforge/graph.hpp"
#include "shellforge/shelling.hpp"

namespace shellforge::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// The removals of an erasure file, plus its vertex count.
struct ErasureFile {
  int n = 0;
  std::vector<Edge> edges;
};

ErasureFile parse_erasure(std::string_view text);
std::string format_erasure(const ErasureSequence& seq);

Clutter parse_complex(std::string_view text);
std::string format_complex(const Clutter& c);

/// A shelling file: ambient sizes and the facet order as written.
struct ShellingFile {
  int n = 0;
  int k = 0;
  ShellingOrder order;
};

ShellingFile parse_shelling(std::string_view text);
std::string format_shelling(int n, int k, const ShellingOrder& order);

struct CertificateFile {
  ShellingFile shelling;
  Verdict verdict = Verdict::Inconclusive;
};

CertificateFile parse_certificate(std::string_view text);
std::string format_certificate(int n, int k, const ExtendabilityCertificate& cert);

/// Ordered key=value report; formats as one "key=value" line per entry.
class Report {
 public:
  void set(std::string key, std::string value);
  void set(std::string key, std::uint64_t value);
  std::string format() const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::optional<std::string> get(std::string_view key) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string digest(std::string_view bytes);

/// Whole-file read; throws std::runtime_error if the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace shellforge::io
