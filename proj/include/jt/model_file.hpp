#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jt/forms.hpp"
#include "jt/jordan.hpp"
#include "jt/matrix.hpp"

namespace jt {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, std::string message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

struct DiracEntry {
  std::optional<std::uint64_t> generic_seed;  // generic(seed)
  ComplexMatrix value;                        // inline matrix otherwise
  bool operator==(const DiracEntry& o) const { return generic_seed == o.generic_seed && value == o.value; }
};

struct ModelFile {
  std::vector<SummandTag> summands;
  std::vector<SpaceFactor> hilbert;
  std::string builtin;                        // sm | bf | ps, or empty for a block table
  std::map<std::string, std::string> blocks;  // R, L, Rbar, Lbar -> "a" | "0"
  std::map<std::string, DiracEntry> dirac;    // Y_nu, Y_e, Y_u, Y_d, m_nu, or D for block tables
  std::optional<double> tol;  // unset: caller default
  int N = 1;
  std::size_t max_depth = 0;
  std::uint64_t seed = 1;

  bool operator==(const ModelFile&) const = default;
};

ModelFile parse_model(const std::string& path);
ModelFile parse_model_text(const std::string& text, const std::string& source = "<input>");
std::string serialize(const ModelFile& m);

// Throws ValidationError.
void validate(const ModelFile& m);

FiniteTriple build_triple(const ModelFile& m);

// "a+bi" syntax; throws std::invalid_argument.
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);

}  // namespace jt
