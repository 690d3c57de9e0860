#include "jt/model_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "jt/models.hpp"

namespace jt {

ParseError::ParseError(std::string source, std::size_t line, std::size_t column, std::string message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [p, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string fmt_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// A value with the source position of each character.
struct Located {
  std::string text;
  std::vector<std::pair<std::size_t, std::size_t>> pos;

  std::pair<std::size_t, std::size_t> at(std::size_t i) const {
    if (pos.empty()) return {0, 0};
    return pos[std::min(i, pos.size() - 1)];
  }
};

class Parser {
 public:
  Parser(const std::string& text, std::string source) : source_(std::move(source)) {
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l)) lines_.push_back(l);
  }

  ModelFile run() {
    ModelFile m;
    std::string section;
    std::set<std::string> seen_sections;
    std::set<std::string> seen_keys;
    for (std::size_t li = 0; li < lines_.size(); ++li) {
      const std::string raw = strip_comment(lines_[li]);
      const std::string t = trim(raw);
      if (t.empty()) continue;
      const std::size_t col0 = raw.find_first_not_of(" \t") + 1;
      if (t.front() == '[') {
        if (t.back() != ']') fail(li + 1, col0 + t.size(), "expected ']' to close section header");
        section = trim(t.substr(1, t.size() - 2));
        static const std::set<std::string> known{"algebra", "hilbert", "representation", "dirac", "options"};
        if (!known.count(section))
          fail(li + 1, col0 + 1, "unknown section '" + section + "' (expected algebra, hilbert, representation, dirac or options)");
        if (!seen_sections.insert(section).second) fail(li + 1, col0 + 1, "duplicate section [" + section + "]");
        continue;
      }
      if (section.empty()) fail(li + 1, col0, "expected a section header before '" + t + "'");
      const auto eq = raw.find('=');
      if (eq == std::string::npos) fail(li + 1, col0, "expected 'key = value'");
      const std::string key = trim(raw.substr(0, eq));
      if (key.empty()) fail(li + 1, col0, "expected a key before '='");
      if (!seen_keys.insert(section + "." + key).second) fail(li + 1, col0, "duplicate key '" + key + "'");
      Located v = value_from(li, eq + 1);
      if (trim(v.text).empty()) fail(li + 1, eq + 2, "expected a value after '='");
      assign(m, section, key, v, li + 1, col0);
    }
    return m;
  }

 private:
  std::string source_;
  std::vector<std::string> lines_;

  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) const {
    throw ParseError(source_, line, col, msg);
  }
  [[noreturn]] void fail_at(const Located& v, std::size_t i, const std::string& msg) const {
    const auto [l, c] = v.at(i);
    fail(l, c, msg);
  }

  static std::string strip_comment(const std::string& s) {
    const auto h = s.find('#');
    return h == std::string::npos ? s : s.substr(0, h);
  }

  // Collects a value, continuing onto following lines while brackets are open.
  Located value_from(std::size_t& li, std::size_t start) {
    Located v;
    int depth = 0;
    std::size_t col = start;
    while (true) {
      const std::string line = strip_comment(lines_[li]);
      for (std::size_t c = col; c < line.size(); ++c) {
        const char ch = line[c];
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        v.text += ch;
        v.pos.push_back({li + 1, c + 1});
      }
      if (depth <= 0 || li + 1 >= lines_.size()) break;
      ++li;
      col = 0;
      v.text += ' ';
      v.pos.push_back({li + 1, 1});
    }
    return v;
  }

  std::size_t first_nonblank(const Located& v) const {
    const auto p = v.text.find_first_not_of(" \t\r");
    return p == std::string::npos ? 0 : p;
  }

  long long parse_int(const Located& v, const char* what) const {
    const std::string t = trim(v.text);
    long long x = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc() || p != t.data() + t.size())
      fail_at(v, first_nonblank(v), std::string("expected an integer for ") + what + ", got '" + t + "'");
    return x;
  }

  void assign(ModelFile& m, const std::string& section, const std::string& key, const Located& v, std::size_t line,
              std::size_t col) {
    const std::string t = trim(v.text);
    if (section == "algebra") {
      if (key != "summands") fail(line, col, "unknown key '" + key + "' in [algebra] (expected summands)");
      try {
        m.summands = parse_summands(t);
      } catch (const UnsupportedSummand& e) {
        throw ValidationError(e.what());
      } catch (const std::invalid_argument& e) {
        fail_at(v, first_nonblank(v), e.what());
      }
      if (m.summands.empty()) fail_at(v, first_nonblank(v), "expected at least one summand");
    } else if (section == "hilbert") {
      if (key != "factors") fail(line, col, "unknown key '" + key + "' in [hilbert] (expected factors)");
      m.hilbert = parse_factors(v);
    } else if (section == "representation") {
      if (key == "builtin") {
        m.builtin = t;
      } else if (key == "R" || key == "L" || key == "Rbar" || key == "Lbar") {
        if (t != "a" && t != "0") fail_at(v, first_nonblank(v), "expected 'a' or '0' for block " + key);
        m.blocks[key] = t;
      } else {
        fail(line, col, "unknown key '" + key + "' in [representation] (expected builtin, R, L, Rbar or Lbar)");
      }
    } else if (section == "dirac") {
      static const std::set<std::string> names{"Y_nu", "Y_e", "Y_u", "Y_d", "m_nu", "D"};
      if (!names.count(key)) fail(line, col, "unknown Dirac block '" + key + "' (expected Y_nu, Y_e, Y_u, Y_d, m_nu or D)");
      m.dirac[key] = parse_dirac(v);
    } else {
      if (key == "tol") {
        double x = 0;
        if (!parse_double(t, x)) fail_at(v, first_nonblank(v), "expected a number for tol, got '" + t + "'");
        m.tol = x;
      } else if (key == "N") {
        m.N = static_cast<int>(parse_int(v, "N"));
      } else if (key == "max_depth") {
        const long long d = parse_int(v, "max_depth");
        if (d < 0) fail_at(v, first_nonblank(v), "max_depth must be non-negative");
        m.max_depth = static_cast<std::size_t>(d);
      } else if (key == "seed") {
        const long long s = parse_int(v, "seed");
        if (s < 0) fail_at(v, first_nonblank(v), "seed must be non-negative");
        m.seed = static_cast<std::uint64_t>(s);
      } else {
        fail(line, col, "unknown key '" + key + "' in [options] (expected tol, N, max_depth or seed)");
      }
    }
  }

  std::vector<SpaceFactor> parse_factors(const Located& v) const {
    std::vector<SpaceFactor> out;
    std::size_t i = 0;
    const std::string& s = v.text;
    while (i < s.size()) {
      std::size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      const std::string item = trim(s.substr(i, j - i));
      const std::size_t start = s.find_first_not_of(" \t", i);
      const auto colon = item.find(':');
      if (colon == std::string::npos) fail_at(v, start, "expected 'name:dim', got '" + item + "'");
      const std::string name = trim(item.substr(0, colon));
      const std::string dim = trim(item.substr(colon + 1));
      long long d = 0;
      const auto [p, ec] = std::from_chars(dim.data(), dim.data() + dim.size(), d);
      if (name.empty() || ec != std::errc() || p != dim.data() + dim.size() || d < 1)
        fail_at(v, start, "expected 'name:dim' with a positive dim, got '" + item + "'");
      out.push_back({name, static_cast<std::size_t>(d)});
      i = j + 1;
    }
    return out;
  }

  DiracEntry parse_dirac(const Located& v) const {
    const std::string t = trim(v.text);
    DiracEntry e;
    if (t.rfind("generic(", 0) == 0) {
      if (t.back() != ')') fail_at(v, v.text.size(), "expected ')' after generic seed");
      const std::string arg = trim(t.substr(8, t.size() - 9));
      long long s = 0;
      const auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), s);
      if (ec != std::errc() || p != arg.data() + arg.size() || s < 0)
        fail_at(v, first_nonblank(v) + 8, "expected a non-negative integer seed in generic(...)");
      e.generic_seed = static_cast<std::uint64_t>(s);
      return e;
    }
    e.value = parse_matrix(v);
    return e;
  }

  // [[a, b], [c, d]]
  ComplexMatrix parse_matrix(const Located& v) const {
    const std::string& s = v.text;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    };
    auto expect = [&](char c, const char* what) {
      skip();
      if (i >= s.size() || s[i] != c) fail_at(v, i, std::string("expected ") + what);
      ++i;
    };
    std::vector<std::vector<cplx>> rows;
    expect('[', "'[' to open a matrix");
    while (true) {
      expect('[', "'[' to open a matrix row");
      std::vector<cplx> row;
      while (true) {
        skip();
        const std::size_t start = i;
        while (i < s.size() && s[i] != ',' && s[i] != ']') ++i;
        const std::string lit = trim(s.substr(start, i - start));
        try {
          row.push_back(parse_complex(lit));
        } catch (const std::invalid_argument&) {
          fail_at(v, start, "expected a complex literal a+bi, got '" + lit + "'");
        }
        skip();
        if (i >= s.size()) fail_at(v, i, "expected ',' or ']' in matrix row");
        if (s[i++] == ']') break;
      }
      if (!rows.empty() && row.size() != rows.front().size())
        fail_at(v, i - 1, "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(rows.front().size()));
      rows.push_back(std::move(row));
      skip();
      if (i >= s.size()) fail_at(v, i, "expected ',' or ']' after matrix row");
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (s[i] == ']') {
        ++i;
        break;
      }
      fail_at(v, i, "expected ',' or ']' after matrix row");
    }
    skip();
    if (i != s.size()) fail_at(v, i, "unexpected text after matrix");
    return ComplexMatrix::from_rows(rows);
  }
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

std::vector<SummandTag> builtin_tags(const std::string& b) {
  if (b == "sm") return parse_summands("R + R + H(3,C)");
  if (b == "bf") return parse_summands("JSpin(2) + H(2,C) + H(3,C) + R");
  return parse_summands("H(2,C) + H(2,C) + H(4,C)");
}

ComplexMatrix seeded_block(int n, std::uint64_t seed, bool symmetric) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0 / std::sqrt(2.0));
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
  return symmetric ? 0.5 * (m + transpose(m)) : m;
}

ComplexMatrix resolve(const ModelFile& m, const std::string& key, int n) {
  const auto it = m.dirac.find(key);
  if (it == m.dirac.end()) return ComplexMatrix::zeros(n);
  if (it->second.generic_seed) return seeded_block(n, *it->second.generic_seed, key == "m_nu");
  return it->second.value;
}

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') {
    double re = 0;
    if (!parse_double(s, re)) throw std::invalid_argument("bad real literal '" + s + "'");
    return {re, 0.0};
  }
  const std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag_of = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    double x = 0;
    if (!parse_double(t, x)) throw std::invalid_argument("bad imaginary literal '" + t + "i'");
    return x;
  };
  if (split == std::string::npos) return {0.0, imag_of(body)};
  double re = 0;
  if (!parse_double(body.substr(0, split), re)) throw std::invalid_argument("bad real part in '" + s + "'");
  return {re, imag_of(body.substr(split))};
}

std::string format_complex(cplx z) {
  const std::string im = fmt_double(z.imag());
  return fmt_double(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

ModelFile parse_model_text(const std::string& text, const std::string& source) {
  ModelFile m = Parser(text, source).run();
  validate(m);
  return m;
}

ModelFile parse_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model_text(ss.str(), path);
}

void validate(const ModelFile& m) {
  require(m.N >= 1, "N must be positive");
  require(!m.tol || (*m.tol > 0.0 && std::isfinite(*m.tol)), "tol must be positive");
  const bool table = !m.blocks.empty();
  require(table != !m.builtin.empty(), "[representation] needs either builtin = sm|bf|ps or a block table R/L/Rbar/Lbar");
  std::size_t expected_dim = 0;
  if (!table) {
    require(m.builtin == "sm" || m.builtin == "bf" || m.builtin == "ps",
            "unknown builtin representation '" + m.builtin + "' (expected sm, bf or ps)");
    if (!m.summands.empty())
      require(m.summands == builtin_tags(m.builtin), "[algebra] summands do not match builtin '" + m.builtin + "'");
    expected_dim = layout::hilbert_dim(m.N);
    require(!m.dirac.count("D"), "D is only allowed with a block-table representation");
    for (const auto& [k, e] : m.dirac)
      if (!e.generic_seed)
        require(e.value.rows() == static_cast<std::size_t>(m.N) && e.value.cols() == static_cast<std::size_t>(m.N),
                "Dirac block " + k + " is " + std::to_string(e.value.rows()) + "x" + std::to_string(e.value.cols()) +
                    ", expected " + std::to_string(m.N) + "x" + std::to_string(m.N));
    const auto it = m.dirac.find("m_nu");
    if (it != m.dirac.end() && !it->second.generic_seed)
      require((it->second.value - transpose(it->second.value)).norm() <= m.tol.value_or(kDefaultTol) * std::max(1.0, it->second.value.norm()),
              "m_nu must be symmetric");
  } else {
    require(!m.summands.empty(), "a block-table representation needs [algebra] summands");
    for (const char* k : {"R", "L", "Rbar", "Lbar"}) require(m.blocks.count(k), std::string("block table is missing ") + k);
    std::size_t size = 0;
    for (const auto& t : m.summands) size += algebra_from_tag(t).matrix_size();
    expected_dim = 4 * size;
    for (const auto& [k, e] : m.dirac) {
      require(k == "D", "block-table models take only a full D matrix, got " + k);
      require(!e.generic_seed, "D must be an inline matrix");
      require(e.value.rows() == expected_dim && e.value.cols() == expected_dim,
              "D must be " + std::to_string(expected_dim) + "x" + std::to_string(expected_dim));
    }
  }
  if (!m.hilbert.empty())
    require(label_dim(m.hilbert) == expected_dim, "[hilbert] factors multiply to " + std::to_string(label_dim(m.hilbert)) +
                                                      ", representation needs " + std::to_string(expected_dim));
}

std::string serialize(const ModelFile& m) {
  std::ostringstream os;
  if (!m.summands.empty()) {
    os << "[algebra]\nsummands = ";
    for (std::size_t i = 0; i < m.summands.size(); ++i) os << (i ? " + " : "") << m.summands[i].to_string();
    os << "\n\n";
  }
  if (!m.hilbert.empty()) {
    os << "[hilbert]\nfactors = ";
    for (std::size_t i = 0; i < m.hilbert.size(); ++i) os << (i ? ", " : "") << m.hilbert[i].name << ":" << m.hilbert[i].dim;
    os << "\n\n";
  }
  os << "[representation]\n";
  if (!m.builtin.empty()) os << "builtin = " << m.builtin << "\n";
  for (const char* k : {"R", "L", "Rbar", "Lbar"}) {
    const auto it = m.blocks.find(k);
    if (it != m.blocks.end()) os << k << " = " << it->second << "\n";
  }
  os << "\n";
  if (!m.dirac.empty()) {
    os << "[dirac]\n";
    for (const char* k : {"Y_nu", "Y_e", "Y_u", "Y_d", "m_nu", "D"}) {
      const auto it = m.dirac.find(k);
      if (it == m.dirac.end()) continue;
      os << k << " = ";
      if (it->second.generic_seed) {
        os << "generic(" << *it->second.generic_seed << ")\n";
        continue;
      }
      const ComplexMatrix& v = it->second.value;
      os << "[";
      for (std::size_t r = 0; r < v.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < v.cols(); ++c) os << (c ? ", " : "") << format_complex(v(r, c));
        os << "]";
      }
      os << "]\n";
    }
    os << "\n";
  }
  os << "[options]\n";
  if (m.tol) os << "tol = " << fmt_double(*m.tol) << "\n";
  os << "N = " << m.N << "\n";
  os << "max_depth = " << m.max_depth << "\n";
  os << "seed = " << m.seed << "\n";
  return os.str();
}

FiniteTriple build_triple(const ModelFile& m) {
  validate(m);
  FiniteTriple t;
  if (!m.builtin.empty()) {
    ModelParams p = ModelParams::zero(m.N);
    p.seed = m.seed;
    p.Y_nu = resolve(m, "Y_nu", m.N);
    p.Y_e = resolve(m, "Y_e", m.N);
    p.Y_u = resolve(m, "Y_u", m.N);
    p.Y_d = resolve(m, "Y_d", m.N);
    p.m_nu = resolve(m, "m_nu", m.N);
    t = m.builtin == "sm" ? sm_associative(p) : m.builtin == "bf" ? bf_jordan(p) : ps_jordan(p);
  } else {
    const FiniteJordanAlgebra a = algebra_from_tags(m.summands);
    const std::size_t d = a.matrix_size();
    const ComplexMatrix zero = ComplexMatrix::zeros(d);
    BiRepresentation r = doubled_defining(a, "table");
    for (std::size_t i = 0; i < a.dim(); ++i) {
      std::vector<ComplexMatrix> parts;
      for (const char* k : {"R", "L", "Rbar", "Lbar"}) parts.push_back(m.blocks.at(k) == "a" ? a[i] : zero);
      r.pi[i] = dirsum(parts);
    }
    DiracOperator dop;
    const auto it = m.dirac.find("D");
    dop.matrix = it == m.dirac.end() ? ComplexMatrix::zeros(4 * d) : it->second.value;
    t = make_triple(std::move(r), std::move(dop));
  }
  t.background.birep.tol = m.tol.value_or(kDefaultTol);
  return t;
}

}  // namespace jt
