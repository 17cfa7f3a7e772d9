#include "ciqcc/qubit_operator.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "ciqcc/errors.hpp"

namespace ciqcc {

namespace {

using Coefficient = QubitOperator::Coefficient;

void require_same_size(int a, int b) {
  if (a != b) {
    throw DimensionError("operators act on " + std::to_string(a) + " and " +
                         std::to_string(b) + " qubits");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s, std::size_t line) {
  s = trim(s);
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad number '" + std::string(s) + "'", line);
  }
  return v;
}

}  // namespace

QubitOperator::QubitOperator(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n_qubits) + " outside [1, 64]");
  }
}

QubitOperator QubitOperator::identity(int n_qubits, Coefficient c) {
  QubitOperator op(n_qubits);
  if (c != Coefficient{}) op.terms_.push_back({PauliWord(n_qubits), c});
  return op;
}

QubitOperator QubitOperator::from_word(const PauliWord& w, Coefficient c) {
  QubitOperator op(w.n_qubits());
  c *= w.phase();
  if (c != Coefficient{}) op.terms_.push_back({w.canonical(), c});
  return op;
}

Coefficient QubitOperator::coefficient(const PauliWord& w) const {
  const PauliWord key = w.canonical();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const PauliWord& k) {
                               return lexicographic_less(t.word, k);
                             });
  if (it == terms_.end() || it->word != key) return {};
  // c_w · letters(w) = c_w · phase(w)^{-1} · w
  return it->coeff * std::conj(w.phase());
}

double QubitOperator::max_imag() const noexcept {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff.imag()));
  return m;
}

QubitOperator QubitOperator::real_part(double tolerance) const {
  QubitOperator out(n_qubits_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (std::abs(t.coeff.imag()) > tolerance) {
      throw NumericError("coefficient of " + t.word.to_sparse_string() +
                         " has imaginary part " + format_double(t.coeff.imag()));
    }
    if (t.coeff.real() != 0.0) out.terms_.push_back({t.word, t.coeff.real()});
  }
  return out;
}

QubitOperator QubitOperator::adjoint() const {
  QubitOperator out = *this;
  for (auto& t : out.terms_) t.coeff = std::conj(t.coeff);
  return out;
}

QubitOperator operator+(const QubitOperator& a, const QubitOperator& b) {
  require_same_size(a.n_qubits_, b.n_qubits_);
  OperatorBuilder acc(a.n_qubits_);
  acc.reserve(a.size() + b.size());
  acc.add(a);
  acc.add(b);
  return acc.build();
}

QubitOperator operator-(const QubitOperator& a, const QubitOperator& b) {
  require_same_size(a.n_qubits_, b.n_qubits_);
  OperatorBuilder acc(a.n_qubits_);
  acc.reserve(a.size() + b.size());
  acc.add(a);
  acc.add(b, -1.0);
  return acc.build();
}

QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
  require_same_size(a.n_qubits_, b.n_qubits_);
  OperatorBuilder acc(a.n_qubits_);
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) acc.add(ta.word * tb.word, ta.coeff * tb.coeff);
  }
  return acc.build();
}

QubitOperator operator*(Coefficient s, const QubitOperator& a) {
  QubitOperator out(a.n_qubits_);
  if (s == Coefficient{}) return out;
  out.terms_.reserve(a.size());
  for (const auto& t : a.terms_) out.terms_.push_back({t.word, s * t.coeff});
  return out;
}

bool operator==(const QubitOperator& a, const QubitOperator& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].word != b.terms_[i].word || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

OperatorBuilder::OperatorBuilder(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n_qubits) + " outside [1, 64]");
  }
}

void OperatorBuilder::add(const PauliWord& w, Coefficient c) {
  require_same_size(n_qubits_, w.n_qubits());
  acc_[w.canonical()] += c * w.phase();
}

void OperatorBuilder::add(const QubitOperator& op, Coefficient scale) {
  require_same_size(n_qubits_, op.n_qubits());
  for (const auto& t : op.terms()) acc_[t.word] += scale * t.coeff;
}

QubitOperator OperatorBuilder::build(double prune_eps) const {
  QubitOperator out(n_qubits_);
  out.terms_.reserve(acc_.size());
  for (const auto& [w, c] : acc_) {
    const double mag = std::abs(c);
    if (mag == 0.0 || mag < prune_eps) continue;
    out.terms_.push_back({w, c});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const QubitOperator::Term& a, const QubitOperator::Term& b) {
              return lexicographic_less(a.word, b.word);
            });
  return out;
}

QubitOperator commutator(const QubitOperator& h, const PauliWord& p) {
  require_same_size(h.n_qubits(), p.n_qubits());
  OperatorBuilder acc(h.n_qubits());
  for (const auto& t : h.terms()) {
    if (commutes(t.word, p)) continue;
    acc.add(t.word * p, 2.0 * t.coeff);
  }
  return acc.build();
}

QubitOperator prune(const QubitOperator& h, double eps) {
  if (eps < 0.0) throw ArgumentError("prune threshold must be non-negative");
  OperatorBuilder acc(h.n_qubits());
  acc.reserve(h.size());
  acc.add(h);
  return acc.build(eps);
}

__extension__ using u128 = unsigned __int128;

std::uint64_t max_term_count(int n_qubits) {
  if (n_qubits < 1) throw ArgumentError("max_term_count needs at least one qubit");
  // (4^N + 2^N)/2 − 1 = 2^{2N−1} + 2^{N−1} − 1
  if (2 * n_qubits - 1 > 63) throw std::overflow_error("max_term_count overflows 64 bits");
  return (std::uint64_t{1} << (2 * n_qubits - 1)) + (std::uint64_t{1} << (n_qubits - 1)) - 1;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return {buf, ptr};
}

std::string to_text(const QubitOperator& op) {
  std::string out;
  for (const auto& t : op.terms()) {
    out += '(';
    out += format_double(t.coeff.real());
    out += ',';
    out += format_double(t.coeff.imag());
    out += ") ";
    out += t.word.to_sparse_string();
    out += '\n';
  }
  return out;
}

QubitOperator from_text(std::string_view text, int n_qubits) {
  struct RawTerm {
    std::uint64_t x = 0, z = 0;
    Coefficient c;
  };
  std::vector<RawTerm> raw;
  int max_index = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() != '(') throw ParseError("expected '(' at start of term", line_no);
    const std::size_t comma = line.find(',');
    const std::size_t close = line.find(')');
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) {
      throw ParseError("malformed coefficient", line_no);
    }
    RawTerm term;
    term.c = {parse_double(line.substr(1, comma - 1), line_no),
              parse_double(line.substr(comma + 1, close - comma - 1), line_no)};
    std::string_view rest = trim(line.substr(close + 1));
    bool saw_identity = false;
    while (!rest.empty()) {
      std::size_t sp = rest.find_first_of(" \t");
      std::string_view tok = rest.substr(0, sp);
      rest = trim(rest.substr(sp == std::string_view::npos ? rest.size() : sp));
      if (tok == "I") {
        saw_identity = true;
        continue;
      }
      const char letter = tok.front();
      int q = -1;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
      if (tok.size() < 2 || ec != std::errc{} || ptr != tok.data() + tok.size() || q < 0) {
        throw ParseError("bad Pauli token '" + std::string(tok) + "'", line_no);
      }
      if (q >= kMaxQubits) throw ParseError("qubit index beyond 63", line_no);
      const std::uint64_t bit = std::uint64_t{1} << q;
      if (((term.x | term.z) & bit) != 0) {
        throw ParseError("qubit " + std::to_string(q) + " repeated in one term", line_no);
      }
      switch (letter) {
        case 'X': term.x |= bit; break;
        case 'Y': term.x |= bit; term.z |= bit; break;
        case 'Z': term.z |= bit; break;
        default:
          throw ParseError(std::string("bad Pauli letter '") + letter + "'", line_no);
      }
      max_index = std::max(max_index, q);
    }
    if (saw_identity && (term.x | term.z) != 0) {
      throw ParseError("identity token mixed with Pauli factors", line_no);
    }
    raw.push_back(term);
  }
  if (n_qubits == 0) n_qubits = std::max(1, max_index + 1);
  if (max_index >= n_qubits) {
    throw ParseError("qubit index " + std::to_string(max_index) + " exceeds declared count " +
                     std::to_string(n_qubits));
  }
  OperatorBuilder acc(n_qubits);
  acc.reserve(raw.size());
  for (const auto& t : raw) acc.add(PauliWord(n_qubits, t.x, t.z), t.c);
  return acc.build();
}

}  // namespace ciqcc
