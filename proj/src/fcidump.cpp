#include "ciqcc/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ciqcc/errors.hpp"

namespace ciqcc {

MolecularIntegrals::MolecularIntegrals(int n_spatial_orbitals, int n_electrons, int ms2)
    : n_(n_spatial_orbitals), n_electrons_(n_electrons), ms2_(ms2) {
  if (n_ < 1) throw ArgumentError("NORB must be positive");
  if (n_electrons < 0 || n_electrons > 2 * n_) throw ArgumentError("NELEC out of range");
  if (std::abs(ms2) > n_electrons || (n_electrons - ms2) % 2 != 0) {
    throw ArgumentError("MS2 inconsistent with NELEC");
  }
  h1_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
  h2_.assign(static_cast<std::size_t>(n_) * n_ * n_ * n_, 0.0);
}

void MolecularIntegrals::set_one_body(int p, int q, double v) {
  h1_[index(p, q)] = v;
  h1_[index(q, p)] = v;
}

void MolecularIntegrals::set_two_body(int p, int q, int r, int s, double v) {
  for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
    for (auto [c, d] : {std::pair{r, s}, std::pair{s, r}}) {
      h2_[index(a, b, c, d)] = v;
      h2_[index(c, d, a, b)] = v;
    }
  }
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

std::optional<double> to_number(std::string tok) {
  std::replace(tok.begin(), tok.end(), 'D', 'E');
  std::replace(tok.begin(), tok.end(), 'd', 'e');
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
  return v;
}

std::optional<int> to_int(std::string_view tok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
  return v;
}

}  // namespace

MolecularIntegrals parse_fcidump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  // Namelist: collect everything up to the terminator into KEY=VALUE pairs.
  std::string header;
  bool started = false;
  bool closed = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string u = upper(line);
    if (!started) {
      const auto pos = u.find("&FCI");
      if (pos == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw ParseError("expected '&FCI' namelist header", line_no);
      }
      started = true;
      u = u.substr(pos + 4);
    }
    const auto end_amp = u.find("&END");
    const auto end_slash = u.find('/');
    const auto end = std::min(end_amp, end_slash);
    header += ' ';
    header += u.substr(0, end);
    if (end != std::string::npos) {
      closed = true;
      break;
    }
  }
  if (!closed) throw ParseError("unterminated &FCI namelist", line_no);

  std::map<std::string, std::string> keys;
  {
    // KEY=v1,v2,... ; values run until the next KEY=.
    std::replace(header.begin(), header.end(), ',', ' ');
    std::istringstream hs(header);
    std::string tok, current;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      if (eq != std::string::npos) {
        current = tok.substr(0, eq);
        keys[current] = tok.substr(eq + 1);
      } else if (!current.empty()) {
        keys[current] += ' ' + tok;
      }
    }
  }
  auto get_int = [&](const std::string& key, std::optional<int> fallback) {
    auto it = keys.find(key);
    if (it == keys.end()) {
      if (fallback) return *fallback;
      throw ParseError("namelist is missing " + key);
    }
    std::istringstream vs(it->second);
    std::string tok;
    vs >> tok;
    auto v = to_int(tok);
    if (!v) throw ParseError("namelist value " + key + "='" + it->second + "' is not an integer");
    return *v;
  };
  const int norb = get_int("NORB", std::nullopt);
  const int nelec = get_int("NELEC", std::nullopt);
  const int ms2 = get_int("MS2", 0);
  MolecularIntegrals m;
  try {
    m = MolecularIntegrals(norb, nelec, ms2);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string vtok;
    if (!(ls >> vtok)) continue;
    auto value = to_number(vtok);
    if (!value) throw ParseError("non-numeric integral value '" + vtok + "'", line_no);
    int idx[4];
    for (int& k : idx) {
      std::string t;
      if (!(ls >> t)) throw ParseError("integral line needs four indices", line_no);
      auto v = to_int(t);
      if (!v) throw ParseError("non-integer index '" + t + "'", line_no);
      if (*v < 0 || *v > norb) {
        throw ParseError("index " + t + " outside [0, " + std::to_string(norb) + "]", line_no);
      }
      k = *v;
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      m.set_core_energy(*value);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      continue;  // orbital energy
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      m.set_one_body(i - 1, j - 1, *value);
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      m.set_two_body(i - 1, j - 1, k - 1, l - 1, *value);
    } else {
      throw ParseError("unrecognised index pattern", line_no);
    }
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace ciqcc
