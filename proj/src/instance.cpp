#include "setcover/instance.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "setcover/rng.hpp"

namespace setcover {

namespace {

constexpr long long kMaxDimension = 100'000'000;

std::vector<long long> read_integer_tokens(std::istream& in) {
  std::vector<long long> tokens;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw std::runtime_error("expected integer, got '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::runtime_error("expected integer, got '" + tok + "'");
    tokens.push_back(value);
  }
  return tokens;
}

// Reads the per-row column lists of an OR-library body starting at `pos`
// and transposes them into per-set element lists. Returns nullopt (with a
// reason) if the token stream does not match.
std::optional<std::vector<std::vector<int>>> try_orlib_rows(
    const std::vector<long long>& tokens, std::size_t pos, long long rows,
    long long cols, std::string* error) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(cols));
  for (long long r = 0; r < rows; ++r) {
    if (pos >= tokens.size()) {
      *error = "missing coverage count for row " + std::to_string(r + 1);
      return std::nullopt;
    }
    const long long count = tokens[pos++];
    if (count < 0 || count > cols) {
      *error = "bad coverage count for row " + std::to_string(r + 1);
      return std::nullopt;
    }
    for (long long c = 0; c < count; ++c) {
      if (pos >= tokens.size()) {
        *error = "truncated column list for row " + std::to_string(r + 1);
        return std::nullopt;
      }
      const long long col = tokens[pos++];
      if (col < 1 || col > cols) {
        *error = "column id " + std::to_string(col) + " out of range";
        return std::nullopt;
      }
      sets[static_cast<std::size_t>(col - 1)].push_back(static_cast<int>(r));
    }
  }
  if (pos != tokens.size()) {
    *error = "trailing tokens after last row";
    return std::nullopt;
  }
  return sets;
}

}  // namespace

bool CoverInstance::feasible() const {
  for (const auto& c : coverage)
    if (c.empty()) return false;
  return true;
}

double CoverInstance::density() const {
  if (n == 0 || m == 0) return 0.0;
  return static_cast<double>(relationships) /
         (static_cast<double>(n) * static_cast<double>(m));
}

bool CoverInstance::operator==(const CoverInstance& other) const {
  return n == other.n && m == other.m && sets == other.sets;
}

WeightVector uniform_weights(int n) {
  return WeightVector(static_cast<std::size_t>(n), 1.0);
}

CoverInstance from_sets(int n, const std::vector<std::vector<int>>& set_lists) {
  if (n < 0) throw std::invalid_argument("negative element count");
  CoverInstance inst;
  inst.n = n;
  inst.m = static_cast<int>(set_lists.size());
  inst.sets.resize(set_lists.size());
  inst.coverage.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < inst.m; ++i) {
    std::vector<int> s = set_lists[static_cast<std::size_t>(i)];
    std::sort(s.begin(), s.end());
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (s[t] < 0 || s[t] >= n)
        throw std::invalid_argument("element id " + std::to_string(s[t]) +
                                    " out of range in set " +
                                    std::to_string(i));
      if (t > 0 && s[t] == s[t - 1])
        throw std::invalid_argument("duplicate element " +
                                    std::to_string(s[t]) + " in set " +
                                    std::to_string(i));
    }
    inst.relationships += static_cast<long long>(s.size());
    inst.sets[static_cast<std::size_t>(i)] = std::move(s);
  }
  // Ascending i keeps each coverage list sorted.
  for (int i = 0; i < inst.m; ++i)
    for (int j : inst.sets[static_cast<std::size_t>(i)])
      inst.coverage[static_cast<std::size_t>(j)].push_back(i);
  return inst;
}

CoverInstance parse_orlib(std::istream& in, bool strict_unicost) {
  const std::vector<long long> tokens = read_integer_tokens(in);
  if (tokens.size() < 2) throw std::runtime_error("orlib: malformed header");
  const long long rows = tokens[0];
  const long long cols = tokens[1];
  if (rows < 0 || cols < 0 || rows > kMaxDimension || cols > kMaxDimension)
    throw std::runtime_error("orlib: malformed header");

  // Published unicost files ship in the costed container format, so the
  // costed interpretation is tried first.
  std::string costed_error;
  if (tokens.size() >= 2 + static_cast<std::size_t>(cols)) {
    auto sets = try_orlib_rows(tokens, 2 + static_cast<std::size_t>(cols),
                               rows, cols, &costed_error);
    if (sets) {
      if (strict_unicost) {
        for (long long c = 0; c < cols; ++c)
          if (tokens[2 + static_cast<std::size_t>(c)] != tokens[2])
            throw std::runtime_error("orlib: nonuniform costs");
      }
      return from_sets(static_cast<int>(rows), *sets);
    }
  } else {
    costed_error = "not enough tokens for a cost block";
  }

  std::string plain_error;
  auto sets = try_orlib_rows(tokens, 2, rows, cols, &plain_error);
  if (sets) return from_sets(static_cast<int>(rows), *sets);

  throw std::runtime_error("orlib: with cost block: " + costed_error +
                           "; without: " + plain_error);
}

CoverInstance parse_orlib(const std::string& text, bool strict_unicost) {
  std::istringstream in(text);
  return parse_orlib(in, strict_unicost);
}

CoverInstance parse_canonical(std::istream& in) {
  std::string magic;
  if (!(in >> magic) || magic != "SETCOVER")
    throw std::runtime_error("canonical: missing SETCOVER header");
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0 || n > kMaxDimension ||
      m > kMaxDimension)
    throw std::runtime_error("canonical: malformed header");
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long count = 0;
    if (!(in >> count) || count < 0 || count > n)
      throw std::runtime_error("canonical: bad size for set " +
                               std::to_string(i));
    auto& s = sets[static_cast<std::size_t>(i)];
    s.reserve(static_cast<std::size_t>(count));
    for (long long t = 0; t < count; ++t) {
      long long e = 0;
      if (!(in >> e))
        throw std::runtime_error("canonical: truncated set " +
                                 std::to_string(i));
      if (e < 0 || e >= n)
        throw std::runtime_error("canonical: element id " + std::to_string(e) +
                                 " out of range");
      s.push_back(static_cast<int>(e));
    }
  }
  std::string extra;
  if (in >> extra)
    throw std::runtime_error("canonical: trailing content '" + extra + "'");
  return from_sets(static_cast<int>(n), sets);
}

CoverInstance parse_canonical(const std::string& text) {
  std::istringstream in(text);
  return parse_canonical(in);
}

void write_canonical(const CoverInstance& inst, std::ostream& out) {
  out << "SETCOVER " << inst.n << ' ' << inst.m << '\n';
  for (const auto& s : inst.sets) {
    out << s.size();
    for (int e : s) out << ' ' << e;
    out << '\n';
  }
}

std::string write_canonical(const CoverInstance& inst) {
  std::ostringstream out;
  write_canonical(inst, out);
  return out.str();
}

CoverInstance parse_auto(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream sniff(text);
  std::string first;
  sniff >> first;
  if (first == "SETCOVER") return parse_canonical(text);
  return parse_orlib(text);
}

CoverInstance random_instance(int n, int m, double density,
                              std::uint64_t seed) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("random_instance: n and m must be >= 1");
  if (!(density > 0.0) || density > 1.0)
    throw std::invalid_argument("random_instance: density must be in (0,1]");
  const int per_set = static_cast<int>(std::lround(density * n));
  if (per_set < 1)
    throw std::invalid_argument(
        "random_instance: density*n rounds to zero elements per set");

  std::mt19937_64 rng = make_rng(seed);
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(m));
  std::vector<std::uint8_t> mark(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < m; ++i) {
    auto& s = sets[static_cast<std::size_t>(i)];
    s.reserve(static_cast<std::size_t>(per_set));
    // Floyd's sampling: per_set distinct ids in [0, n).
    for (int j = n - per_set; j < n; ++j) {
      std::uniform_int_distribution<int> pick(0, j);
      int t = pick(rng);
      if (mark[static_cast<std::size_t>(t)]) t = j;
      mark[static_cast<std::size_t>(t)] = 1;
      s.push_back(t);
    }
    for (int e : s) {
      mark[static_cast<std::size_t>(e)] = 0;
      covered[static_cast<std::size_t>(e)] = 1;
    }
  }
  std::uniform_int_distribution<int> any_set(0, m - 1);
  for (int j = 0; j < n; ++j)
    if (!covered[static_cast<std::size_t>(j)])
      sets[static_cast<std::size_t>(any_set(rng))].push_back(j);
  return from_sets(n, sets);
}

CoverInstance trap_instance() {
  return from_sets(6, {{0, 1, 3, 4}, {0, 1, 2}, {3, 4, 5}});
}

CoverInstance permute_instance_sets(const CoverInstance& inst,
                                    const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != inst.m)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint8_t> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= inst.m || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("not a permutation of the set ids");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<std::vector<int>> sets(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    sets[i] = inst.sets[static_cast<std::size_t>(perm[i])];
  return from_sets(inst.n, sets);
}

std::vector<int> random_permutation(int m, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace setcover
