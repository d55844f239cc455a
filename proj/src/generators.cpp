#include "o2n/generators.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>

#include "o2n/error.hpp"

namespace o2n {

std::string Gen::label() const { return "F(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Gen parse_gen(std::string_view s, int n) {
  auto bad = [&] { return ParseError("malformed generator label '" + std::string(s) + "', expected F(i,j)"); };
  std::string compact;
  for (char c : s)
    if (c != ' ') compact += c;
  std::string_view v = compact;
  if (v.size() < 6 || v.substr(0, 2) != "F(" || v.back() != ')') throw bad();
  v = v.substr(2, v.size() - 3);
  auto comma = v.find(',');
  if (comma == std::string_view::npos) throw bad();
  auto num = [&](std::string_view t) {
    int x = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc{} || p != t.data() + t.size() || t.empty()) throw bad();
    return x;
  };
  Gen g{num(v.substr(0, comma)), num(v.substr(comma + 1))};
  if (g.i == 0 || g.j == 0 || std::abs(g.i) > n || std::abs(g.j) > n)
    throw ParseError("generator " + g.label() + " out of range for n=" + std::to_string(n));
  return g;
}

int index_rank(int n, int i) { return i < 0 ? i + n : i + n - 1; }

const std::vector<Gen>& canonical_generators(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Gen>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> is, js;
  for (int i = 1; i <= n; ++i) is.push_back(i);
  for (int i = -n; i <= -1; ++i) is.push_back(i);
  for (int j = -n; j <= -1; ++j) js.push_back(j);
  for (int j = 1; j <= n; ++j) js.push_back(j);
  std::vector<Gen> out;
  std::map<Gen, bool> seen;
  for (int i : is)
    for (int j : js) {
      if (i == -j || seen.count({i, j})) continue;
      seen[{i, j}] = seen[{-j, -i}] = true;
      out.push_back({i, j});
    }
  return cache.emplace(n, std::move(out)).first->second;
}

std::optional<CanonicalRef> canonical_ref(int n, Gen g) {
  if (g.i == -g.j) return std::nullopt;
  const auto& gens = canonical_generators(n);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (gens[a] == g) return CanonicalRef{a, 1};
    if (gens[a] == Gen{-g.j, -g.i}) return CanonicalRef{a, -1};
  }
  throw ParseError("generator " + g.label() + " out of range for n=" + std::to_string(n));
}

std::vector<int> root(int n, Gen g) {
  std::vector<int> r(n, 0);
  r[std::abs(g.i) - 1] += g.i > 0 ? 1 : -1;
  r[std::abs(g.j) - 1] -= g.j > 0 ? 1 : -1;
  return r;
}

}  // namespace o2n
