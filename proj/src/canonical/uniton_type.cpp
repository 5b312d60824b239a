#include "uniton/canonical/uniton_type.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "uniton/errors.hpp"

namespace uniton::canonical {

UnitonType::UnitonType(std::vector<int> v) : v_(std::move(v)) {
  if (v_.empty()) throw InputError("uniton type must have at least one entry");
  if (v_.back() != 0) throw InputError("uniton type must end in 0, got " + str());
  for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
    int step = v_[i] - v_[i + 1];
    if (step != 0 && step != 1)
      throw InputError("uniton type steps must be 0 or 1, got " + str());
  }
  a_.assign(static_cast<std::size_t>(k()) + 1, 0);
  for (int x : v_) ++a_[static_cast<std::size_t>(k() - x)];
}

UnitonType UnitonType::parse(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad uniton type '" + text + "'");
    }
  }
  return UnitonType(v);
}

std::string UnitonType::str() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
  return s;
}

bool profile_allows(const UnitonType& t, int level, int r, int c) { return t.block(c) - t.block(r) > level; }

std::pair<int, int> profile_violation(const UnitonType& t, int level, const RatMatrix& m) {
  if (m.rows() != t.n() || m.cols() != t.n()) throw InputError("matrix size does not match the type");
  for (int r = 0; r < t.n(); ++r)
    for (int c = 0; c < t.n(); ++c)
      if (!m(r, c).is_zero() && !profile_allows(t, level, r, c)) return {r, c};
  return {-1, -1};
}

bool in_profile(const UnitonType& t, int level, const RatMatrix& m) {
  return profile_violation(t, level, m).first < 0;
}

std::vector<UnitonType> enumerate_types(int n) {
  if (n < 1) throw InputError("enumerate_types needs n >= 1");
  std::vector<UnitonType> out;
  // bit j of mask (from the top) set means a unit step between v_j and v_{j+1}
  int steps = n - 1;
  for (long mask = (1L << steps) - 1; mask >= 0; --mask) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (int j = n - 2; j >= 0; --j) {
      int bit = static_cast<int>((mask >> (steps - 1 - j)) & 1);
      v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j) + 1] + bit;
    }
    out.emplace_back(v);
  }
  std::sort(out.begin(), out.end(), [](const UnitonType& a, const UnitonType& b) { return a.v() > b.v(); });
  return out;
}

}  // namespace uniton::canonical
