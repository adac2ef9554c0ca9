#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "staircase/rational.hpp"
#include "staircase/tableau.hpp"

namespace staircase::testing {

inline Rational Q(const char* text) { return parse_rational(text); }

/// Reference tableau of size 7 with weight alpha^2 beta^3 gamma^3 delta^2.
inline const char* kExampleFourSymbol = "7\nA..G..A\n.....D\n..B.G\n...D\n..B\n.G\nB\n";
/// The same tableau with gamma -> alpha and delta -> beta.
inline const char* kExampleAlphaBeta = "7\nA..A..A\n.....B\n..B.A\n...B\n..B\n.A\nB\n";

inline std::string read_golden(const std::string& name) {
  const std::string path = std::string(STAIRCASE_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing golden file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Random nonnegative rational p/q with 0 <= p <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_positive_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace staircase::testing
