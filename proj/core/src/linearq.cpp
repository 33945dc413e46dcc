#include "alexq/linearq.hpp"

#include <numeric>

#include "alexq/error.hpp"
#include "parse_util.hpp"

namespace alexq {

namespace {

void require_unit(int n, int a) {
  if (n < 1) throw InvalidArgument("modulus must be positive, got " + std::to_string(n));
  if (a < 0 || a >= n) throw InvalidArgument("multiplier " + std::to_string(a) + " outside [0," + std::to_string(n) + ")");
  if (std::gcd(a, n) != 1) throw InvalidArgument(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
}

}  // namespace

LinearQuandleSpec::LinearQuandleSpec(int n_, int a_) : n(n_), a(a_) { require_unit(n, a); }

LinearQuandleSpec LinearQuandleSpec::parse(std::string_view text) {
  const auto body = detail::trim(text);
  if (body.empty() || body.front() != 'L') throw ParseError("linear spec must start with 'L': '" + std::string(text) + "'");
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) throw ParseError("linear spec needs the form L<n>/<a>: '" + std::string(text) + "'");
  int n = 0;
  int a = 0;
  if (!detail::parse_int(body.substr(1, slash - 1), n)) throw ParseError("invalid modulus in '" + std::string(text) + "'");
  if (!detail::parse_int(body.substr(slash + 1), a)) throw ParseError("invalid multiplier in '" + std::string(text) + "'");
  try {
    return LinearQuandleSpec(n, a);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

int capital_n(int n, int a) {
  require_unit(n, a);
  const int diff = ((1 - a) % n + n) % n;
  return n / std::gcd(n, diff);  // std::gcd(n, 0) == n
}

bool linear_isomorphic(int n, int a, int b) {
  const int na = capital_n(n, a);
  const int nb = capital_n(n, b);
  return na == nb && (a - b) % na == 0;
}

std::vector<std::vector<int>> classify_linear(int n) {
  if (n < 1) throw InvalidArgument("modulus must be positive");
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    bool placed = false;
    for (auto& cls : classes) {
      if (linear_isomorphic(n, cls.front(), a)) {
        cls.push_back(a);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({a});
  }
  return classes;
}

LambdaModule build_linear(const LinearQuandleSpec& spec) {
  const AbelianGroup group = spec.n == 1 ? AbelianGroup() : AbelianGroup({spec.n});
  return LambdaModule(Automorphism(Endomorphism::scalar(group, spec.a)));
}

}  // namespace alexq
