#include "alexq/polymod.hpp"

#include <algorithm>

#include "alexq/error.hpp"
#include "parse_util.hpp"

namespace alexq {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw InvalidArgument("no inverse of " + std::to_string(a) + " modulo " + std::to_string(p));
}

void same_modulus(const PolyOverZp& a, const PolyOverZp& b) {
  if (a.modulus() != b.modulus())
    throw InvalidArgument("polynomial modulus mismatch: " + std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
}

std::string term(int coeff, int power) {
  std::string s;
  if (coeff != 1 || power == 0) s += std::to_string(coeff);
  if (power >= 1) s += "t";
  if (power >= 2) s += "^" + std::to_string(power);
  return s;
}

// Monic polynomials of the given degree with nonzero constant term, in PolyOverZp order.
std::vector<PolyOverZp> unit_monics(int p, int degree) {
  std::vector<PolyOverZp> out;
  if (degree < 1) return out;
  std::vector<int> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  c.front() = 1;
  while (true) {
    out.emplace_back(p, c);
    // Increment coefficients 0..degree-1, with c0 running over 1..p-1 and the rest over 0..p-1.
    std::size_t i = 0;
    for (; i < static_cast<std::size_t>(degree); ++i) {
      if (++c[i] < p) break;
      c[i] = i == 0 ? 1 : 0;
    }
    if (i == static_cast<std::size_t>(degree)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void chains(int p, int remaining, const std::vector<PolyOverZp>& prefix, std::vector<std::vector<PolyOverZp>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  const int min_degree = prefix.empty() ? 1 : prefix.back().degree();
  for (int deg = min_degree; deg <= remaining; ++deg) {
    for (auto& h : unit_monics(p, deg)) {
      if (!prefix.empty() && !poly_divides(prefix.back(), h)) continue;
      auto next = prefix;
      next.push_back(std::move(h));
      chains(p, remaining - deg, next, out);
    }
  }
}

}  // namespace

PolyOverZp::PolyOverZp(int p, std::vector<int> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (!is_prime(p)) throw InvalidArgument("polynomial modulus must be prime, got " + std::to_string(p));
  for (auto& c : coeffs_) c = ((c % p) + p) % p;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t PolyOverZp::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](int c) { return c != 0; }));
}

std::strong_ordering operator<=>(const PolyOverZp& a, const PolyOverZp& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.coeffs_ <=> b.coeffs_;
}

std::string PolyOverZp::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += "+";
    s += term(coeffs_[i], static_cast<int>(i));
  }
  return s;
}

std::string PolyOverZp::to_string_descending() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += "+";
    s += term(coeffs_[i], static_cast<int>(i));
  }
  return s;
}

PolyOverZp PolyOverZp::parse(int p, std::string_view text) {
  const auto body = detail::trim(text);
  if (body.empty()) throw ParseError("empty polynomial");
  std::vector<int> coeffs;
  for (const auto& raw : detail::split(body, '+')) {
    auto t = detail::trim(raw);
    if (t.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");
    int coeff = 1;
    int power = 0;
    const auto tpos = t.find('t');
    std::string_view coeff_part = tpos == std::string_view::npos ? t : t.substr(0, tpos);
    if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part.remove_suffix(1);
    if (!coeff_part.empty() && !detail::parse_int(coeff_part, coeff))
      throw ParseError("invalid coefficient '" + std::string(coeff_part) + "' in polynomial '" + std::string(text) + "'");
    if (tpos != std::string_view::npos) {
      power = 1;
      auto rest = t.substr(tpos + 1);
      if (!rest.empty()) {
        if (rest.front() != '^' || !detail::parse_int(rest.substr(1), power) || power < 0)
          throw ParseError("invalid power '" + std::string(rest) + "' in polynomial '" + std::string(text) + "'");
      }
    }
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1, 0);
    coeffs[static_cast<std::size_t>(power)] += coeff;
  }
  return PolyOverZp(p, std::move(coeffs));
}

PolyOverZp poly_add(const PolyOverZp& a, const PolyOverZp& b) {
  same_modulus(a, b);
  std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return PolyOverZp(a.modulus(), std::move(c));
}

PolyOverZp poly_sub(const PolyOverZp& a, const PolyOverZp& b) {
  same_modulus(a, b);
  std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return PolyOverZp(a.modulus(), std::move(c));
}

PolyOverZp poly_mul(const PolyOverZp& a, const PolyOverZp& b) {
  same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return PolyOverZp::zero(a.modulus());
  const int p = a.modulus();
  std::vector<int> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = (c[i + j] + a.coeffs()[i] * b.coeffs()[j]) % p;
  return PolyOverZp(p, std::move(c));
}

std::pair<PolyOverZp, PolyOverZp> poly_divmod(const PolyOverZp& a, const PolyOverZp& m) {
  same_modulus(a, m);
  if (m.is_zero()) throw InvalidArgument("polynomial division by zero");
  const int p = a.modulus();
  std::vector<int> rem = a.coeffs();
  std::vector<int> quot(rem.size() >= m.coeffs().size() ? rem.size() - m.coeffs().size() + 1 : 0, 0);
  const int lead_inv = inverse_mod(m.coeffs().back(), p);
  const std::size_t md = m.coeffs().size() - 1;
  for (std::size_t i = rem.size(); i-- > md;) {
    const int q = (rem[i] * lead_inv) % p;
    if (q == 0) continue;
    quot[i - md] = q;
    for (std::size_t j = 0; j <= md; ++j) rem[i - md + j] = ((rem[i - md + j] - q * m.coeffs()[j]) % p + p) % p;
  }
  return {PolyOverZp(p, std::move(quot)), PolyOverZp(p, std::move(rem))};
}

PolyOverZp poly_mod(const PolyOverZp& a, const PolyOverZp& m) { return poly_divmod(a, m).second; }

bool poly_divides(const PolyOverZp& d, const PolyOverZp& a) { return poly_mod(a, d).is_zero(); }

int PolySpec::total_degree() const {
  int total = 0;
  for (const auto& h : chain) total += h.degree();
  return total;
}

std::string PolySpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += " | ";
    s += chain[i].to_string();
  }
  return s;
}

std::string PolySpec::label() const {
  if (chain.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < chain.size();) {
    std::size_t j = i;
    while (j < chain.size() && chain[j] == chain[i]) ++j;
    const std::string name = "Λ" + std::to_string(p) + "/" + chain[i].to_string_descending();
    if (!s.empty()) s += "⊕";
    s += j - i == 1 ? name : "(" + name + ")^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

PolySpec PolySpec::parse(int p, std::string_view text) {
  PolySpec spec;
  spec.p = p;
  for (const auto& field : detail::split(detail::trim(text), '|')) spec.chain.push_back(PolyOverZp::parse(p, field));
  try {
    validate(spec);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return spec;
}

void validate(const PolySpec& spec) {
  for (std::size_t i = 0; i < spec.chain.size(); ++i) {
    const auto& h = spec.chain[i];
    if (h.modulus() != spec.p) throw InvalidArgument("chain polynomial has the wrong modulus");
    if (h.degree() < 1) throw InvalidArgument("chain polynomial " + h.to_string() + " must have positive degree");
    if (!h.is_monic()) throw InvalidArgument("chain polynomial " + h.to_string() + " is not monic");
    if (h.coeff(0) == 0) throw InvalidArgument("chain polynomial " + h.to_string() + " has zero constant term");
    if (i > 0 && !poly_divides(spec.chain[i - 1], h))
      throw InvalidArgument(spec.chain[i - 1].to_string() + " does not divide " + h.to_string());
  }
}

std::vector<PolySpec> enumerate_specs(int p, int total_degree) {
  if (!is_prime(p)) throw InvalidArgument("modulus must be prime, got " + std::to_string(p));
  if (total_degree < 1) throw InvalidArgument("total degree must be positive");
  std::vector<std::vector<PolyOverZp>> found;
  chains(p, total_degree, {}, found);
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<PolySpec> out;
  for (auto& c : found) out.push_back(PolySpec{p, std::move(c)});
  return out;
}

LambdaModule build(const PolySpec& spec) {
  validate(spec);
  const int p = spec.p;
  const int dim = spec.total_degree();
  const AbelianGroup group(std::vector<int>(static_cast<std::size_t>(dim), p));
  std::vector<GroupElement> images;
  int offset = 0;
  for (const auto& h : spec.chain) {
    const int d = h.degree();
    for (int j = 0; j < d; ++j) {
      GroupElement img = group.zero();
      if (j + 1 < d) {
        img.coords[static_cast<std::size_t>(offset + j + 1)] = 1;
      } else {
        // t·t^{d-1} = t^d ≡ −(h_0 + h_1 t + ... + h_{d-1} t^{d-1})
        for (int k = 0; k < d; ++k) img.coords[static_cast<std::size_t>(offset + k)] = (p - h.coeff(static_cast<std::size_t>(k))) % p;
      }
      images.push_back(std::move(img));
    }
    offset += d;
  }
  return LambdaModule(Automorphism(group, std::move(images)));
}

PolySpec match_spec(const LambdaModule& module) {
  int p = 0;
  if (!module.group().is_elementary(&p))
    throw InvalidArgument("module carrier " + module.group().to_string() + " is not elementary abelian");
  for (auto& spec : enumerate_specs(p, static_cast<int>(module.group().rank())))
    if (is_lambda_isomorphic(build(spec), module)) return spec;
  throw InternalError("no polynomial chain matches module " + module.to_string());
}

}  // namespace alexq
