#include "froblab/polyfp.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "froblab/errors.hpp"
#include "froblab/macaulay.hpp"

namespace froblab {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t n_vars, std::size_t j, std::uint32_t power) {
  Monomial m(n_vars);
  m.exps_.at(j) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw DimensionMismatch("monomial arity");
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] > other.exps_[j]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw DimensionMismatch("monomial arity");
  Monomial out(*this);
  for (std::size_t j = 0; j < exps_.size(); ++j) out.exps_[j] += other.exps_[j];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw Error("monomial division is not exact");
  Monomial out(*this);
  for (std::size_t j = 0; j < exps_.size(); ++j) out.exps_[j] -= other.exps_[j];
  return out;
}

Monomial Monomial::pow(std::uint32_t k) const {
  Monomial out(*this);
  for (auto& e : out.exps_) e *= k;
  return out;
}

Monomial Monomial::radical() const {
  Monomial out(*this);
  for (auto& e : out.exps_) e = e > 0 ? 1 : 0;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("monomial arity");
  Monomial out(a);
  for (std::size_t j = 0; j < a.n_vars(); ++j) out.exps_[j] = std::max(a.exps_[j], b.exps_[j]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("monomial arity");
  Monomial out(a);
  for (std::size_t j = 0; j < a.n_vars(); ++j) out.exps_[j] = std::min(a.exps_[j], b.exps_[j]);
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(j);
    if (exps_[j] > 1) s += "^" + std::to_string(exps_[j]);
  }
  return s.empty() ? "1" : s;
}

// ------------------------------------------------------------ PolynomialFp

PolynomialFp PolynomialFp::constant(Residue p, std::size_t n_vars, std::int64_t c) {
  PolynomialFp out(p, n_vars);
  out.add_term(Monomial(n_vars), c);
  return out;
}

PolynomialFp PolynomialFp::monomial(Residue p, const Monomial& m, std::int64_t c) {
  PolynomialFp out(p, m.n_vars());
  out.add_term(m, c);
  return out;
}

PolynomialFp PolynomialFp::variable(Residue p, std::size_t n_vars, std::size_t j) {
  return monomial(p, Monomial::variable(n_vars, j));
}

Residue PolynomialFp::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void PolynomialFp::add_term(const Monomial& m, std::int64_t c) {
  if (m.n_vars() != n_vars_) throw DimensionMismatch("term has wrong number of variables");
  const Residue r = reduce_mod(c, p_);
  if (r == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, r);
  if (!inserted) {
    it->second = static_cast<Residue>((it->second + r) % p_);
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint64_t PolynomialFp::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool PolynomialFp::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

void PolynomialFp::require_compatible(const PolynomialFp& o) const {
  if (o.p_ != p_ || o.n_vars_ != n_vars_) {
    throw DimensionMismatch("polynomials over different rings");
  }
}

PolynomialFp PolynomialFp::operator+(const PolynomialFp& o) const {
  require_compatible(o);
  PolynomialFp out(*this);
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

PolynomialFp PolynomialFp::operator-(const PolynomialFp& o) const {
  require_compatible(o);
  PolynomialFp out(*this);
  for (const auto& [m, c] : o.terms_) out.add_term(m, static_cast<std::int64_t>(p_ - c));
  return out;
}

PolynomialFp PolynomialFp::operator*(const PolynomialFp& o) const {
  require_compatible(o);
  PolynomialFp out(p_, n_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      out.add_term(ma * mb, static_cast<std::int64_t>(std::uint64_t{ca} * cb % p_));
    }
  }
  return out;
}

PolynomialFp PolynomialFp::operator*(const Monomial& m) const {
  PolynomialFp out(p_, n_vars_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
  return out;
}

PolynomialFp PolynomialFp::scaled(std::int64_t c) const {
  const Residue r = reduce_mod(c, p_);
  PolynomialFp out(p_, n_vars_);
  if (r == 0) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace(m, static_cast<Residue>(std::uint64_t{a} * r % p_));
  return out;
}

PolynomialFp PolynomialFp::pow(std::uint64_t k) const {
  PolynomialFp result = constant(p_, n_vars_, 1);
  PolynomialFp base(*this);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

PolynomialFp PolynomialFp::frobenius(std::uint64_t q) const {
  require_power_of(q, p_);
  PolynomialFp out(p_, n_vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.pow(static_cast<std::uint32_t>(q)), c);
  return out;
}

std::string PolynomialFp::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (m.is_one()) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += m.to_string();
    }
  }
  return s;
}

// ------------------------------------------------------------------ parser

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, Residue p, std::size_t n_vars)
      : text_(text), p_(p), n_vars_(n_vars) {}

  PolynomialFp parse() {
    PolynomialFp out(p_, n_vars_);
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coef, mono] = term();
      out.add_term(mono, sign * static_cast<std::int64_t>(coef));
      first = false;
      skip_ws();
    }
    return out;
  }

  /// Largest variable index referenced, or -1.
  static long max_index(const std::string& text) {
    long best = -1;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c != 'x' && c != 'y' && c != 'z' && c != 'w') continue;
      if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        std::size_t j = i + 1;
        long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          v = v * 10 + (text[j] - '0');
          ++j;
        }
        best = std::max(best, v);
        i = j - 1;
      } else {
        best = std::max(best, letter_index(c));
      }
    }
    return best;
  }

 private:
  static long letter_index(char c) {
    switch (c) {
      case 'x': return 0;
      case 'y': return 1;
      case 'z': return 2;
      default: return 3;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + text_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::uint64_t{1} << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  std::pair<std::uint64_t, Monomial> term() {
    std::uint64_t coef = 1;
    Monomial mono(n_vars_);
    bool any = false;
    while (true) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef = coef * (number() % p_) % p_;
      } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
        ++pos_;
        long idx = letter_index(c);
        if (c == 'x' && std::isdigit(static_cast<unsigned char>(peek()))) {
          idx = static_cast<long>(number());
        }
        if (static_cast<std::size_t>(idx) >= n_vars_) fail("variable index out of range");
        skip_ws();
        std::uint64_t power = 1;
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          power = number();
        }
        mono = mono * Monomial::variable(n_vars_, static_cast<std::size_t>(idx),
                                         static_cast<std::uint32_t>(power));
      } else {
        fail("expected a coefficient or variable");
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      // Implicit product such as "2x0" or "x y".
      const char n = peek();
      if (std::isdigit(static_cast<unsigned char>(n)) || n == 'x' || n == 'y' || n == 'z' ||
          n == 'w') {
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {coef, mono};
  }

  const std::string& text_;
  Residue p_;
  std::size_t n_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::size_t infer_variable_count(const std::string& text) {
  return static_cast<std::size_t>(PolyParser::max_index(text) + 1);
}

PolynomialFp parse_polynomial(const std::string& text, Residue p, std::size_t n_vars) {
  require_prime(p);
  const std::size_t needed = infer_variable_count(text);
  if (n_vars == 0) n_vars = needed;
  if (needed > n_vars) throw ParseError("polynomial uses more than " + std::to_string(n_vars) + " variables");
  return PolyParser(text, p, n_vars).parse();
}

void require_power_of(std::uint64_t q, std::uint64_t p) {
  if (q == 0) throw InvalidParameters("0 is not a power of " + std::to_string(p));
  std::uint64_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1) {
    throw InvalidParameters(std::to_string(q) + " is not a power of " + std::to_string(p));
  }
}

// ----------------------------------------------------------- MonomialIdeal

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n_vars, std::vector<Monomial> generators)
    : n_vars_(n_vars) {
  for (const auto& g : generators) {
    if (g.n_vars() != n_vars) throw DimensionMismatch("generator has wrong number of variables");
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::maximal(std::size_t n_vars) {
  std::vector<std::size_t> vars(n_vars);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  return generated_by_variables(n_vars, vars);
}

MonomialIdeal MonomialIdeal::generated_by_variables(std::size_t n_vars,
                                                    const std::vector<std::size_t>& vars) {
  std::vector<Monomial> gens;
  for (auto j : vars) gens.push_back(Monomial::variable(n_vars, j));
  return MonomialIdeal(n_vars, std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

bool MonomialIdeal::is_square_free() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_square_free(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::frobenius_power(std::uint64_t q, std::uint64_t p) const {
  require_power_of(q, p);
  std::vector<Monomial> gens;
  for (const auto& g : gens_) gens.push_back(g.pow(static_cast<std::uint32_t>(q)));
  return MonomialIdeal(n_vars_, std::move(gens));
}

std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (auto c = a.n_vars_ <=> b.n_vars_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.gens_.begin(), a.gens_.end(), b.gens_.begin(),
                                                b.gens_.end());
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("ideals in different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("ideals in different rings");
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("ideals in different rings");
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal monomial_colon(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.n_vars() != j.n_vars()) throw DimensionMismatch("ideals in different rings");
  const std::size_t n = i.n_vars();
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const auto& m : j.generators()) {
    std::vector<Monomial> gens;
    for (const auto& g : i.generators()) gens.push_back(g / gcd(g, m));
    result = ideal_intersection(result, MonomialIdeal(n, std::move(gens)));
  }
  return result;
}

std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& squarefree) {
  if (!squarefree.is_square_free()) {
    throw UnsupportedInput("minimal primes are computed for square-free monomial ideals only");
  }
  const std::size_t n = squarefree.n_vars();
  if (squarefree.is_unit()) return {};
  if (n > 24) throw CapacityExceeded("too many variables for minimal-prime enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& g : squarefree.generators()) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (g[v] > 0) s |= 1u << v;
    }
    supports.push_back(s);
  }
  // Minimal transversals of the support hypergraph, by increasing size.
  std::vector<std::uint32_t> covers;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  std::vector<std::uint32_t> order(limit);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (auto c : order) {
    const bool hits = std::all_of(supports.begin(), supports.end(),
                                  [c](std::uint32_t s) { return (s & c) != 0; });
    if (!hits) continue;
    const bool minimal = std::none_of(covers.begin(), covers.end(),
                                      [c](std::uint32_t d) { return (d & ~c) == 0; });
    if (minimal) covers.push_back(c);
  }
  std::vector<MonomialIdeal> out;
  for (auto c : covers) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < n; ++v) {
      if ((c >> v) & 1u) vars.push_back(v);
    }
    out.push_back(MonomialIdeal::generated_by_variables(n, vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------- GradedIdealBasis

GradedIdealBasis::GradedIdealBasis(Residue p, std::size_t n_vars,
                                   std::vector<PolynomialFp> generators, std::uint64_t degree_cap)
    : p_(p), n_vars_(n_vars), degree_cap_(degree_cap) {
  for (auto& g : generators) {
    if (g.prime() != p || g.n_vars() != n_vars) {
      throw DimensionMismatch("generator lives in a different ring");
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool GradedIdealBasis::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const PolynomialFp& g) { return g.is_homogeneous(); });
}

GradedIdealBasis GradedIdealBasis::frobenius_power(std::uint64_t q) const {
  require_power_of(q, p_);
  std::vector<PolynomialFp> gens;
  for (const auto& g : gens_) gens.push_back(g.frobenius(q));
  return GradedIdealBasis(p_, n_vars_, std::move(gens), degree_cap_ * q);
}

bool ideal_membership_bounded(const PolynomialFp& r, const GradedIdealBasis& ideal,
                              std::uint64_t degree_cap) {
  if (r.prime() != ideal.prime() || r.n_vars() != ideal.n_vars()) {
    throw DimensionMismatch("polynomial and ideal live in different rings");
  }
  if (!r.is_homogeneous() || !ideal.is_homogeneous()) {
    throw UnsupportedInput("bounded membership is exact only for homogeneous input");
  }
  if (r.is_zero()) return true;
  const auto d = r.total_degree();
  if (d > degree_cap) {
    throw DegreeOverflow("degree " + std::to_string(d) + " exceeds cap " + std::to_string(degree_cap));
  }
  return GradedPiece(ideal, d).contains(r);
}

std::optional<Monomial> monomial_split(const Monomial& m, std::uint32_t p) {
  std::vector<std::uint32_t> exps(m.n_vars());
  for (std::size_t j = 0; j < m.n_vars(); ++j) {
    if (m[j] % p != 0) return std::nullopt;
    exps[j] = m[j] / p;
  }
  return Monomial(std::move(exps));
}

PolynomialFp standard_monomial_splitting(const PolynomialFp& r) {
  PolynomialFp out(r.prime(), r.n_vars());
  for (const auto& [m, c] : r.terms()) {
    if (auto s = monomial_split(m, r.prime())) out.add_term(*s, c);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n_vars, std::uint64_t d) {
  std::vector<Monomial> out;
  if (n_vars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(n_vars, 0);
  // Descending lex: first exponent as large as possible.
  auto rec = [&](auto&& self, std::size_t j, std::uint64_t left) -> void {
    if (j + 1 == n_vars) {
      e[j] = static_cast<std::uint32_t>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t a = left + 1; a-- > 0;) {
      e[j] = static_cast<std::uint32_t>(a);
      self(self, j + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace froblab
