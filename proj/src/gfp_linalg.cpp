#include "froblab/gfp_linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "froblab/errors.hpp"

namespace froblab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidParameters("modulus " + std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) {
    throw InvalidParameters("prime " + std::to_string(p) + " exceeds the supported bound 2^15");
  }
}

Residue reduce_mod(std::int64_t value, Residue p) {
  auto r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue inverse_mod(Residue a, Residue p) {
  if (a % p == 0) throw Error("zero has no inverse mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

GfpMatrix::GfpMatrix(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GfpMatrix GfpMatrix::identity(Residue p, std::size_t n) {
  GfpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
  return m;
}

GfpMatrix GfpMatrix::from_rows(Residue p, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  GfpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void GfpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  data_[r * cols_ + c] = reduce_mod(value, p_);
}

bool GfpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue e) { return e == 0; });
}

GfpMatrix GfpMatrix::transpose() const {
  GfpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

GfpMatrix GfpMatrix::operator*(const GfpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw DimensionMismatch("matrix product shape");
  GfpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      auto src = rhs.row(k);
      auto dst = out.row(r);
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        dst[c] = static_cast<Residue>((dst[c] + a * src[c]) % p_);
      }
    }
  }
  return out;
}

std::vector<Residue> GfpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product shape");
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{(*this)(r, c)} * v[c]) % p_;
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

GfpMatrix GfpMatrix::stacked(const GfpMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_ || below.p_ != p_) throw DimensionMismatch("stacking shape");
  GfpMatrix out(p_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

RrefResult rref(const GfpMatrix& m) {
  RrefResult result{m, 0, {}};
  GfpMatrix& a = result.reduced;
  const Residue p = a.prime();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      auto r1 = a.row(sel);
      auto r2 = a.row(pivot_row);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    auto prow = a.row(pivot_row);
    const std::uint64_t inv = inverse_mod(prow[col], p);
    for (auto& e : prow) e = static_cast<Residue>(e * inv % p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      auto row = a.row(r);
      const std::uint64_t factor = row[col];
      if (factor == 0) continue;
      const std::uint64_t neg = p - factor;
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (prow[c] != 0) row[c] = static_cast<Residue>((row[c] + neg * prow[c]) % p);
      }
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  result.rank = pivot_row;
  return result;
}

std::size_t rank(const GfpMatrix& m) { return rref(m).rank; }

namespace {

GfpMatrix take_rows(const GfpMatrix& m, std::size_t count) {
  GfpMatrix out(m.prime(), count, m.cols());
  for (std::size_t r = 0; r < count; ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

}  // namespace

Subspace::Subspace(GfpMatrix basis, std::size_t ambient_dim, std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(Residue p, std::size_t ambient_dim) {
  return Subspace(GfpMatrix(p, 0, ambient_dim), ambient_dim, {});
}

Subspace Subspace::full(Residue p, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(GfpMatrix::identity(p, ambient_dim), ambient_dim, std::move(piv));
}

Subspace Subspace::span(const GfpMatrix& generators) {
  auto r = rref(generators);
  return Subspace(take_rows(r.reduced, r.rank), generators.cols(), std::move(r.pivots));
}

Subspace Subspace::span(Residue p, std::size_t ambient_dim,
                        const std::vector<std::vector<Residue>>& vectors) {
  GfpMatrix m(p, vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw DimensionMismatch("vector length");
    std::copy(vectors[r].begin(), vectors[r].end(), m.row(r).begin());
  }
  return span(m);
}

std::vector<Residue> Subspace::residual(std::span<const Residue> v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient");
  const Residue p = prime();
  std::vector<Residue> out(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const std::uint64_t factor = out[pivots_[r]];
    if (factor == 0) continue;
    const std::uint64_t neg = p - factor;
    auto b = basis_.row(r);
    for (std::size_t c = pivots_[r]; c < ambient_dim_; ++c) {
      if (b[c] != 0) out[c] = static_cast<Residue>((out[c] + neg * b[c]) % p);
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Residue> v) const {
  auto r = residual(v);
  return std::all_of(r.begin(), r.end(), [](Residue e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("ambient dimensions differ");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto ra = a.basis_.row(r);
    auto rb = b.basis_.row(r);
    if (!std::equal(ra.begin(), ra.end(), rb.begin())) {
      return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    }
  }
  return false;
}

Subspace kernel_basis(const GfpMatrix& m) {
  const Residue p = m.prime();
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1 % p;
    for (std::size_t k = 0; k < r.rank; ++k) {
      const Residue e = r.reduced(k, free);
      v[r.pivots[k]] = e == 0 ? 0 : p - e;
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(p, m.cols(), vecs);
}

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspaces live in ambient spaces of different dimension");
  }
  if (a.prime() != b.prime()) throw DimensionMismatch("subspaces over different primes");
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return Subspace::span(a.basis().stacked(b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const Residue p = a.prime();
  const std::size_t n = a.ambient_dim();
  const std::size_t ka = a.dim();
  const std::size_t kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace::zero(p, n);
  // Columns are the basis vectors of a and the negated basis vectors of b;
  // a kernel vector (u, v) gives u*A = v*B.
  GfpMatrix sys(p, n, ka + kb);
  for (std::size_t i = 0; i < ka; ++i) {
    for (std::size_t c = 0; c < n; ++c) sys.set(c, i, a.basis()(i, c));
  }
  for (std::size_t j = 0; j < kb; ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      sys.set(c, ka + j, -static_cast<std::int64_t>(b.basis()(j, c)));
    }
  }
  const auto ker = kernel_basis(sys);
  std::vector<std::vector<Residue>> vecs;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    std::vector<Residue> v(n, 0);
    for (std::size_t i = 0; i < ka; ++i) {
      const std::uint64_t coef = ker.basis()(k, i);
      if (coef == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        v[c] = static_cast<Residue>((v[c] + coef * a.basis()(i, c)) % p);
      }
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(p, n, vecs);
}

Subspace image_of(const GfpMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionMismatch("image: shape");
  std::vector<std::vector<Residue>> vecs;
  vecs.reserve(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) vecs.push_back(m.apply(s.basis().row(r)));
  return Subspace::span(m.prime(), m.rows(), vecs);
}

std::vector<Subspace> enumerate_subspaces(Residue p, std::size_t dim, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= p;
    if (total > cap) {
      throw CapacityExceeded("enumerating subspaces of F_" + std::to_string(p) + "^" +
                             std::to_string(dim) + " exceeds cap " + std::to_string(cap));
    }
  }
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= dim; ++k) {
    // Pivot sets in lexicographic order.
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_pivot(dim, false);
      for (auto c : piv) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = piv[r] + 1; c < dim; ++c) {
          if (!is_pivot[c]) free_slots.emplace_back(r, c);
        }
      }
      std::vector<Residue> digits(free_slots.size(), 0);
      while (true) {
        GfpMatrix basis(p, k, dim);
        for (std::size_t r = 0; r < k; ++r) basis.set(r, piv[r], 1);
        for (std::size_t s = 0; s < free_slots.size(); ++s) {
          basis.set(free_slots[s].first, free_slots[s].second, digits[s]);
        }
        out.push_back(Subspace::span(basis));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
      // Next combination.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == dim - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error("64-bit overflow in subspace count");
  }
  return a * b;
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  // Pascal-type recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (std::uint64_t j = std::min(m, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (std::uint64_t t = 0; t < j; ++t) qj = checked_mul(qj, q);
      const std::uint64_t add = checked_mul(qj, row[j]);
      if (row[j - 1] > std::numeric_limits<std::uint64_t>::max() - add) {
        throw Error("64-bit overflow in subspace count");
      }
      row[j] = row[j - 1] + add;
    }
  }
  return row[k];
}

std::uint64_t num_subspaces(std::uint64_t q, std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const auto g = gaussian_binomial(n, k, q);
    if (total > std::numeric_limits<std::uint64_t>::max() - g) {
      throw Error("64-bit overflow in subspace count");
    }
    total += g;
  }
  return total;
}

}  // namespace froblab
