#include "sdcodes/gmatrix.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "sdcodes/binomial.hpp"

namespace sdcodes {

namespace {

std::size_t checked_size(Residue p, unsigned lam, std::size_t cap) {
  const std::uint64_t n = checked_pow(p, lam);
  if (n > cap) {
    throw std::length_error("G_" + std::to_string(p) + "^" + std::to_string(lam) + " exceeds the size cap " +
                            std::to_string(cap));
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

MatrixFp build_g_direct(Residue p, unsigned lam, std::size_t cap) {
  const std::size_t n = checked_size(p, lam, cap);
  const LucasBinomial binom(p);
  MatrixFp g(p, n, n);
  for (std::size_t j = 1; j <= n; ++j) {
    const bool negate = (j - 1) % 2 == 1;
    for (std::size_t i = j; i <= n; ++i) {
      const Residue c = binom(n - j, i - j);
      g(i - 1, j - 1) = (negate && c != 0) ? p - c : c;
    }
  }
  return g;
}

MatrixFp kron(const MatrixFp& a, const MatrixFp& b) {
  if (a.p() != b.p()) throw std::invalid_argument("Kronecker product: mismatched characteristic");
  const Residue p = a.p();
  MatrixFp r(p, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Residue s = a(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        auto dst = r.row(i * b.rows() + k).subspan(j * b.cols(), b.cols());
        simd::axpy(dst, b.row(k), s, p);
      }
    }
  }
  return r;
}

MatrixFp build_g_kron(Residue p, unsigned lam, std::size_t cap) {
  checked_size(p, lam, cap);
  if (lam == 0) return MatrixFp::identity(p, 1);
  const MatrixFp gp = build_g_direct(p, 1, cap);
  MatrixFp g = gp;
  for (unsigned level = 2; level <= lam; ++level) g = kron(gp, g);
  return g;
}

MatrixFp build_g(Residue p, unsigned lam, std::size_t cap) {
  return lam >= 2 ? build_g_kron(p, lam, cap) : build_g_direct(p, lam, cap);
}

std::shared_ptr<const MatrixFp> cached_g(Residue p, unsigned lam) {
  static std::mutex mutex;
  static std::map<std::pair<Residue, unsigned>, std::shared_ptr<const MatrixFp>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[{p, lam}];
  if (!slot) slot = std::make_shared<const MatrixFp>(build_g(p, lam));
  return slot;
}

MatrixFp truncate_g(const MatrixFp& g, std::size_t l) {
  if (l < 1 || l > g.rows() || l > g.cols()) {
    throw std::out_of_range("truncation size " + std::to_string(l) + " outside [1, " + std::to_string(g.rows()) +
                            "]");
  }
  MatrixFp r(g.p(), l, l);
  for (std::size_t i = 0; i < l; ++i) {
    const auto src = g.row(i).first(l);
    std::copy(src.begin(), src.end(), r.row(i).begin());
  }
  return r;
}

unsigned least_level(Residue p, std::size_t l) {
  unsigned lam = 1;
  std::uint64_t size = p;
  while (size < l) {
    size *= p;
    ++lam;
  }
  return lam;
}

MatrixFp g_truncated(Residue p, std::size_t l) {
  return truncate_g(*cached_g(p, least_level(p, l)), l);
}

UpsilonVec upsilon(const MatrixFp& g_l, std::size_t j, std::size_t delta) {
  const std::size_t l = g_l.rows();
  const std::size_t lo = (delta + 1) / 2 + 1;
  const std::size_t hi = (l + 1) / 2;
  if (delta >= l || j < lo || j > hi) {
    throw std::out_of_range("Upsilon index j = " + std::to_string(j) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] for l = " + std::to_string(l) +
                            ", delta = " + std::to_string(delta));
  }
  UpsilonVec v;
  v.source_index = 2 * j - 1;
  v.delta = delta;
  v.l = l;
  const std::size_t col = v.source_index - 1;
  v.values.reserve(l - delta);
  for (std::size_t row = delta; row < l; ++row) {
    Residue e = g_l(row, col);
    if (row == col) e = (e + 1) % g_l.p();
    v.values.push_back(e);
  }
  return v;
}

}  // namespace sdcodes
