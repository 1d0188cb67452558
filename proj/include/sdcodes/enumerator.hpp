#pragma once

// Self-dual cyclic codes of length N = p^s over R = F_{p^m} + u F_{p^m}.
//
// Every such code is <(x-1)^{k+1} b(x) + u (x-1)^k, (x-1)^{N-k}> for some
// 0 <= k <= (N-1)/2 (a single generator (x-1) b(x) + u when k = 0), where
// b(x) is a fixed point of the reciprocal map modulo (x-1)^l, l = N-1-2k,
// supported on degrees delta..l-1 with delta = (N-1)/2 - k. The descriptors
// below group the k by parity as the closed-form count does.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sdcodes/chainring.hpp"
#include "sdcodes/omega.hpp"

namespace sdcodes {

enum class CaseTag { k_zero, even_k, odd_k };

std::string to_string(CaseTag tag);
// Inverse of to_string; throws std::invalid_argument.
CaseTag parse_case_tag(std::string_view text);

struct CaseDescriptor {
  int branch = 3;  // p^s mod 4
  CaseTag sub = CaseTag::even_k;
  std::uint64_t nu = 0;
  std::uint64_t k = 0;
  std::uint64_t delta = 0;
  std::uint64_t l = 0;
  // Inclusive j range; empty when j_lo > j_hi.
  std::uint64_t j_lo = 1;
  std::uint64_t j_hi = 0;
  std::uint64_t free_param_count = 0;
  std::uint64_t t = 0;  // N - 2k

  friend bool operator==(const CaseDescriptor&, const CaseDescriptor&) = default;
};

// Descriptors in the order of the closed-form statement. Throws
// std::invalid_argument unless p is an odd prime and s >= 1.
std::vector<CaseDescriptor> classify_cases(Residue p, unsigned s);

// The descriptor with torsion exponent k; throws std::out_of_range.
CaseDescriptor descriptor_for_k(Residue p, unsigned s, std::uint64_t k);

struct CodeSpec {
  FieldSpec field;
  unsigned s = 1;
  CaseDescriptor descriptor;
  std::vector<FqElem> params;  // a_{2j-2}, ascending j
  XPoly b;                     // (x-1)-basis, length l
  RIdealGens generators;

  std::uint64_t length() const;
};

// Throws std::invalid_argument on a parameter count mismatch or when the
// parameters are not field elements.
CodeSpec build_code(const FieldSpec& field, unsigned s, const CaseDescriptor& desc,
                    const std::vector<FqElem>& params);

// Closed form, summed explicitly.
mpz_class count_self_dual(Residue p, unsigned m, unsigned s);

// sum over descriptors of (p^m)^free_param_count.
mpz_class count_by_descriptors(Residue p, unsigned m, unsigned s);

// (p^m)^free_param_count for one descriptor.
mpz_class descriptor_size(const FieldSpec& field, const CaseDescriptor& desc);

// x -> -x on every generator, ring_sign -1.
RIdealGens to_negacyclic(const CodeSpec& code);

// Streams codes in descriptor order, then parameters in lexicographic order
// with the first parameter most significant. Only one code is materialized
// at a time; the per-descriptor S bases are built lazily and kept.
class CodeEnumerator {
 public:
  CodeEnumerator(FieldSpec field, unsigned s);

  const FieldSpec& field() const { return field_; }
  unsigned s() const { return s_; }
  const std::vector<CaseDescriptor>& descriptors() const { return descriptors_; }
  const mpz_class& total() const { return total_; }

  // Restricts the stream to indices [offset, offset + limit).
  void set_window(const mpz_class& offset, std::optional<mpz_class> limit);

  std::optional<CodeSpec> next();

  // Random access; throws std::out_of_range for index >= total().
  CodeSpec code_at(const mpz_class& index);

  // Parameters of the code at `index` within descriptor `d`.
  std::vector<FqElem> params_at(std::size_t d, const mpz_class& index) const;

 private:
  CodeSpec build(std::size_t d, const std::vector<FqElem>& params);

  FieldSpec field_;
  unsigned s_;
  std::vector<CaseDescriptor> descriptors_;
  std::vector<mpz_class> sizes_;
  std::vector<std::optional<SBasis>> bases_;
  mpz_class total_;

  mpz_class position_;
  std::optional<mpz_class> end_;
  std::size_t desc_ = 0;
  std::vector<std::uint64_t> digits_;
  bool primed_ = false;
};

// n indices drawn uniformly from [0, total) with a seeded generator. The
// sequence depends only on (total, n, seed).
std::vector<mpz_class> sample_indices(const mpz_class& total, std::size_t n, std::uint64_t seed);

}  // namespace sdcodes
