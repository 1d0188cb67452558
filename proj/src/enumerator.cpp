#include "sdcodes/enumerator.hpp"

#include <stdexcept>
#include <string>

namespace sdcodes {

namespace {

// Beyond this the explicit geometric sum (and any enumeration) is hopeless.
constexpr std::uint64_t kMaxSeriesTerms = 1'000'000;

std::uint64_t code_length(Residue p, unsigned s) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  }
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  return checked_pow(p, s);
}

CaseDescriptor make_descriptor(std::uint64_t n, CaseTag sub, std::uint64_t nu, std::uint64_t k, std::int64_t j_lo,
                               std::int64_t j_hi) {
  CaseDescriptor d;
  d.branch = static_cast<int>(n % 4);
  d.sub = sub;
  d.nu = nu;
  d.k = k;
  d.delta = (n - 1) / 2 - k;
  d.l = n - 1 - 2 * k;
  d.t = n - 2 * k;
  if (j_lo < 1) j_lo = 1;
  d.j_lo = static_cast<std::uint64_t>(j_lo);
  d.j_hi = j_hi < 0 ? 0 : static_cast<std::uint64_t>(j_hi);
  d.free_param_count = d.j_hi >= d.j_lo ? d.j_hi - d.j_lo + 1 : 0;
  // The per-bullet range must agree with the generic one.
  const std::uint64_t generic = (d.l + 1) / 2 - (d.delta + 1) / 2;
  if (d.free_param_count != generic || (d.free_param_count > 0 && d.j_lo != (d.delta + 1) / 2 + 1)) {
    throw std::logic_error("inconsistent j range for k = " + std::to_string(k));
  }
  return d;
}

mpz_class power(const mpz_class& base, std::uint64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

mpz_class field_order(Residue p, unsigned m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  return power(mpz_class(static_cast<unsigned long>(p)), m);
}

// sum_{i < terms} q^i
mpz_class geometric(const mpz_class& q, std::uint64_t terms) {
  if (terms > kMaxSeriesTerms) throw std::length_error("count series too long");
  mpz_class sum = 0, term = 1;
  for (std::uint64_t i = 0; i < terms; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

std::vector<FqElem> xm1_word(const FieldSpec& field, std::uint64_t n) {
  return std::vector<FqElem>(n, field.zero());
}

RVector to_standard(const FieldSpec& field, const std::vector<FqElem>& a, const std::vector<FqElem>& b) {
  const auto sa = basis_convert(field, a, BasisDirection::to_standard);
  const auto sb = basis_convert(field, b, BasisDirection::to_standard);
  RVector out(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) out[i] = {sa[i], sb[i]};
  return out;
}

CodeSpec assemble(const FieldSpec& field, unsigned s, const CaseDescriptor& desc, const SBasis* basis,
                  const std::vector<FqElem>& params) {
  if (params.size() != desc.free_param_count) {
    throw std::invalid_argument("case k = " + std::to_string(desc.k) + " takes " +
                                std::to_string(desc.free_param_count) + " parameters, got " +
                                std::to_string(params.size()));
  }
  for (const auto& a : params) {
    if (!field.contains(a)) throw std::invalid_argument("parameter is not an element of the field");
  }
  const std::uint64_t n = checked_pow(field.p(), s);
  XPoly b(field, desc.l);
  if (desc.l > 0) b = embed(*basis, params);

  CodeSpec code{field, s, desc, params, b, {}};
  const std::uint64_t k = desc.k;
  // (x-1)^{k+1} b(x) + u (x-1)^k; for k = 0 this is (x-1) b(x) + u.
  auto a1 = xm1_word(field, n);
  auto b1 = xm1_word(field, n);
  for (std::size_t i = 0; i < b.l(); ++i) a1[k + 1 + i] = b.coeffs[i];
  b1[k] = field.one();
  code.generators.generators.push_back(to_standard(field, a1, b1));
  if (k >= 1) {
    auto a2 = xm1_word(field, n);
    a2[n - k] = field.one();
    code.generators.generators.push_back(to_standard(field, a2, xm1_word(field, n)));
  }
  return code;
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::k_zero: return "k_zero";
    case CaseTag::even_k: return "even_k";
    case CaseTag::odd_k: return "odd_k";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view text) {
  if (text == "k_zero") return CaseTag::k_zero;
  if (text == "even_k") return CaseTag::even_k;
  if (text == "odd_k") return CaseTag::odd_k;
  throw std::invalid_argument("unknown case tag '" + std::string(text) + "'");
}

std::vector<CaseDescriptor> classify_cases(Residue p, unsigned s) {
  const std::uint64_t n = code_length(p, s);
  const auto N = static_cast<std::int64_t>(n);
  std::vector<CaseDescriptor> out;
  if (n % 4 == 3) {
    const std::int64_t T = (N + 1) / 4;
    for (std::int64_t nu = 0; nu < T; ++nu) {
      out.push_back(make_descriptor(n, CaseTag::even_k, nu, 2 * nu, T - nu + 1, (N + 1) / 2 - 2 * nu - 1));
    }
    for (std::int64_t nu = 0; nu < T; ++nu) {
      out.push_back(make_descriptor(n, CaseTag::odd_k, nu, 2 * nu + 1, T - nu, (N + 1) / 2 - 2 * nu - 2));
    }
  } else {
    const std::int64_t T = (N - 1) / 4;
    out.push_back(make_descriptor(n, CaseTag::k_zero, 0, 0, T + 1, (N - 1) / 2));
    for (std::int64_t nu = 1; nu <= T; ++nu) {
      out.push_back(make_descriptor(n, CaseTag::even_k, nu, 2 * nu, T - nu + 1, (N - 1) / 2 - 2 * nu));
    }
    for (std::int64_t nu = 1; nu <= T; ++nu) {
      out.push_back(make_descriptor(n, CaseTag::odd_k, nu, 2 * nu - 1, T - nu + 2, (N - 1) / 2 - 2 * nu + 1));
    }
  }
  return out;
}

CaseDescriptor descriptor_for_k(Residue p, unsigned s, std::uint64_t k) {
  for (const auto& d : classify_cases(p, s)) {
    if (d.k == k) return d;
  }
  throw std::out_of_range("k = " + std::to_string(k) + " is outside 0..(p^s-1)/2");
}

std::uint64_t CodeSpec::length() const { return checked_pow(field.p(), s); }

CodeSpec build_code(const FieldSpec& field, unsigned s, const CaseDescriptor& desc,
                    const std::vector<FqElem>& params) {
  if (desc.l == 0) return assemble(field, s, desc, nullptr, params);
  const SBasis basis = s_basis(field, desc.l, desc.delta);
  return assemble(field, s, desc, &basis, params);
}

mpz_class count_self_dual(Residue p, unsigned m, unsigned s) {
  const std::uint64_t n = code_length(p, s);
  const mpz_class q = field_order(p, m);
  if (n % 4 == 3) return 2 * geometric(q, (n + 1) / 4);
  const std::uint64_t T = (n - 1) / 4;
  return power(q, T) + 2 * geometric(q, T);
}

mpz_class count_by_descriptors(Residue p, unsigned m, unsigned s) {
  const mpz_class q = field_order(p, m);
  mpz_class total = 0;
  for (const auto& d : classify_cases(p, s)) total += power(q, d.free_param_count);
  return total;
}

mpz_class descriptor_size(const FieldSpec& field, const CaseDescriptor& desc) {
  return power(mpz_class(static_cast<unsigned long>(field.order())), desc.free_param_count);
}

RIdealGens to_negacyclic(const CodeSpec& code) {
  const FieldSpec& field = code.field;
  RIdealGens out;
  out.ring_sign = -code.generators.ring_sign;
  for (const auto& g : code.generators.generators) {
    RVector h = g;
    for (std::size_t i = 1; i < h.size(); i += 2) h[i] = {field.neg(h[i].a), field.neg(h[i].b)};
    out.generators.push_back(std::move(h));
  }
  return out;
}

CodeEnumerator::CodeEnumerator(FieldSpec field, unsigned s)
    : field_(std::move(field)), s_(s), descriptors_(classify_cases(field_.p(), s)) {
  total_ = 0;
  for (const auto& d : descriptors_) {
    sizes_.push_back(descriptor_size(field_, d));
    total_ += sizes_.back();
  }
  bases_.resize(descriptors_.size());
  position_ = 0;
}

void CodeEnumerator::set_window(const mpz_class& offset, std::optional<mpz_class> limit) {
  if (offset < 0) throw std::invalid_argument("offset must be non-negative");
  if (limit && *limit < 0) throw std::invalid_argument("limit must be non-negative");
  position_ = offset;
  end_ = limit ? std::optional<mpz_class>(offset + *limit) : std::nullopt;
  primed_ = false;
}

std::vector<FqElem> CodeEnumerator::params_at(std::size_t d, const mpz_class& index) const {
  const std::uint64_t count = descriptors_.at(d).free_param_count;
  if (index < 0 || index >= sizes_[d]) throw std::out_of_range("parameter index out of range");
  const mpz_class q(static_cast<unsigned long>(field_.order()));
  std::vector<FqElem> params(count, field_.zero());
  mpz_class rest = index;
  for (std::uint64_t i = count; i-- > 0;) {
    const mpz_class digit = rest % q;
    rest /= q;
    params[i] = field_.element_at(digit.get_ui());
  }
  return params;
}

CodeSpec CodeEnumerator::build(std::size_t d, const std::vector<FqElem>& params) {
  const CaseDescriptor& desc = descriptors_[d];
  if (desc.l == 0) return assemble(field_, s_, desc, nullptr, params);
  if (!bases_[d]) bases_[d] = s_basis(field_, desc.l, desc.delta);
  return assemble(field_, s_, desc, &*bases_[d], params);
}

CodeSpec CodeEnumerator::code_at(const mpz_class& index) {
  if (index < 0 || index >= total_) throw std::out_of_range("code index out of range");
  mpz_class local = index;
  for (std::size_t d = 0; d < descriptors_.size(); ++d) {
    if (local < sizes_[d]) return build(d, params_at(d, local));
    local -= sizes_[d];
  }
  throw std::logic_error("code index walk fell off the descriptor list");
}

std::optional<CodeSpec> CodeEnumerator::next() {
  if (position_ >= total_ || (end_ && position_ >= *end_)) return std::nullopt;
  if (!primed_) {
    mpz_class local = position_;
    desc_ = 0;
    while (local >= sizes_[desc_]) local -= sizes_[desc_++];
    digits_.assign(descriptors_[desc_].free_param_count, 0);
    mpz_class rest = local;
    const mpz_class q(static_cast<unsigned long>(field_.order()));
    for (std::size_t i = digits_.size(); i-- > 0;) {
      digits_[i] = mpz_class(rest % q).get_ui();
      rest /= q;
    }
    primed_ = true;
  }
  std::vector<FqElem> params;
  params.reserve(digits_.size());
  for (auto digit : digits_) params.push_back(field_.element_at(digit));
  CodeSpec code = build(desc_, params);

  // Advance the odometer; the last parameter moves fastest.
  std::size_t i = digits_.size();
  while (i > 0) {
    if (++digits_[i - 1] < field_.order()) break;
    digits_[--i] = 0;
  }
  if (i == 0 && ++desc_ < descriptors_.size()) digits_.assign(descriptors_[desc_].free_param_count, 0);
  ++position_;
  return code;
}

std::vector<mpz_class> sample_indices(const mpz_class& total, std::size_t n, std::uint64_t seed) {
  if (total <= 0) throw std::invalid_argument("cannot sample from an empty family");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(mpz_class(static_cast<unsigned long>(seed)));
  std::vector<mpz_class> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.get_z_range(total));
  return out;
}

}  // namespace sdcodes
