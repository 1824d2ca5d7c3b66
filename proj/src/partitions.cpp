#include "blockhh/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "blockhh/primes.hpp"

namespace blockhh {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::uint64_t CoreQuotient::weight() const {
  std::uint64_t w = 0;
  for (const auto& q : quotient) w += q.size();
  return w;
}

std::vector<Partition> partitions_of(std::uint32_t n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> a{n};
  for (;;) {
    out.emplace_back(a);
    // rightmost part greater than one
    std::size_t k = a.size();
    while (k > 0 && a[k - 1] == 1) --k;
    if (k == 0) break;
    std::uint32_t spill = static_cast<std::uint32_t>(a.size() - k) + 1;
    const std::uint32_t v = --a[k - 1];
    a.resize(k);
    while (spill > 0) {
      const std::uint32_t part = std::min(v, spill);
      a.push_back(part);
      spill -= part;
    }
  }
  return out;
}

std::vector<std::uint64_t> beta_set(const Partition& lambda, std::size_t length) {
  if (length < lambda.length()) throw std::invalid_argument("beta_set length is shorter than the partition");
  std::vector<std::uint64_t> beta(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint64_t part = i < lambda.length() ? lambda.parts()[i] : 0;
    beta[i] = part + (length - 1 - i);
  }
  return beta;
}

Partition partition_from_beta(std::span<const std::uint64_t> beta) {
  std::vector<std::uint64_t> b(beta.begin(), beta.end());
  std::sort(b.begin(), b.end(), std::greater<>());
  if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw std::invalid_argument("beta-set entries must be distinct");
  std::vector<std::uint32_t> parts;
  const std::size_t len = b.size();
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t part = b[i] - (len - 1 - i);
    if (part == 0) break;
    parts.push_back(static_cast<std::uint32_t>(part));
  }
  return Partition(std::move(parts));
}

namespace {

std::size_t abacus_length(std::size_t parts, std::uint32_t p) { return (parts + p - 1) / p * p; }

// Bead rows on each runner, descending.
std::vector<std::vector<std::uint64_t>> runners(const Partition& lambda, std::uint32_t p, std::size_t length) {
  std::vector<std::vector<std::uint64_t>> rows(p);
  for (std::uint64_t b : beta_set(lambda, length)) rows[b % p].push_back(b / p);
  return rows;
}

Partition core_from_counts(const std::vector<std::size_t>& counts, std::uint32_t p) {
  std::vector<std::uint64_t> beta;
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::size_t r = 0; r < counts[i]; ++r) beta.push_back(r * p + i);
  return partition_from_beta(beta);
}

}  // namespace

Partition p_core(const Partition& lambda, std::uint32_t p) {
  require_prime(p);
  const auto rows = runners(lambda, p, abacus_length(lambda.length(), p));
  std::vector<std::size_t> counts(p);
  for (std::uint32_t i = 0; i < p; ++i) counts[i] = rows[i].size();
  return core_from_counts(counts, p);
}

bool is_p_core(const Partition& lambda, std::uint32_t p) { return p_core(lambda, p) == lambda; }

CoreQuotient p_quotient(const Partition& lambda, std::uint32_t p) {
  require_prime(p);
  const auto rows = runners(lambda, p, abacus_length(lambda.length(), p));
  CoreQuotient cq;
  cq.p = p;
  std::vector<std::size_t> counts(p);
  for (std::uint32_t i = 0; i < p; ++i) {
    counts[i] = rows[i].size();
    cq.quotient.push_back(partition_from_beta(rows[i]));
  }
  cq.core = core_from_counts(counts, p);
  return cq;
}

Partition from_core_quotient(const CoreQuotient& cq) {
  const std::uint32_t p = cq.p;
  require_prime(p);
  if (cq.quotient.size() != p) throw std::invalid_argument("p-quotient must have exactly p components");
  if (!is_p_core(cq.core, p)) throw std::invalid_argument("(" + cq.core.to_string() + ") is not a p-core");
  std::size_t longest = 0;
  for (const auto& q : cq.quotient) longest = std::max(longest, q.length());
  const std::size_t length = abacus_length(cq.core.length(), p) + p * longest;
  std::vector<std::uint64_t> beta;
  const auto core_rows = runners(cq.core, p, length);
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint64_t row : beta_set(cq.quotient[i], core_rows[i].size())) beta.push_back(row * p + i);
  return partition_from_beta(beta);
}

std::vector<Partition> p_cores_of_size(std::uint32_t n, std::uint32_t p) {
  require_prime(p);
  // A p-core is fixed by its charge vector c (sum c_i = 0): runner i carries
  // R + c_i beads packed at the top. Its size is
  //   sum_i (p c_i^2 + (2i - p + 1) c_i) / 2,
  // each summand nonnegative, which bounds the search.
  const long budget = 2L * n;
  const long pl = p;
  long bound = 0;
  while (pl * (bound + 1) * (bound + 1) - (pl - 1) * (bound + 1) <= budget) ++bound;

  std::vector<Partition> out;
  std::vector<long> c(p);
  std::function<void(std::uint32_t, long, long)> walk = [&](std::uint32_t i, long sum, long twice_size) {
    const auto term = [&](long ci) { return pl * ci * ci + (2L * i - pl + 1) * ci; };
    if (i + 1 == p) {
      const long last = -sum;
      if (last < -bound || last > bound || twice_size + term(last) != budget) return;
      c[i] = last;
      long r = 0;
      for (long ci : c) r = std::max(r, -ci);
      std::vector<std::size_t> counts(p);
      for (std::uint32_t k = 0; k < p; ++k) counts[k] = static_cast<std::size_t>(r + c[k]);
      Partition core = core_from_counts(counts, p);
      if (core.size() != n) throw std::logic_error("p-core size formula disagrees with the abacus");
      out.push_back(std::move(core));
      return;
    }
    for (long ci = -bound; ci <= bound; ++ci) {
      const long t = twice_size + term(ci);
      if (t > budget) continue;
      c[i] = ci;
      walk(i + 1, sum + ci, t);
    }
  };
  walk(0, 0, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t count_pcores(std::uint32_t n, std::uint32_t p) { return p_cores_of_size(n, p).size(); }

mpz_class partition_count(std::uint32_t n) {
  std::vector<mpz_class> c(n + 1);
  c[0] = 1;
  // count by largest part
  for (std::uint32_t part = 1; part <= n; ++part)
    for (std::uint32_t k = part; k <= n; ++k) c[k] += c[k - part];
  return c[n];
}

std::vector<mpz_class> multipartition_counts(std::uint32_t p, std::uint32_t max_weight) {
  require_prime(p);
  std::vector<mpz_class> single(max_weight + 1);
  single[0] = 1;
  for (std::uint32_t part = 1; part <= max_weight; ++part)
    for (std::uint32_t k = part; k <= max_weight; ++k) single[k] += single[k - part];

  std::vector<mpz_class> acc(max_weight + 1);
  acc[0] = 1;
  for (std::uint32_t component = 0; component < p; ++component) {
    std::vector<mpz_class> next(max_weight + 1);
    for (std::uint32_t a = 0; a <= max_weight; ++a) {
      if (sgn(acc[a]) == 0) continue;
      for (std::uint32_t b = 0; a + b <= max_weight; ++b) next[a + b] += acc[a] * single[b];
    }
    acc = std::move(next);
  }
  return acc;
}

mpz_class rho(std::uint32_t n, const Partition& core, std::uint32_t p) {
  require_prime(p);
  if (!is_p_core(core, p)) throw std::invalid_argument("(" + core.to_string() + ") is not a p-core");
  if (n < core.size() || (n - core.size()) % p != 0) return 0;
  const auto w = static_cast<std::uint32_t>((n - core.size()) / p);
  return multipartition_counts(p, w)[w];
}

}  // namespace blockhh
