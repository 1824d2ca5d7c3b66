#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "blockhh/partitions.hpp"
#include "blockhh/series.hpp"
#include "support/brute_force.hpp"

using namespace blockhh;
using namespace blockhh::testing;

namespace {

Partition part(std::vector<std::uint32_t> v) { return Partition(std::move(v)); }

// all p-tuples of partitions with total size w
void multipartitions(std::uint32_t p, std::uint32_t w, std::vector<Partition>& prefix,
                     const std::function<void(const std::vector<Partition>&)>& visit) {
  if (prefix.size() + 1 == p) {
    for (const auto& q : partitions_of(w)) {
      prefix.push_back(q);
      visit(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (std::uint32_t k = 0; k <= w; ++k)
    for (const auto& q : partitions_of(k)) {
      prefix.push_back(q);
      multipartitions(p, w - k, prefix, visit);
      prefix.pop_back();
    }
}

}  // namespace

TEST_CASE("Partition validates its parts") {
  CHECK(part({3, 1, 1}).size() == 5);
  CHECK(Partition().size() == 0);
  CHECK_THROWS_AS(part({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(part({2, 0}), std::invalid_argument);
  CHECK(part({4, 2, 1}).to_string() == "4,2,1");
}

TEST_CASE("partitions_of") {
  REQUIRE(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());
  const auto four = partitions_of(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0] == part({4}));
  CHECK(four[1] == part({3, 1}));
  CHECK(four[2] == part({2, 2}));
  CHECK(four[3] == part({2, 1, 1}));
  CHECK(four[4] == part({1, 1, 1, 1}));
  const Series gf = partition_gf(31);
  for (std::uint32_t n = 0; n <= 30; ++n) {
    const auto all = partitions_of(n);
    CHECK(gf[n] == all.size());
    CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& l : all) CHECK(l.size() == n);
    if (n <= 15) {
      const auto brute = all_partitions(n);
      REQUIRE(brute.size() == all.size());
      for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(std::vector<std::uint32_t>(all[i].parts().begin(), all[i].parts().end()) == brute[i]);
    }
    if (n <= 20) CHECK(partition_count(n) == all.size());
  }
}

TEST_CASE("beta sets") {
  CHECK(beta_set(Partition(), 3) == std::vector<std::uint64_t>{2, 1, 0});
  CHECK(beta_set(part({2, 1}), 2) == std::vector<std::uint64_t>{3, 1});
  CHECK_THROWS_AS(beta_set(part({2, 1}), 1), std::invalid_argument);
  for (std::uint32_t n = 0; n <= 10; ++n)
    for (const auto& l : partitions_of(n))
      for (std::size_t len = l.length(); len <= n + 3; ++len) CHECK(partition_from_beta(beta_set(l, len)) == l);
}

TEST_CASE("p-cores") {
  CHECK(p_core(Partition(), 5).empty());
  CHECK(p_core(part({2, 1}), 3).empty());
  CHECK(p_core(part({2}), 2).empty());
  CHECK(p_core(part({1, 1}), 2).empty());
  CHECK(p_core(part({2, 1}), 2) == part({2, 1}));
  CHECK(p_core(part({3}), 2) == part({1}));
  CHECK_THROWS_AS(p_core(part({1}), 4), std::invalid_argument);

  // against rim-hook stripping, with two removal orders agreeing
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t n = 0; n <= 12; ++n)
      for (const auto& l : partitions_of(n)) {
        const Parts raw(l.parts().begin(), l.parts().end());
        std::uint64_t first = 0, last = 0;
        const Parts core_first = strip_rim_hooks(raw, p, HookChoice::first, first);
        const Parts core_last = strip_rim_hooks(raw, p, HookChoice::last, last);
        CHECK(core_first == core_last);
        CHECK(first == last);
        const Partition core = p_core(l, p);
        CHECK(std::vector<std::uint32_t>(core.parts().begin(), core.parts().end()) == core_first);
        CHECK(n == core.size() + p * first);
        CHECK(p_quotient(l, p).weight() == first);
        CHECK(is_p_core(l, p) == has_no_p_hook(raw, p));
      }
}

TEST_CASE("p-quotients") {
  const CoreQuotient empty = p_quotient(Partition(), 3);
  CHECK(empty.core.empty());
  CHECK(empty.quotient.size() == 3);
  for (const auto& q : empty.quotient) CHECK(q.empty());

  // the two partitions of 2 give the two 2-tuples of total size one
  const CoreQuotient a = p_quotient(part({2}), 2);
  const CoreQuotient b = p_quotient(part({1, 1}), 2);
  CHECK(a.core.empty());
  CHECK(b.core.empty());
  CHECK(a.weight() == 1);
  CHECK(b.weight() == 1);
  CHECK(a.quotient != b.quotient);
  std::set<std::vector<Partition>> tuples{a.quotient, b.quotient};
  CHECK(tuples == std::set<std::vector<Partition>>{{part({1}), Partition()}, {Partition(), part({1})}});

  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t n = 0; n <= 12; ++n)
      for (const auto& l : partitions_of(n)) {
        const CoreQuotient cq = p_quotient(l, p);
        CHECK(cq.quotient.size() == p);
        CHECK(n == cq.core.size() + p * cq.weight());
        CHECK(is_p_core(cq.core, p));
        CHECK(from_core_quotient(cq) == l);
      }
}

TEST_CASE("from_core_quotient is a bijection onto partitions") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::vector<Partition> cores;
    for (std::uint32_t k = 0; k <= 4; ++k)
      for (const auto& c : p_cores_of_size(k, p)) cores.push_back(c);
    for (const auto& core : cores)
      for (std::uint32_t w = 0; w <= 3; ++w) {
        std::set<Partition> images;
        std::vector<Partition> prefix;
        multipartitions(p, w, prefix, [&](const std::vector<Partition>& q) {
          const CoreQuotient cq{p, core, q};
          const Partition l = from_core_quotient(cq);
          CHECK(l.size() == core.size() + p * w);
          CHECK(p_quotient(l, p) == cq);
          images.insert(l);
        });
        CHECK(images.size() == rho(core.size() + p * w, core, p));
      }
  }
  CHECK_THROWS_AS(from_core_quotient({2, part({2}), {Partition(), Partition()}}), std::invalid_argument);
  CHECK_THROWS_AS(from_core_quotient({2, Partition(), {Partition()}}), std::invalid_argument);
}

TEST_CASE("p_cores_of_size and count_pcores") {
  CHECK(count_pcores(0, 2) == 1);
  CHECK(count_pcores(4, 2) == 0);
  CHECK(p_cores_of_size(4, 3) == std::vector<Partition>{part({3, 1}), part({2, 1, 1})});
  const std::map<std::uint32_t, std::vector<std::uint64_t>> frozen = {
      {2, {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
      {3, {1, 1, 2, 0, 2, 1, 2, 0, 1, 2, 2, 0, 2, 0, 2, 0, 3, 2, 0, 0, 2}},
      {5, {1, 1, 2, 3, 5, 2, 6, 5, 7, 5, 12, 6, 12, 6, 10, 11, 16, 7, 20, 15, 12}},
      {7, {1, 1, 2, 3, 5, 7, 11, 8, 15, 16, 21, 21, 28, 24, 44, 36, 49, 45, 63, 49, 74}},
  };
  for (const auto& [p, counts] : frozen) {
    const Series gf = pcore_count_gf(p, 21);
    for (std::uint32_t n = 0; n <= 20; ++n) {
      CHECK(count_pcores(n, p) == counts[n]);
      CHECK(gf[n] == counts[n]);
    }
    for (std::uint32_t n = 0; n <= 14; ++n) {
      std::vector<Partition> filtered;
      for (const auto& l : partitions_of(n))
        if (is_p_core(l, p)) filtered.push_back(l);
      CHECK(p_cores_of_size(n, p) == filtered);
    }
  }
}

TEST_CASE("rho") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(rho(0, Partition(), p) == 1);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::uint64_t empty_core = 0;
    for (const auto& l : all_partitions(p))
      if (rim_hook_core(l, p).empty()) ++empty_core;
    CHECK(empty_core == p);
    CHECK(rho(p, Partition(), p) == p);
  }
  // wrong residue or too small
  CHECK(rho(3, Partition(), 2) == 0);
  CHECK(rho(0, part({1}), 2) == 0);
  CHECK_THROWS_AS(rho(4, part({2}), 2), std::invalid_argument);

  // rho(pj, empty) = [t^j] P(t)^p
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Series pp = power(partition_gf(11), p);
    for (std::uint32_t j = 0; j <= 10; ++j) CHECK(rho(p * j, Partition(), p) == pp[j]);
  }
  // direct filter enumeration for every core
  for (std::uint32_t p : {2u, 3u})
    for (std::uint32_t n = 0; n <= 14; ++n) {
      std::map<Parts, std::uint64_t> by_core;
      for (const auto& l : all_partitions(n)) ++by_core[rim_hook_core(l, p)];
      for (const auto& [core, count] : by_core) CHECK(rho(n, Partition(core), p) == count);
    }
}

TEST_CASE("every partition lies in exactly one block") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t n = 0; n <= 20; ++n) {
      mpz_class total = 0;
      for (std::uint32_t w = 0; p * w <= n; ++w)
        for (const auto& core : p_cores_of_size(n - p * w, p)) total += rho(n, core, p);
      CHECK(total == partition_count(n));
    }
}

TEST_CASE("multipartition counts") {
  CHECK(multipartition_counts(2, 4) == std::vector<mpz_class>{1, 2, 5, 10, 20});
  CHECK(multipartition_counts(3, 4) == std::vector<mpz_class>{1, 3, 9, 22, 51});
  for (std::uint32_t p : {2u, 3u}) {
    const auto counts = multipartition_counts(p, 4);
    for (std::uint32_t w = 0; w <= 4; ++w) {
      std::uint64_t brute = 0;
      std::vector<Partition> prefix;
      multipartitions(p, w, prefix, [&](const std::vector<Partition>&) { ++brute; });
      CHECK(counts[w] == brute);
    }
  }
}
