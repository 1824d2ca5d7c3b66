#include "blockhh/blockhh.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "blockhh/blocks.hpp"
#include "blockhh/hochschild.hpp"
#include "blockhh/oracle.hpp"
#include "blockhh/primes.hpp"
#include "blockhh/series.hpp"

struct bhh_series {
  std::vector<std::string> coeffs;
};

struct bhh_blocks {
  struct Entry {
    blockhh::BlockDescriptor block;
    std::vector<std::uint32_t> core;
    std::string dim_center;
    std::string dim_hh1;
  };
  std::vector<Entry> entries;
};

struct bhh_report {
  blockhh::VerificationReport report;
  std::string lhs;
  std::string rhs;
};

namespace {

thread_local std::string last_error;

bhh_status fail(bhh_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
bhh_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return BHH_OK;
  } catch (const blockhh::not_prime_error& e) {
    return fail(BHH_E_NOT_PRIME, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BHH_E_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(BHH_E_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(BHH_E_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BHH_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BHH_E_INTERNAL, e.what());
  } catch (...) {
    return fail(BHH_E_INTERNAL, "unknown error");
  }
}

std::optional<std::size_t> fault_index(int64_t fault) {
  if (fault < 0) return std::nullopt;
  return static_cast<std::size_t>(fault);
}

bhh_status wrap_report(blockhh::VerificationReport r, bhh_report** out) {
  auto handle = std::make_unique<bhh_report>();
  if (r.first_discrepancy) {
    handle->lhs = r.first_discrepancy->lhs.get_str();
    handle->rhs = r.first_discrepancy->rhs.get_str();
  }
  handle->report = std::move(r);
  *out = handle.release();
  return BHH_OK;
}

}  // namespace

extern "C" {

const char* bhh_status_string(bhh_status status) {
  switch (status) {
    case BHH_OK: return "ok";
    case BHH_E_INVALID_ARGUMENT: return "invalid argument";
    case BHH_E_NOT_PRIME: return "not prime";
    case BHH_E_DOMAIN: return "domain error";
    case BHH_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bhh_last_error(void) { return last_error.c_str(); }

const char* bhh_version(void) { return "0.1.0"; }

int bhh_is_prime(uint64_t n) { return blockhh::is_prime(n) ? 1 : 0; }

bhh_status bhh_series_new(bhh_series_kind kind, uint32_t p, uint32_t order, uint32_t s, bhh_series** out) {
  if (out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (order == 0) throw std::invalid_argument("order must be at least 1");
    blockhh::Series series;
    switch (kind) {
      case BHH_SERIES_P: series = blockhh::partition_gf(order); break;
      case BHH_SERIES_Z: series = blockhh::z_series(p, order); break;
      case BHH_SERIES_Y: series = blockhh::hh1_block_series(p, order); break;
      case BHH_SERIES_HH1_GROUP: series = blockhh::hh1_group_series(p, order); break;
      case BHH_SERIES_CS:
        blockhh::require_prime(p);
        if (s >= p) throw std::invalid_argument("s = " + std::to_string(s) + " is out of range 0..p-1");
        series = blockhh::section(blockhh::pcore_count_gf(p, std::size_t{order} * p + s), p, s);
        break;
      default: throw std::invalid_argument("unknown series kind");
    }
    auto handle = std::make_unique<bhh_series>();
    for (const auto& c : series.coefficients()) handle->coeffs.push_back(c.get_str());
    *out = handle.release();
  });
}

void bhh_series_free(bhh_series* series) { delete series; }

uint32_t bhh_series_order(const bhh_series* series) {
  return series == nullptr ? 0 : static_cast<uint32_t>(series->coeffs.size());
}

bhh_status bhh_series_coeff(const bhh_series* series, uint32_t exponent, const char** out) {
  if (series == nullptr || out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null argument");
  if (exponent >= series->coeffs.size()) return fail(BHH_E_INVALID_ARGUMENT, "exponent beyond the series order");
  *out = series->coeffs[exponent].c_str();
  return BHH_OK;
}

bhh_status bhh_blocks_new(uint32_t p, uint32_t n, bhh_blocks** out) {
  if (out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<bhh_blocks>();
    for (auto& b : blockhh::blocks_of(p, n)) {
      bhh_blocks::Entry e;
      e.core.assign(b.core.parts().begin(), b.core.parts().end());
      e.dim_center = blockhh::dim_center(b).get_str();
      e.dim_hh1 = blockhh::dim_hh1(b).get_str();
      e.block = std::move(b);
      handle->entries.push_back(std::move(e));
    }
    *out = handle.release();
  });
}

void bhh_blocks_free(bhh_blocks* blocks) { delete blocks; }

size_t bhh_blocks_count(const bhh_blocks* blocks) { return blocks == nullptr ? 0 : blocks->entries.size(); }

bhh_status bhh_blocks_get(const bhh_blocks* blocks, size_t index, bhh_block_info* out) {
  if (blocks == nullptr || out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null argument");
  if (index >= blocks->entries.size()) return fail(BHH_E_INVALID_ARGUMENT, "block index out of range");
  const auto& e = blocks->entries[index];
  out->p = e.block.p;
  out->n = e.block.n;
  out->weight = e.block.weight;
  out->defect_order_exp = e.block.defect_order_exp;
  out->core_parts = e.core.data();
  out->core_length = e.core.size();
  out->dim_center = e.dim_center.c_str();
  out->dim_hh1 = e.dim_hh1.c_str();
  return BHH_OK;
}

bhh_status bhh_y1_formula(uint32_t p, uint32_t r, uint32_t* out) {
  if (out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = blockhh::y1_formula(p, r); });
}

bhh_status bhh_hh1_group_oracle(uint32_t p, uint32_t n, uint64_t* out) {
  if (out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = blockhh::hh1_group_oracle(p, n); });
}

bhh_status bhh_sylow_exponent(uint32_t p, uint64_t m, uint64_t* out) {
  if (out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = blockhh::sylow_exponent(p, m); });
}

bhh_status bhh_verify_block_decomposition(uint32_t p, uint32_t s, uint32_t order, int64_t fault, bhh_report** out) {
  if (out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] { wrap_report(blockhh::verify_block_decomposition(p, s, order, fault_index(fault)), out); });
}

bhh_status bhh_verify_theorem2(uint32_t p, uint32_t max_weight, int64_t fault, bhh_report** out) {
  if (out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] { wrap_report(blockhh::verify_theorem2(p, max_weight, fault_index(fault)), out); });
}

bhh_status bhh_verify_theorem3(uint32_t p, uint32_t order, int64_t fault, bhh_report** out) {
  if (out == nullptr) return fail(BHH_E_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] { wrap_report(blockhh::verify_theorem3(p, order, fault_index(fault)), out); });
}

void bhh_report_free(bhh_report* report) { delete report; }

const char* bhh_report_identity(const bhh_report* report) {
  return report == nullptr ? "" : report->report.identity.c_str();
}

uint32_t bhh_report_p(const bhh_report* report) { return report == nullptr ? 0 : report->report.p; }

uint32_t bhh_report_order(const bhh_report* report) {
  return report == nullptr ? 0 : static_cast<uint32_t>(report->report.order);
}

int bhh_report_holds(const bhh_report* report) { return report != nullptr && report->report.holds() ? 1 : 0; }

const char* bhh_report_detail(const bhh_report* report) {
  return report == nullptr ? "" : report->report.detail.c_str();
}

int bhh_report_discrepancy(const bhh_report* report, uint64_t* exponent, const char** lhs, const char** rhs) {
  if (report == nullptr || !report->report.first_discrepancy) return 0;
  if (exponent != nullptr) *exponent = report->report.first_discrepancy->exponent;
  if (lhs != nullptr) *lhs = report->lhs.c_str();
  if (rhs != nullptr) *rhs = report->rhs.c_str();
  return 1;
}

}  // extern "C"
