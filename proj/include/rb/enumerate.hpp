#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "rb/classify.hpp"
#include "rb/rb_check.hpp"

namespace rb {

struct EnumerationOptions {
    std::uint64_t budget = 100'000'000;  // max matrices to iterate
    unsigned workers = 0;                // 0 = hardware concurrency
    bool record_mismatches = true;
};

/// A matrix where the raw identity check and the classification predicate
/// disagree. Any entry here is a counterexample to the classification.
struct EnumerationMismatch {
    std::uint64_t index;
    Matrix<Fp> matrix;
    bool identity_holds;
    bool classified_rb;
};

struct EnumerationReport {
    PrimeField field;
    Eigen::Index n;
    Fp weight;
    std::uint64_t total = 0;
    std::uint64_t rb_count = 0;          // raw identity route
    std::uint64_t classified_count = 0;  // matrix-shape predicate route
    std::uint64_t mismatch_count = 0;
    std::vector<EnumerationMismatch> mismatches;

    bool clean() const { return mismatch_count == 0; }
};

namespace detail {

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (out > UINT64_MAX / base)
            return std::nullopt;
        out *= base;
    }
    return out;
}

// Matrices are indexed in mixed-radix base p: entries read row-major form
// the digits, with the last entry least significant.
struct MatrixOdometer {
    std::uint32_t p;
    Eigen::Index dim;
    std::vector<std::uint32_t> digits;

    MatrixOdometer(std::uint32_t prime, Eigen::Index d, std::uint64_t start)
        : p(prime), dim(d), digits(static_cast<std::size_t>(d * d), 0) {
        for (std::size_t i = digits.size(); i-- > 0;) {
            digits[i] = static_cast<std::uint32_t>(start % p);
            start /= p;
        }
    }

    void fill(Matrix<Fp>& m) const {
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j)
                m(i, j) = Fp(digits[static_cast<std::size_t>(i * dim + j)], p);
    }

    void advance(Matrix<Fp>& m) {
        for (std::size_t idx = digits.size(); idx-- > 0;) {
            if (++digits[idx] < p) {
                m(static_cast<Eigen::Index>(idx) / dim, static_cast<Eigen::Index>(idx) % dim) =
                    Fp(digits[idx], p);
                return;
            }
            digits[idx] = 0;
            m(static_cast<Eigen::Index>(idx) / dim, static_cast<Eigen::Index>(idx) % dim) = Fp(0, p);
        }
    }
};

struct EnumerationSlice {
    std::uint64_t rb_count = 0;
    std::uint64_t classified_count = 0;
    std::uint64_t mismatch_count = 0;
    std::vector<EnumerationMismatch> mismatches;
};

inline EnumerationSlice enumerate_slice(const PrimeField& field, Eigen::Index n, const Fp& weight,
                                        std::uint64_t begin, std::uint64_t end,
                                        bool record_mismatches) {
    const AlgebraSpec<PrimeField> spec(field, n);
    const bool weight_zero = weight == Fp(0);
    EnumerationSlice slice;

    MatrixOdometer odo(field.modulus(), spec.dim(), begin);
    Matrix<Fp> m(spec.dim(), spec.dim());
    odo.fill(m);

    for (std::uint64_t k = begin; k < end; ++k) {
        const LinearOperator<PrimeField> P(spec, m);
        const bool raw = rb_check(P, weight).holds();
        const bool classified =
            weight_zero ? classify_weight0(P).is_rb() : classify_weight_lambda(P, weight).is_rb();
        slice.rb_count += raw;
        slice.classified_count += classified;
        if (raw != classified) {
            ++slice.mismatch_count;
            if (record_mismatches)
                slice.mismatches.push_back({k, m, raw, classified});
        }
        if (k + 1 < end)
            odo.advance(m);
    }
    return slice;
}

} // namespace detail

/// Iterates every linear map on R over F_p (all p^((n+1)^2) matrices) and
/// checks each one along two independent routes: the raw Rota-Baxter
/// identity over all basis pairs, and the classification predicate on the
/// matrix shape. The two verdicts must agree map by map; any disagreement
/// is recorded as a mismatch. Deterministic regardless of worker count:
/// counts merge by sum and mismatches stay sorted by matrix index.
inline EnumerationReport enumerate_rb(const PrimeField& field, Eigen::Index n, const Fp& weight,
                                      const EnumerationOptions& opts = {}) {
    const AlgebraSpec<PrimeField> spec(field, n);  // validates n
    const unsigned entries = static_cast<unsigned>(spec.dim() * spec.dim());
    const auto total = detail::checked_pow(field.modulus(), entries);
    if (!total || *total > opts.budget) {
        const std::string required = total ? std::to_string(*total) : "more than 2^64";
        throw BudgetExceededError("enumeration over F_" + std::to_string(field.modulus()) + " with n = " +
                                      std::to_string(n) + " requires " + required +
                                      " matrix checks; budget is " + std::to_string(opts.budget),
                                  total.value_or(UINT64_MAX));
    }

    EnumerationReport report{field, n, field.canon(weight)};
    report.total = *total;

    unsigned workers = opts.workers != 0 ? opts.workers : std::thread::hardware_concurrency();
    if (workers < 1)
        workers = 1;
    if (static_cast<std::uint64_t>(workers) > *total)
        workers = static_cast<unsigned>(*total);

    std::vector<detail::EnumerationSlice> slices(workers);
    if (workers == 1) {
        slices[0] = detail::enumerate_slice(field, n, report.weight, 0, *total, opts.record_mismatches);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(workers);
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(*total) * w / workers);
            const std::uint64_t end = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(*total) * (w + 1) / workers);
            threads.emplace_back([&, w, begin, end] {
                try {
                    slices[w] = detail::enumerate_slice(field, n, report.weight, begin, end,
                                                        opts.record_mismatches);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads)
            t.join();
        for (const auto& err : errors)
            if (err)
                std::rethrow_exception(err);
    }

    for (auto& slice : slices) {
        report.rb_count += slice.rb_count;
        report.classified_count += slice.classified_count;
        report.mismatch_count += slice.mismatch_count;
        for (auto& mm : slice.mismatches)
            report.mismatches.push_back(std::move(mm));  // slices are index-ordered
    }
    return report;
}

} // namespace rb
