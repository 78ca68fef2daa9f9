#include "ghzw/noise.hpp"

#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "ghzw/errors.hpp"
#include "ghzw/rng.hpp"

namespace ghzw {

std::string_view to_string(PerturbationMode mode) {
    switch (mode) {
        case PerturbationMode::complex_amplitude:
            return "complex";
        case PerturbationMode::real_only:
            return "real";
    }
    return "unknown";
}

void validate(const GaussianNoiseSpec& spec) {
    if (!std::isfinite(spec.mean)) {
        throw ArgumentError("gaussian mean must be finite");
    }
    if (!std::isfinite(spec.stddev) || spec.stddev < 0.0) {
        throw ArgumentError("gaussian standard deviation must be finite and >= 0, got " +
                            std::to_string(spec.stddev));
    }
    if (spec.ensemble_size < 1) {
        throw ArgumentError("ensemble size must be at least 1");
    }
}

void validate(const WhiteNoiseSpec& spec) {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw ArgumentError("white-noise probability must lie in [0, 1], got " +
                            std::to_string(spec.p));
    }
}

Ket gaussian_perturb(const Ket& psi, const GaussianNoiseSpec& spec,
                     std::size_t realization_index, int attempt) {
    validate(spec);
    if (spec.stddev == 0.0 && spec.mean == 0.0) {
        return psi;
    }
    GaussianStream normal(substream_seed(spec.seed, realization_index,
                                         static_cast<std::uint64_t>(attempt)));
    std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    for (Complex& a : amps) {
        const double re = spec.mean + spec.stddev * normal.next();
        const double im = spec.mode == PerturbationMode::complex_amplitude
                              ? spec.mean + spec.stddev * normal.next()
                              : 0.0;
        a += Complex{re, im};
    }
    return Ket::normalized(std::move(amps));
}

Ket perturb_with_retries(const Ket& psi, const GaussianNoiseSpec& spec,
                         std::size_t realization_index) {
    for (int attempt = 0;; ++attempt) {
        try {
            return gaussian_perturb(psi, spec, realization_index, attempt);
        } catch (const DegeneratePerturbationError&) {
            if (attempt >= kPerturbationRetries) {
                throw;
            }
        }
    }
}

DensityMatrix white_noise(const DensityMatrix& rho, const WhiteNoiseSpec& spec) {
    validate(spec);
    const std::size_t dim = rho.dim();
    const double keep = 1.0 - spec.p;
    const double floor = spec.p / static_cast<double>(dim);
    ComplexMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out(i, j) = keep * rho(i, j);
        }
        out(i, i) += floor;
    }
    return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix ensemble_average(const Ket& psi, const GaussianNoiseSpec& spec) {
    validate(spec);
    if (spec.stddev == 0.0 && spec.mean == 0.0) {
        return ket_to_dm(psi);
    }
    const std::size_t dim = psi.dim();
    const std::size_t count = spec.ensemble_size;
    const auto m_count = static_cast<std::ptrdiff_t>(count);

    std::vector<Complex> kets(count * dim);
    std::vector<std::exception_ptr> failures(count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < m_count; ++k) {
        try {
            const Ket draw = perturb_with_retries(psi, spec, static_cast<std::size_t>(k));
            std::copy(draw.amplitudes().begin(), draw.amplitudes().end(),
                      kets.begin() + k * static_cast<std::ptrdiff_t>(dim));
        } catch (...) {
            failures[static_cast<std::size_t>(k)] = std::current_exception();
        }
    }
    for (const std::exception_ptr& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    ComplexMatrix rho(dim, dim);
    const auto m_dim = static_cast<std::ptrdiff_t>(dim);
    const double weight = static_cast<double>(count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < m_dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex sum{};
            for (std::size_t k = 0; k < count; ++k) {
                const Complex* v = kets.data() + k * dim;
                sum += v[i] * std::conj(v[j]);
            }
            rho(static_cast<std::size_t>(i), j) = sum / weight;
        }
    }
    return DensityMatrix::unchecked(std::move(rho));
}

}  // namespace ghzw
