#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "types.hpp"

//! Untransformed base functions f. Everything here is pure.
namespace optibench::functions
{
    // Pseudo-Boolean (maximization)

    [[nodiscard]] double onemax(std::span<const int> x);

    //! Length of the all-ones prefix.
    [[nodiscard]] double leadingones(std::span<const int> x);

    //! Sum of i * x_i with 1-based index i.
    [[nodiscard]] double linear_harmonic(std::span<const int> x);

    // W-model layers

    //! Ascending list of m distinct positions out of n, sampled without replacement from seed.
    [[nodiscard]] std::vector<std::size_t> dummy_positions(std::size_t n, std::size_t m, std::uint64_t seed);

    //! Keeps the bits at dummy_positions(n, m, seed). Throws DomainError unless 1 <= m <= n.
    [[nodiscard]] Bits w_dummy(std::span<const int> x, std::size_t m, std::uint64_t seed);

    //! Same as w_dummy with a precomputed, ascending position set.
    [[nodiscard]] Bits w_dummy(std::span<const int> x, std::span<const std::size_t> positions);

    //! Majority vote per block of mu bits; ties resolve to 0 and a trailing partial block is dropped.
    [[nodiscard]] Bits w_neutrality(std::span<const int> x, std::size_t mu);

    //! Block bijection v -> (5v + 1) mod 2^nu on full blocks (first bit most significant).
    [[nodiscard]] std::uint64_t epistasis_block(std::uint64_t v, std::size_t nu);

    //! Applies epistasis_block to every full block of nu bits; a trailing partial block is copied.
    [[nodiscard]] Bits w_epistasis(std::span<const int> x, std::size_t nu);

    //! Optimum-preserving permutation of {0..n}: n is fixed, then (n-1, n-2), (n-3, n-4), ... swap.
    [[nodiscard]] int w_ruggedness(int y, int n);

    struct WModelParams
    {
        std::size_t dummy_m = 1;                 //!< bits kept by the dummy layer (== n disables it)
        std::size_t neutrality_mu = 1;           //!< 1 disables the layer
        std::optional<std::size_t> epistasis_nu; //!< nullopt skips the layer
        bool ruggedness = false;
        std::uint64_t dummy_seed = 0;
    };

    //! Length of the bit string fed to OneMax after dummy and neutrality layers.
    [[nodiscard]] std::size_t wmodel_effective_length(const WModelParams &params);

    //! Composition dummy -> neutrality -> epistasis -> OneMax -> ruggedness.
    class WModel
    {
    public:
        WModel(std::size_t n, WModelParams params);

        [[nodiscard]] double operator()(std::span<const int> x) const;

        [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
        [[nodiscard]] std::size_t effective_length() const noexcept { return effective_; }
        [[nodiscard]] const WModelParams &params() const noexcept { return params_; }

        //! One optimal input (value == effective_length()).
        [[nodiscard]] Bits optimal_solution() const;

    private:
        std::size_t n_;
        WModelParams params_;
        std::vector<std::size_t> positions_;
        std::size_t effective_;
    };

    // Continuous (minimization)

    [[nodiscard]] double sphere(std::span<const double> x);

    //! Sum of 10^(6 (i-1)/(n-1)) x_i^2; x_1^2 when n == 1.
    [[nodiscard]] double ellipsoid(std::span<const double> x);

    [[nodiscard]] double rastrigin(std::span<const double> x);

    [[nodiscard]] double rosenbrock(std::span<const double> x);
} // namespace optibench::functions
