#include "optibench/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "optibench/errors.hpp"

namespace optibench::functions
{
    double onemax(const std::span<const int> x)
    {
        return static_cast<double>(std::count(x.begin(), x.end(), 1));
    }

    double leadingones(const std::span<const int> x)
    {
        const auto first_zero = std::find_if(x.begin(), x.end(), [](const int b) { return b != 1; });
        return static_cast<double>(std::distance(x.begin(), first_zero));
    }

    double linear_harmonic(const std::span<const int> x)
    {
        double result = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            result += static_cast<double>(i + 1) * x[i];
        return result;
    }

    std::vector<std::size_t> dummy_positions(const std::size_t n, const std::size_t m, const std::uint64_t seed)
    {
        if (m < 1 || m > n)
            throw DomainError("dummy layer needs 1 <= m <= n, got m=" + std::to_string(m) +
                              ", n=" + std::to_string(n));

        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::mt19937_64 gen(seed);
        for (std::size_t i = 0; i < m; ++i)
        {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(idx[i], idx[pick(gen)]);
        }
        idx.resize(m);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

    Bits w_dummy(const std::span<const int> x, const std::span<const std::size_t> positions)
    {
        Bits out;
        out.reserve(positions.size());
        for (const auto p : positions)
            out.push_back(x[p]);
        return out;
    }

    Bits w_dummy(const std::span<const int> x, const std::size_t m, const std::uint64_t seed)
    {
        const auto positions = dummy_positions(x.size(), m, seed);
        return w_dummy(x, positions);
    }

    Bits w_neutrality(const std::span<const int> x, const std::size_t mu)
    {
        if (mu < 1)
            throw DomainError("neutrality block size must be >= 1");
        Bits out;
        out.reserve(x.size() / mu);
        for (std::size_t start = 0; start + mu <= x.size(); start += mu)
        {
            const auto ones = static_cast<std::size_t>(std::count(x.begin() + start, x.begin() + start + mu, 1));
            out.push_back(2 * ones > mu ? 1 : 0);
        }
        return out;
    }

    namespace
    {
        std::uint64_t block_mask(const std::size_t nu)
        {
            return nu >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nu) - 1;
        }
    } // namespace

    std::uint64_t epistasis_block(const std::uint64_t v, const std::size_t nu)
    {
        return (5 * v + 1) & block_mask(nu);
    }

    Bits w_epistasis(const std::span<const int> x, const std::size_t nu)
    {
        if (nu < 1 || nu > 63)
            throw DomainError("epistasis block size must be in [1, 63]");
        Bits out(x.begin(), x.end());
        for (std::size_t start = 0; start + nu <= x.size(); start += nu)
        {
            std::uint64_t v = 0;
            for (std::size_t j = 0; j < nu; ++j)
                v = (v << 1) | static_cast<std::uint64_t>(x[start + j] & 1);
            const auto w = epistasis_block(v, nu);
            for (std::size_t j = 0; j < nu; ++j)
                out[start + j] = static_cast<int>((w >> (nu - 1 - j)) & 1);
        }
        return out;
    }

    int w_ruggedness(const int y, const int n)
    {
        if (y < 0 || y > n)
            throw DomainError("ruggedness input " + std::to_string(y) + " outside [0, " + std::to_string(n) + "]");
        if (y == n)
            return n;
        const int depth = n - 1 - y;
        if (depth % 2 == 0)
            return y == 0 ? 0 : y - 1;
        return y + 1;
    }

    std::size_t wmodel_effective_length(const WModelParams &params)
    {
        return params.neutrality_mu == 0 ? 0 : params.dummy_m / params.neutrality_mu;
    }

    WModel::WModel(const std::size_t n, WModelParams params)
        : n_(n), params_(params), positions_(dummy_positions(n, params.dummy_m, params.dummy_seed)),
          effective_(wmodel_effective_length(params))
    {
        if (params_.neutrality_mu < 1)
            throw DomainError("W-model neutrality block size must be >= 1");
        if (params_.epistasis_nu && (*params_.epistasis_nu < 1 || *params_.epistasis_nu > 63))
            throw DomainError("W-model epistasis block size must be in [1, 63]");
        if (effective_ < 1)
            throw DomainError("W-model layers leave no bits: n=" + std::to_string(n) +
                              ", m=" + std::to_string(params_.dummy_m) +
                              ", mu=" + std::to_string(params_.neutrality_mu));
    }

    double WModel::operator()(const std::span<const int> x) const
    {
        Bits bits = params_.dummy_m == n_ ? Bits(x.begin(), x.end()) : w_dummy(x, positions_);
        if (params_.neutrality_mu > 1)
            bits = w_neutrality(bits, params_.neutrality_mu);
        if (params_.epistasis_nu)
            bits = w_epistasis(bits, *params_.epistasis_nu);
        const auto y = static_cast<int>(onemax(bits));
        if (params_.ruggedness)
            return w_ruggedness(y, static_cast<int>(effective_));
        return y;
    }

    Bits WModel::optimal_solution() const
    {
        // Walk the layers backwards from the all-ones OneMax input.
        Bits target(effective_, 1);
        if (params_.epistasis_nu)
        {
            const auto nu = *params_.epistasis_nu;
            // 5 is odd, so it is invertible mod 2^64 (Newton iteration doubles correct bits).
            std::uint64_t inv5 = 5;
            for (int i = 0; i < 6; ++i)
                inv5 *= 2 - 5 * inv5;
            const auto mask = block_mask(nu);
            const auto preimage = ((mask - 1) * inv5) & mask;
            for (std::size_t start = 0; start + nu <= target.size(); start += nu)
                for (std::size_t j = 0; j < nu; ++j)
                    target[start + j] = static_cast<int>((preimage >> (nu - 1 - j)) & 1);
        }

        Bits selected(params_.dummy_m, 1);
        for (std::size_t i = 0; i < target.size(); ++i)
            for (std::size_t j = 0; j < params_.neutrality_mu; ++j)
                selected[i * params_.neutrality_mu + j] = target[i];

        Bits x(n_, 1);
        for (std::size_t i = 0; i < positions_.size(); ++i)
            x[positions_[i]] = selected[i];
        return x;
    }

    double sphere(const std::span<const double> x)
    {
        return std::transform_reduce(x.begin(), x.end(), 0.0, std::plus<>{}, [](const double v) { return v * v; });
    }

    double ellipsoid(const std::span<const double> x)
    {
        const auto n = x.size();
        if (n == 1)
            return x[0] * x[0];
        double result = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            result += std::pow(10.0, 6.0 * static_cast<double>(i) / static_cast<double>(n - 1)) * x[i] * x[i];
        return result;
    }

    double rastrigin(const std::span<const double> x)
    {
        double result = 10.0 * static_cast<double>(x.size());
        for (const auto v : x)
            result += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
        return result;
    }

    double rosenbrock(const std::span<const double> x)
    {
        double result = 0.0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i)
        {
            const auto a = x[i + 1] - x[i] * x[i];
            const auto b = 1.0 - x[i];
            result += 100.0 * a * a + b * b;
        }
        return result;
    }
} // namespace optibench::functions
