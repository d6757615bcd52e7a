#pragma once

// Independent reference implementations used as test oracles. Nothing here calls into the
// library's function or transform code paths (dummy positions are taken as an input).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle
{
    inline double onemax(const std::vector<int> &x)
    {
        double s = 0;
        for (const auto b : x)
            if (b == 1)
                s += 1;
        return s;
    }

    inline double leadingones(const std::vector<int> &x)
    {
        std::size_t i = 0;
        while (i < x.size() && x[i] == 1)
            ++i;
        return static_cast<double>(i);
    }

    inline double linear_harmonic(const std::vector<int> &x)
    {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += static_cast<double>((i + 1) * static_cast<std::size_t>(x[i]));
        return s;
    }

    inline std::vector<int> neutrality(const std::vector<int> &x, std::size_t mu)
    {
        std::vector<int> out;
        for (std::size_t b = 0; (b + 1) * mu <= x.size(); ++b)
        {
            std::size_t ones = 0;
            for (std::size_t j = 0; j < mu; ++j)
                ones += static_cast<std::size_t>(x[b * mu + j]);
            out.push_back(ones * 2 > mu ? 1 : 0);
        }
        return out;
    }

    inline std::vector<int> epistasis(const std::vector<int> &x, std::size_t nu)
    {
        std::vector<int> out = x;
        const std::uint64_t modulus = std::uint64_t{1} << nu;
        for (std::size_t b = 0; (b + 1) * nu <= x.size(); ++b)
        {
            std::uint64_t v = 0;
            for (std::size_t j = 0; j < nu; ++j)
                v = v * 2 + static_cast<std::uint64_t>(x[b * nu + j]);
            const auto w = (5 * v + 1) % modulus;
            for (std::size_t j = 0; j < nu; ++j)
                out[b * nu + j] = static_cast<int>((w >> (nu - 1 - j)) % 2);
        }
        return out;
    }

    //! Explicit permutation table for the pair-swap ruggedness, built top-down.
    inline std::vector<int> ruggedness_table(int n)
    {
        std::vector<int> r(static_cast<std::size_t>(n) + 1);
        r[static_cast<std::size_t>(n)] = n;
        int hi = n - 1;
        while (hi >= 1)
        {
            r[static_cast<std::size_t>(hi)] = hi - 1;
            r[static_cast<std::size_t>(hi - 1)] = hi;
            hi -= 2;
        }
        if (hi == 0)
            r[0] = 0;
        return r;
    }

    inline double sphere(const std::vector<double> &x)
    {
        double s = 0;
        for (const auto v : x)
            s += v * v;
        return s;
    }

    inline double ellipsoid(const std::vector<double> &x)
    {
        const auto n = x.size();
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double e = n == 1 ? 0.0 : 6.0 * static_cast<double>(i) / static_cast<double>(n - 1);
            s += std::pow(10.0, e) * x[i] * x[i];
        }
        return s;
    }

    inline double rastrigin(const std::vector<double> &x)
    {
        double s = 10.0 * static_cast<double>(x.size());
        for (const auto v : x)
            s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
        return s;
    }

    inline double rosenbrock(const std::vector<double> &x)
    {
        double s = 0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i)
            s += 100.0 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1.0 - x[i], 2);
        return s;
    }

    inline bool relative_close(double a, double b, double rel)
    {
        return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
    }

    //! E[max of k iid Binomial(n, 1/2)] = sum_{t>=1} P(max >= t) = sum_t 1 - F(t-1)^k.
    inline double expected_max_binomial(int n, double k)
    {
        std::vector<double> pmf(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            pmf[static_cast<std::size_t>(i)] =
                std::exp(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) - n * std::log(2.0));
        double expectation = 0, cdf = 0;
        for (int t = 1; t <= n; ++t)
        {
            cdf += pmf[static_cast<std::size_t>(t - 1)];
            expectation += 1.0 - std::pow(std::min(cdf, 1.0), k);
        }
        return expectation;
    }

    //! n * H_n: expected coupon-collector time, the RLS hitting time from the all-zeros worst case.
    inline double coupon_collector(int n)
    {
        double h = 0;
        for (int i = 1; i <= n; ++i)
            h += 1.0 / i;
        return n * h;
    }
} // namespace oracle
