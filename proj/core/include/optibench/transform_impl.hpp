#pragma once

#include <cmath>
#include <random>

namespace optibench::transform
{
    template <typename Rng>
    Matrix random_rotation(const std::size_t n, Rng &rng)
    {
        constexpr double singular_tolerance = 1e-10;
        std::normal_distribution<double> normal(0.0, 1.0);
        Matrix m(n);
        for (;;)
        {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    m(r, c) = normal(rng);

            bool singular = false;
            for (std::size_t i = 0; i < n && !singular; ++i)
            {
                for (std::size_t j = 0; j < i; ++j)
                {
                    double dot = 0.0;
                    for (std::size_t c = 0; c < n; ++c)
                        dot += m(i, c) * m(j, c);
                    for (std::size_t c = 0; c < n; ++c)
                        m(i, c) -= dot * m(j, c);
                }
                double norm = 0.0;
                for (std::size_t c = 0; c < n; ++c)
                    norm += m(i, c) * m(i, c);
                norm = std::sqrt(norm);
                if (norm < singular_tolerance)
                {
                    singular = true;
                    break;
                }
                for (std::size_t c = 0; c < n; ++c)
                    m(i, c) /= norm;
            }
            if (!singular)
                return m;
        }
    }
} // namespace optibench::transform
