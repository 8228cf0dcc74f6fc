#ifndef LIMSPACE_RANDOM_HPP
#define LIMSPACE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "limspace/functionals.hpp"
#include "limspace/lim_function.hpp"
#include "limspace/signed_measure.hpp"

namespace limspace {

// Deterministic random source for the property suites. Doubles are derived
// from the raw engine bits so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

private:
    std::mt19937_64 eng_;
};

struct GenOptions {
    std::size_t dim = 1;
    int max_breaks = 6;
    double t_max = 8.0;
    double amplitude = 2.0;
};

// Compactly supported piecewise-linear core on [0, t_max].
GridFunction random_core_half(Rng& rng, const GenOptions& opt = {});

// Core spanning negative and positive territory, zero at both support edges.
GridFunction random_core_line(Rng& rng, const GenOptions& opt = {});

LimFunctionHalf random_lim_half(Rng& rng, const GenOptions& opt = {});
LimFunctionLine random_lim_line(Rng& rng, const GenOptions& opt = {});

StepFunction random_step(Rng& rng, double lo, double hi, const GenOptions& opt = {});

// Measure with a few atoms and an optional density; infinite atoms only when
// requested (the extended representation).
SignedMeasure random_measure(Rng& rng, Domain domain, bool with_density, bool allow_infinite_atoms,
                             const GenOptions& opt = {});

MeasureFunctionalHalf random_measure_functional(Rng& rng, const GenOptions& opt = {});
DensityFunctionalHalf random_density_functional(Rng& rng, double q, const GenOptions& opt = {});
SequenceFunctional random_sequence_functional(Rng& rng, std::size_t max_len = 6);
LimSequence random_lim_sequence(Rng& rng, std::size_t max_len = 6);

}  // namespace limspace

#endif
