#ifndef RBQ_REPRO_HPP
#define RBQ_REPRO_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rbq/inverse.hpp"

namespace rbq {

/// Deterministic uniform [0, 1) doubles from the top 53 bits of mt19937_64.
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Column-major fill, matching the vectorization order.
    RealMatrix matrix(Index m, Index n);

private:
    std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultReproSeed = 20240001;

/// One comparison line of a reproduction run. `reference` is the recorded
/// value from the original experiments (NaN when no value was recorded);
/// `pass` compares `achieved` against `tolerance`.
struct ReproLine {
    std::string label;
    double achieved = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ReproResult {
    std::string id;
    std::uint64_t seed = 0;
    std::vector<ReproLine> lines;
    bool pass() const;
};

/// Known ids: 6.1 .. 6.6. Throws std::invalid_argument on other ids.
ReproResult run_example(const std::string& id, std::uint64_t seed = kDefaultReproSeed);

std::vector<std::string> repro_example_ids();

std::string render_report(const ReproResult& result);

} // namespace rbq

#endif
