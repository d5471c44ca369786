#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwis/types.hpp"

namespace mwis {

// Integer weights drawn i.i.d. uniform on [lo, hi].
struct WeightGenSpec {
  Weight lo = 1;
  Weight hi = 200;
  std::uint64_t seed = 0;
};

// splitmix64 step: state += 0x9e3779b97f4a7c15, then the standard mix.
// Weight i is lo + (splitmix64 output i) mod (hi - lo + 1), so vectors are
// bit-reproducible across platforms and implementations.
std::uint64_t splitmix64(std::uint64_t& state);

std::vector<Weight> gen_weights(std::size_t n, const WeightGenSpec& spec);

// Parses `gen:uniform:LO:HI:SEED`; nullopt when `text` is not a generator spec.
std::optional<WeightGenSpec> parse_weight_gen(const std::string& text);

}  // namespace mwis
