#pragma once

#include <string_view>
#include <vector>

#include "eqaoa/mixers.hpp"
#include "eqaoa/stats.hpp"

namespace eqaoa {

/// Bundled reference datasets: raw per-trial final energies for the builtin
/// instance graphs, keyed by graph and mixer. Every value is a multiple of
/// 2^-10 (1024-shot energy estimates).
struct ReferenceFixture {
    std::string_view graph;
    MixerKind mixer;
    std::vector<double> values;
};

const std::vector<ReferenceFixture>& reference_fixtures();

// nullptr when the combination was not published (e.g. gamma6 / hchi).
const ReferenceFixture* find_fixture(std::string_view graph, MixerKind mixer);

// Throws when absent; label is "<graph>/<mixer>".
SampleSet fixture_samples(std::string_view graph, MixerKind mixer);

}  // namespace eqaoa
