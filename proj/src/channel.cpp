#include "spectra/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spectra {

double distance_m(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

ComplexGain sample_gain(double distance, Rng& rng) {
    if (!(distance >= kMinDistanceM)) {
        throw std::domain_error("sample_gain: distance " + std::to_string(distance) +
                                " m is below the " + std::to_string(kMinDistanceM) +
                                " m floor");
    }
    const double sigma = 1.0 / (distance * std::sqrt(2.0));
    auto [re, im] = rng.normal_pair(sigma);
    return {re, im};
}

std::vector<ChannelSet> build_channels(const Topology& topo, Rng& rng) {
    if (topo.st.size() != topo.sr.size()) {
        throw std::invalid_argument("build_channels: st/sr size mismatch");
    }
    std::vector<ChannelSet> out;
    out.reserve(topo.st.size());
    for (std::size_t i = 0; i < topo.st.size(); ++i) {
        ChannelSet ch;
        ch.g_ps = sample_gain(distance_m(topo.pt, topo.st[i]), rng).power_gain();
        ch.g_sp = sample_gain(distance_m(topo.st[i], topo.pr), rng).power_gain();
        ch.g_ss = sample_gain(distance_m(topo.st[i], topo.sr[i]), rng).power_gain();
        ch.g_se = sample_gain(distance_m(topo.st[i], topo.ed), rng).power_gain();
        out.push_back(ch);
    }
    return out;
}

}  // namespace spectra
