#include "samplekit/small.hpp"

namespace samplekit {

CompareChangeNetwork build_network(std::uint32_t k) {
    if (k < 2) throw std::invalid_argument("build_network: k must be >= 2");
    CompareChangeNetwork net;
    net.k = k;
    net.layers.reserve(k - 1);
    for (std::uint32_t anchor = k - 1; anchor-- > 0;) {
        std::vector<CompareChangeStep> layer;
        layer.reserve(k - 1 - anchor);
        for (std::uint32_t target = anchor + 1; target < k; ++target)
            layer.push_back({target, anchor});
        net.layers.push_back(std::move(layer));
    }
    return net;
}

} // namespace samplekit
