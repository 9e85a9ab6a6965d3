#include "model.hpp"

#include <numbers>
#include <stdexcept>

namespace bqa {

void validate(const ModelParams& params) {
    if (params.p < 2)
        throw std::invalid_argument("ModelParams: p must be an integer >= 2");
    if (!(params.chi >= 0.0 && params.chi < 2.0 * std::numbers::pi))
        throw std::invalid_argument("ModelParams: chi must lie in [0, 2*pi)");
}

}  // namespace bqa
