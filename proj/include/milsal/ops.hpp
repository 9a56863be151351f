#pragma once

#include <vector>

#include "milsal/tensor.hpp"

namespace milsal {

// Differentiable operations. Each takes the recording graph as first
// argument; pass nullptr for a plain forward pass (no tape, no gradients).
// Output requires_grad iff a graph is given and any input requires grad.

// kernel shape is (out_channels, in_channels, kh, kw) with kh == kw in {1, 3};
// stride in {1, 2}; padding zeros per side (same-style: (k-1)/2).
Tensor conv2d(Graph* g, const Tensor& input, const Tensor& kernel, int stride, int padding);

// bias shape (1, c, 1, 1), broadcast over batch and spatial dims.
Tensor bias_add(Graph* g, const Tensor& x, const Tensor& bias);

Tensor relu(Graph* g, const Tensor& x);

// Numerically stable branch form; output clamped to (0, 1) open interval
// so downstream logs never see an exact 0 or 1.
Tensor sigmoid(Graph* g, const Tensor& x);

Tensor add(Graph* g, const Tensor& a, const Tensor& b);

Tensor concat_channels(Graph* g, const std::vector<Tensor>& parts);

// Each pixel replicated into a 2x2 block; backward sums block gradients.
Tensor nearest_upsample2x(Graph* g, const Tensor& x);

// Non-recorded forward utility (even spatial dims required). Inverse of
// nearest_upsample2x on its image.
Tensor avg_pool2x2(const Tensor& x);

}  // namespace milsal
