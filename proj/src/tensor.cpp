#include "milsal/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace milsal {

std::string Shape::str() const {
  std::ostringstream os;
  os << "(" << n << "," << c << "," << h << "," << w << ")";
  return os.str();
}

Tensor Tensor::zeros(Shape s, bool requires_grad) {
  Tensor t;
  t.d_ = std::make_shared<detail::TensorData>();
  t.d_->shape = s;
  t.d_->value.assign(s.numel(), 0.0);
  t.d_->requires_grad = requires_grad;
  return t;
}

Tensor Tensor::full(Shape s, double v, bool requires_grad) {
  Tensor t = zeros(s, requires_grad);
  for (auto& x : t.d_->value) x = v;
  return t;
}

Tensor Tensor::from(Shape s, std::vector<double> values, bool requires_grad) {
  if (values.size() != s.numel()) {
    throw std::invalid_argument("Tensor::from: " + std::to_string(values.size()) +
                                " values for shape " + s.str());
  }
  Tensor t;
  t.d_ = std::make_shared<detail::TensorData>();
  t.d_->shape = s;
  t.d_->value = std::move(values);
  t.d_->requires_grad = requires_grad;
  return t;
}

Tensor Tensor::scalar(double v, bool requires_grad) {
  return full(Shape(1, 1, 1, 1), v, requires_grad);
}

void Tensor::ensure_grad() {
  if (d_->grad.empty()) d_->grad.assign(d_->shape.numel(), 0.0);
}

void Tensor::zero_grad() {
  if (!d_->grad.empty()) d_->grad.assign(d_->shape.numel(), 0.0);
}

Tensor Tensor::clone() const {
  Tensor t;
  t.d_ = std::make_shared<detail::TensorData>();
  t.d_->shape = d_->shape;
  t.d_->value = d_->value;
  t.d_->requires_grad = d_->requires_grad;
  return t;
}

void Graph::backward(Tensor& loss) {
  if (consumed_) {
    throw std::runtime_error("Graph::backward: graph already consumed; re-record the forward pass");
  }
  if (loss.numel() != 1) {
    throw std::invalid_argument("Graph::backward: loss must be scalar, got shape " +
                                loss.shape().str());
  }
  consumed_ = true;
  loss.ensure_grad();
  loss.grad()[0] = 1.0;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) (*it)();
}

}  // namespace milsal
