#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace milsal {

// Dense 4-D shape (batch, channels, height, width).
struct Shape {
  long n = 0, c = 0, h = 0, w = 0;

  Shape() = default;
  Shape(long n_, long c_, long h_, long w_) : n(n_), c(c_), h(h_), w(w_) {}

  std::size_t numel() const {
    return static_cast<std::size_t>(n) * c * h * w;
  }
  bool operator==(const Shape& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }
  bool operator!=(const Shape& o) const { return !(*this == o); }
  std::string str() const;
};

namespace detail {
struct TensorData {
  Shape shape;
  std::vector<double> value;
  std::vector<double> grad;  // empty until a backward pass needs it
  bool requires_grad = false;
};
}  // namespace detail

// Shared handle to a dense 4-D double array. Copies are shallow; the
// recorded graph keeps operands alive through these handles.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape s, bool requires_grad = false);
  static Tensor full(Shape s, double v, bool requires_grad = false);
  static Tensor from(Shape s, std::vector<double> values, bool requires_grad = false);
  static Tensor scalar(double v, bool requires_grad = false);

  bool defined() const { return d_ != nullptr; }
  const Shape& shape() const { return d_->shape; }
  std::size_t numel() const { return d_->shape.numel(); }

  double* data() { return d_->value.data(); }
  const double* data() const { return d_->value.data(); }
  std::vector<double>& values() { return d_->value; }
  const std::vector<double>& values() const { return d_->value; }

  bool requires_grad() const { return d_->requires_grad; }
  void set_requires_grad(bool b) { d_->requires_grad = b; }

  // Allocates (zeroed) gradient storage of identical shape on first use.
  void ensure_grad();
  bool has_grad() const { return !d_->grad.empty(); }
  double* grad() { return d_->grad.data(); }
  const double* grad() const { return d_->grad.data(); }
  std::vector<double>& grad_values() { return d_->grad; }
  void zero_grad();

  std::size_t index(long n, long c, long h, long w) const {
    const Shape& s = d_->shape;
    return ((static_cast<std::size_t>(n) * s.c + c) * s.h + h) * s.w + w;
  }
  double at(long n, long c, long h, long w) const { return d_->value[index(n, c, h, w)]; }
  double& at(long n, long c, long h, long w) { return d_->value[index(n, c, h, w)]; }

  // Deep copy with fresh storage; gradients are not copied.
  Tensor clone() const;

  bool same_data(const Tensor& o) const { return d_ == o.d_; }

 private:
  std::shared_ptr<detail::TensorData> d_;
};

// Define-by-run tape. Operations append their backward step while the
// forward pass runs; backward() replays them in exact reverse order.
// A Graph is single-use: rebuild it for every forward pass.
class Graph {
 public:
  void record(std::function<void()> backward_step) {
    steps_.push_back(std::move(backward_step));
  }

  // loss must be scalar (numel == 1). Seeds d(loss)/d(loss) = 1 and runs
  // every recorded step in reverse. Throws if called twice or on a
  // non-scalar loss.
  void backward(Tensor& loss);

  std::size_t size() const { return steps_.size(); }
  bool consumed() const { return consumed_; }

 private:
  std::vector<std::function<void()>> steps_;
  bool consumed_ = false;
};

}  // namespace milsal
