#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "gvcnet/common.hpp"
#include "gvcnet/matrix.hpp"
#include "gvcnet/rng.hpp"

namespace gvc {

struct ParamEntry {
    Matrix value;
    Matrix grad;
    Matrix m;  // Adam first moment
    Matrix v;  // Adam second moment
};

// Named parameter tensors with paired gradient buffers and Adam state.
// std::map keeps iteration order (and thus every update sweep) deterministic;
// map nodes are stable, so long-lived pointers into entries remain valid.
class ParamStore {
public:
    Matrix& create(const std::string& name, std::size_t rows, std::size_t cols) {
        require(entries_.find(name) == entries_.end(), "ParamStore: duplicate entry " + name);
        ParamEntry e{Matrix(rows, cols), Matrix(rows, cols), Matrix(rows, cols), Matrix(rows, cols)};
        return entries_.emplace(name, std::move(e)).first->second.value;
    }

    ParamEntry& at(const std::string& name) {
        auto it = entries_.find(name);
        require(it != entries_.end(), "ParamStore: unknown entry " + name);
        return it->second;
    }
    const ParamEntry& at(const std::string& name) const {
        auto it = entries_.find(name);
        require(it != entries_.end(), "ParamStore: unknown entry " + name);
        return it->second;
    }

    bool contains(const std::string& name) const { return entries_.count(name) != 0; }

    auto begin() { return entries_.begin(); }
    auto end() { return entries_.end(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    std::size_t size() const { return entries_.size(); }

    std::uint64_t step_count() const { return step_count_; }

    void zero_grads() {
        for (auto& [name, e] : entries_) e.grad.fill(0.0);
    }

private:
    friend void adam_step(ParamStore&, double, double, double, double);
    std::map<std::string, ParamEntry> entries_;
    std::uint64_t step_count_ = 0;
};

// One Adam update with bias correction over every entry; gradients are
// consumed (zeroed) afterwards. Rejects non-finite gradients by name.
inline void adam_step(ParamStore& store, double lr, double beta1 = 0.9, double beta2 = 0.999,
                      double eps = 1e-8) {
    require(lr > 0.0, "adam_step: lr must be positive");
    require(beta1 >= 0.0 && beta1 < 1.0, "adam_step: beta1 out of [0,1)");
    require(beta2 >= 0.0 && beta2 < 1.0, "adam_step: beta2 out of [0,1)");

    for (const auto& [name, e] : store.entries_) {
        if (!e.grad.all_finite()) throw NumericError("adam_step: non-finite gradient in " + name);
    }

    const double t = static_cast<double>(store.step_count_ + 1);
    const double bc1 = 1.0 - std::pow(beta1, t);
    const double bc2 = 1.0 - std::pow(beta2, t);

    for (auto& [name, e] : store.entries_) {
        for (std::size_t k = 0; k < e.value.size(); ++k) {
            const double g = e.grad[k];
            e.m[k] = beta1 * e.m[k] + (1.0 - beta1) * g;
            e.v[k] = beta2 * e.v[k] + (1.0 - beta2) * g * g;
            const double mhat = e.m[k] / bc1;
            const double vhat = e.v[k] / bc2;
            e.value[k] -= lr * mhat / (std::sqrt(vhat) + eps);
        }
        e.grad.fill(0.0);
    }
    ++store.step_count_;
}

// Xavier-uniform fan-in/fan-out init for weight matrices.
inline void xavier_init(Matrix& w, std::size_t fan_in, std::size_t fan_out, Rng& rng) {
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = rng.uniform(-limit, limit);
}

}  // namespace gvc
