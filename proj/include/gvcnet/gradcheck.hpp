#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gvcnet/common.hpp"
#include "gvcnet/matrix.hpp"
#include "gvcnet/param_store.hpp"

namespace gvc {

// Central differences of a scalar function of the store's parameter values.
// The store is perturbed in place, one coordinate at a time, and restored;
// `f` must read the current values through the store (or aliased views).
inline std::map<std::string, Matrix> central_diff_gradient(const std::function<double()>& f,
                                                           ParamStore& store, double h) {
    require(h > 0.0, "central_diff_gradient: h must be positive");
    std::map<std::string, Matrix> out;
    for (auto& [name, e] : store) {
        Matrix g(e.value.rows(), e.value.cols());
        for (std::size_t k = 0; k < e.value.size(); ++k) {
            const double saved = e.value[k];
            e.value[k] = saved + h;
            const double fp = f();
            e.value[k] = saved - h;
            const double fm = f();
            e.value[k] = saved;
            if (!is_finite(fp) || !is_finite(fm))
                throw NumericError("central_diff_gradient: non-finite f at " + name + "[" +
                                   std::to_string(k) + "]");
            g[k] = (fp - fm) / (2.0 * h);
        }
        out.emplace(name, std::move(g));
    }
    return out;
}

struct GradCheckEntry {
    std::string name;
    double max_rel_error = 0.0;
    std::size_t worst_coord = 0;
};

struct GradCheckReport {
    std::vector<GradCheckEntry> entries;
    double max_rel_error = 0.0;  // 0 for a zero-parameter function (vacuous pass)
    bool pass = true;
    double tol = 0.0;
};

// Compares the analytic gradients left in store.grad by `forward_backward`
// against central differences of `forward_backward`'s return value.
// Relative error per coordinate: |gad - gfd| / max(|gad|, |gfd|, 1e-8).
inline GradCheckReport check_gradients(const std::function<double()>& forward_backward,
                                       ParamStore& store, double h, double tol) {
    store.zero_grads();
    forward_backward();

    std::map<std::string, Matrix> analytic;
    for (auto& [name, e] : store) {
        if (!e.grad.all_finite()) throw NumericError("check_gradients: non-finite analytic gradient in " + name);
        analytic.emplace(name, e.grad);
    }

    auto numeric = central_diff_gradient(forward_backward, store, h);

    GradCheckReport report;
    report.tol = tol;
    for (auto& [name, gfd] : numeric) {
        const Matrix& gad = analytic.at(name);
        if (!gad.same_shape(gfd))
            throw ValidationError("check_gradients: shape mismatch for " + name);
        GradCheckEntry entry{name, 0.0, 0};
        for (std::size_t k = 0; k < gfd.size(); ++k) {
            const double denom = std::max({std::fabs(gad[k]), std::fabs(gfd[k]), 1e-8});
            const double rel = std::fabs(gad[k] - gfd[k]) / denom;
            if (rel > entry.max_rel_error) {
                entry.max_rel_error = rel;
                entry.worst_coord = k;
            }
        }
        report.max_rel_error = std::max(report.max_rel_error, entry.max_rel_error);
        report.entries.push_back(std::move(entry));
    }
    report.pass = report.max_rel_error < tol;
    return report;
}

}  // namespace gvc
