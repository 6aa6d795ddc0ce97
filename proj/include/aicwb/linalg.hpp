// Exact Gaussian elimination over a field, tracking how each inserted vector
// decomposes over the previously inserted ones.  Drives minimal-polynomial
// computation and the bounded subalgebra-membership searches.
#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"

namespace aicwb {

template <class C>
class LinearSpan {
public:
    explicit LinearSpan(std::size_t dim) : dim_(dim) {}

    std::size_t size() const { return inserted_; }

    // If v lies in the span, returns its coefficients over the inserted
    // vectors (insertion order); otherwise nullopt.
    std::optional<std::vector<C>> express(const std::vector<C>& v) const {
        std::vector<C> rem, combo;
        reduce(v, rem, combo);
        for (const auto& c : rem)
            if (!c.is_zero()) return std::nullopt;
        return combo;
    }

    // Inserts v if independent (returns nullopt), otherwise returns its
    // expression over the previously inserted vectors.
    std::optional<std::vector<C>> insert_or_express(const std::vector<C>& v) {
        std::vector<C> rem, combo;
        reduce(v, rem, combo);
        std::size_t piv = dim_;
        for (std::size_t i = 0; i < dim_; ++i)
            if (!rem[i].is_zero()) {
                piv = i;
                break;
            }
        if (piv == dim_) return combo;
        C inv = rem[piv].inverse();
        Row row;
        row.pivot = piv;
        row.vec.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i) row.vec[i] = rem[i] * inv;
        row.expr.assign(inserted_ + 1, C(0));
        for (std::size_t j = 0; j < combo.size(); ++j) row.expr[j] = -(combo[j] * inv);
        row.expr[inserted_] = inv;
        // keep earlier rows reduced against the new pivot
        for (auto& r : rows_) {
            C f = r.vec[piv];
            if (f.is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i) r.vec[i] = r.vec[i] - f * row.vec[i];
            r.expr.resize(inserted_ + 1, C(0));
            for (std::size_t j = 0; j <= inserted_; ++j) r.expr[j] = r.expr[j] - f * row.expr[j];
        }
        rows_.push_back(std::move(row));
        ++inserted_;
        return std::nullopt;
    }

private:
    struct Row {
        std::vector<C> vec;   // pivot entry 1, reduced
        std::vector<C> expr;  // decomposition over inserted vectors
        std::size_t pivot;
    };

    void reduce(const std::vector<C>& v, std::vector<C>& rem, std::vector<C>& combo) const {
        if (v.size() != dim_) throw error("linear span: dimension mismatch");
        rem = v;
        combo.assign(inserted_, C(0));
        for (const auto& r : rows_) {
            C f = rem[r.pivot];
            if (f.is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i) rem[i] = rem[i] - f * r.vec[i];
            for (std::size_t j = 0; j < r.expr.size(); ++j) combo[j] = combo[j] + f * r.expr[j];
        }
    }

    std::size_t dim_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
};

} // namespace aicwb
