#pragma once

#include "scalar.hpp"

#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace hopfcyc {

// An ordered basis. Labels are optional cosmetics for witnesses; everything
// computational keys on the index.
struct BasedSpace {
    int dim = 0;
    std::vector<std::string> labels; // empty or size == dim

    BasedSpace() = default;
    explicit BasedSpace(int d) : dim(d)
    {
        if (d <= 0)
            throw InputError("based space must have positive dimension");
        guard_dimension(d, "based space");
    }
    explicit BasedSpace(std::vector<std::string> ls) : dim((int)ls.size()), labels(std::move(ls))
    {
        if (dim == 0)
            throw InputError("based space must have positive dimension");
        guard_dimension(dim, "based space");
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw InputError("duplicate basis label '" + l + "'");
    }

    std::string label(int i) const
    {
        if (i >= 0 && i < (int)labels.size())
            return labels[i];
        return "e" + std::to_string(i);
    }
    int index_of(const std::string& l) const
    {
        for (int i = 0; i < (int)labels.size(); ++i)
            if (labels[i] == l)
                return i;
        throw SpecParseError("unknown basis label '" + l + "'");
    }
};

// Flat indexing of a tensor-product basis, lexicographic with the rightmost
// factor fastest.  Every module in the repo goes through this so matrices are
// bit-identical across constructions.
class TensorBasisIndexer {
public:
    TensorBasisIndexer() = default;
    explicit TensorBasisIndexer(std::vector<int> dims) : dims_(std::move(dims))
    {
        strides_.assign(dims_.size(), 1);
        total_ = 1;
        for (int k = (int)dims_.size() - 1; k >= 0; --k) {
            if (dims_[k] <= 0)
                throw InputError("tensor factor with nonpositive dimension");
            strides_[k] = total_;
            total_ *= dims_[k];
            guard_dimension(total_, "tensor space");
        }
    }

    int factors() const { return (int)dims_.size(); }
    int dim(int k) const { return dims_[k]; }
    long long total() const { return total_; }

    long long encode(std::span<const int> idx) const
    {
        long long flat = 0;
        for (int k = 0; k < (int)dims_.size(); ++k)
            flat += strides_[k] * idx[k];
        return flat;
    }
    std::vector<int> decode(long long flat) const
    {
        std::vector<int> idx(dims_.size());
        for (int k = 0; k < (int)dims_.size(); ++k) {
            idx[k] = (int)(flat / strides_[k]);
            flat %= strides_[k];
        }
        return idx;
    }

private:
    std::vector<int> dims_;
    std::vector<long long> strides_;
    long long total_ = 1;
};

} // namespace hopfcyc
