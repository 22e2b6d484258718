#pragma once

#include <string>
#include <vector>

namespace hopfcyc {

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string witness; // first failing position, empty when passed
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool passed, std::string witness = "")
    {
        items.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
    }
    void merge(const CheckReport& o, const std::string& prefix = "")
    {
        for (const auto& it : o.items)
            items.push_back({prefix + it.name, it.passed, it.witness});
    }
    bool ok() const
    {
        for (const auto& it : items)
            if (!it.passed)
                return false;
        return true;
    }
    int failed_count() const
    {
        int n = 0;
        for (const auto& it : items)
            n += !it.passed;
        return n;
    }
    std::string first_failure() const
    {
        for (const auto& it : items)
            if (!it.passed)
                return it.name + (it.witness.empty() ? "" : " [" + it.witness + "]");
        return "";
    }
};

} // namespace hopfcyc
