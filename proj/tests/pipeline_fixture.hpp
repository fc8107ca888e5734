// Pipeline runs shared between test files, computed once per n.
#pragma once

#include "tammes/pipeline.hpp"

#include <map>

inline const tammes::PipelineResult& pipeline_for(int n) {
    static std::map<int, tammes::PipelineResult> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        tammes::PipelineOptions o;
        o.n = n;
        it = cache.emplace(n, tammes::run_pipeline(o)).first;
    }
    return it->second;
}
