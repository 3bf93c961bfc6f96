#pragma once

#include <thread>
#include <vector>

#include "bideform/bianchi/catalog.hpp"
#include "bideform/bianchi/spin_lift.hpp"
#include "bideform/tangent/tangent.hpp"

namespace bideform {

/// Tangent data of Bi(d) at its lifted holonomy.
inline TangentReport tangent_report(int d, const TangentOptions& opt = {}) {
    require_catalog(d);
    return tangent_report(lifted_representation(d), opt);
}

/// Reports for the whole catalog in table order, computed on a bounded pool.
inline std::vector<TangentReport> tangent_table(std::size_t workers = 0, const TangentOptions& opt = {}) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<TangentReport> out(kTableOrder.size());
    parallel_for(kTableOrder.size(), workers, [&](std::size_t i) { out[i] = tangent_report(kTableOrder[i], opt); });
    return out;
}

}  // namespace bideform
