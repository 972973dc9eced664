#include "ratrel/reduction.hpp"

#include "ratrel/decomposition.hpp"
#include "ratrel/error.hpp"
#include "ratrel/transducer.hpp"

namespace ratrel {

ReductionReport reduce_verify(const RegularTree& t, std::size_t k) {
    const RegularTree m = minimize(t);
    for (const auto& v : m.vertices())
        if (v.label != '0' && v.label != '1')
            throw AlphabetMismatch(std::string("tree label '") + v.label + "' is not 0 or 1");

    ReductionReport r;
    r.vertex_count = m.size();
    r.blocks = k;
    const TreeCode code = encode(m, k);
    r.ground = path_check(m, b_automaton());
    const auto parse = r_decomposition_max_ones(code.sigma1, code.sigma2);
    r.feasible = parse.feasible;
    r.ones = parse.max_ones;
    r.visits = max_accepting_visits(paper_transducer(), code.sigma1, code.sigma2);
    r.verdict = r.feasible && r.ones >= r.vertex_count + 1;
    r.agreement = r.verdict == r.ground;
    r.coherent = r.visits != kUnboundedVisits &&
                 (r.visits > r.ones ? r.visits - r.ones : r.ones - r.visits) <= 1;
    r.sound = 2 * k + 1 >= r.vertex_count * (r.vertex_count + 1) + r.vertex_count;
    return r;
}

} // namespace ratrel
