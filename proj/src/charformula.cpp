#include "loopmod/charformula.hpp"

#include <algorithm>
#include <sstream>

#include "loopmod/parallel.hpp"

namespace loopmod {

mpz_class multinomial_multiplicity(unsigned, const Composition& scaled) {
    return multinomial(scaled);
}

bool divides_all_parts(unsigned d, const Composition& c) {
    return std::all_of(c.parts.begin(), c.parts.end(),
                       [d](unsigned p) { return p % d == 0; });
}

mpz_class classical_dim(const CharQuery& q, const MultiplicityFn& mult,
                        const TermPredicate& include) {
    if (q.composition.total() != q.m)
        throw Error(errc::config_error, "character query requires a composition of m");
    Rat sum(0);
    for (unsigned d = 1; d <= q.m; ++d) {
        if (q.m % d != 0) continue;
        if (!include(d, q.composition)) continue;
        std::vector<unsigned> scaled(q.composition.size());
        for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = q.composition[i] / d;
        sum += phi_twisted(q.r - q.s, d) * Rat(mult(d, Composition(std::move(scaled))));
    }
    sum /= static_cast<long>(q.m);
    sum.canonicalize();
    if (sum.get_den() != 1 || sum < 0)
        throw Error(errc::non_integer_result,
                    "character dimension is not a non-negative integer: " + sum.get_str());
    return sum.get_num();
}

mpz_class closed_dim(const CharQuery& q) { return classical_dim(q); }

ComparisonReport compare_all(unsigned n, unsigned m, unsigned jobs) {
    ComparisonReport report;
    report.n = n;
    report.m = m;
    EtaOperator eta(m, n);
    std::vector<Composition> comps = compositions_of(m, n + 1);

    std::vector<std::vector<CharacterRow>> rows(comps.size());
    parallel_for_index(comps.size(), jobs, [&](size_t idx) {
        const Composition& c = comps[idx];
        std::vector<long> brute = eta.eigenspace_dims(c);
        std::vector<mpz_class> census = count_maj_by_residue(c, m);
        for (unsigned k = 0; k < m; ++k) {
            CharacterRow row;
            row.composition = c;
            row.varpi = PWeight{c}.varpi_coords();
            row.k = k;
            // k = (s - r) mod m; phi depends on the class through gcd, so
            // querying at s = k, r = 0 covers every (s, r) with that residue.
            row.closed = closed_dim(CharQuery{n, m, static_cast<long>(k), c, 0});
            row.brute = brute[k];
            row.maj_census = census[k];
            rows[idx].push_back(std::move(row));
        }
    });

    for (auto& group : rows) {
        for (auto& row : group) {
            if (row.closed != row.brute || row.brute != row.maj_census) {
                std::ostringstream os;
                os << "composition (" << row.composition.str() << ") k=" << row.k
                   << ": closed=" << row.closed << " brute=" << row.brute
                   << " maj=" << row.maj_census;
                report.discrepancies.push_back(os.str());
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace loopmod
