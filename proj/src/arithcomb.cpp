#include "loopmod/arithcomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace loopmod {

unsigned long euler_phi(unsigned long d) {
    unsigned long result = d;
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            result -= result / p;
            while (d % p == 0) d /= p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

int moebius(unsigned long d) {
    int sign = 1;
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            sign = -sign;
        }
    }
    if (d > 1) sign = -sign;
    return sign;
}

Rat phi_twisted(long k, unsigned long d) {
    unsigned long ak = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    unsigned long g = ak == 0 ? d : std::gcd(d, ak);
    unsigned long e = d / g;
    Rat r(static_cast<long>(euler_phi(d)) * moebius(e), static_cast<long>(euler_phi(e)));
    r.canonicalize();
    return r;
}

unsigned Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::string Composition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

std::vector<Composition> compositions_of(unsigned total, unsigned parts) {
    std::vector<Composition> out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<unsigned> cur(parts, 0);
    // Recursion-free lexicographic enumeration.
    auto emit = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
        if (pos + 1 == parts) {
            cur[pos] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    emit(emit, 0, total);
    return out;
}

std::vector<unsigned> descents(const Word& w) {
    std::vector<unsigned> d;
    for (size_t r = 1; r < w.size(); ++r)
        if (w[r] < w[r - 1]) d.push_back(static_cast<unsigned>(r));
    return d;
}

unsigned maj(const Word& w) {
    unsigned s = 0;
    for (unsigned r : descents(w)) s += r;
    return s;
}

Composition letter_multiplicities(const Word& w, unsigned n) {
    std::vector<unsigned> parts(n + 1, 0);
    for (int letter : w) {
        if (letter < 0 || letter > static_cast<int>(n))
            throw Error(errc::config_error, "word letter out of range");
        ++parts[static_cast<size_t>(letter)];
    }
    return Composition(std::move(parts));
}

mpz_class multinomial(const Composition& c) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), c.total());
    for (unsigned k : c.parts) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k);
        num /= f;
    }
    return num;
}

std::vector<Word> words_with_multiplicities(const Composition& c) {
    Word w;
    for (size_t letter = 0; letter < c.size(); ++letter)
        w.insert(w.end(), c[letter], static_cast<int>(letter));
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<mpz_class> count_maj_by_residue(const Composition& c, unsigned m) {
    if (m == 0) throw Error(errc::config_error, "residue modulus must be positive");
    std::vector<mpz_class> counts(m, 0);
    for (const Word& w : words_with_multiplicities(c)) ++counts[maj(w) % m];
    return counts;
}

mpz_class closed_count(const Composition& c, unsigned m, long k) {
    if (c.total() != m)
        throw Error(errc::config_error, "closed_count requires a composition of m");
    Rat sum(0);
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        bool divides_all = std::all_of(c.parts.begin(), c.parts.end(),
                                       [d](unsigned p) { return p % d == 0; });
        if (!divides_all) continue;
        std::vector<unsigned> scaled(c.parts.size());
        for (size_t i = 0; i < c.parts.size(); ++i) scaled[i] = c.parts[i] / d;
        sum += phi_twisted(k, d) * Rat(multinomial(Composition(std::move(scaled))));
    }
    sum /= m;
    sum.canonicalize();
    if (sum.get_den() != 1 || sum < 0)
        throw Error(errc::non_integer_result,
                    "closed count is not a non-negative integer: " + sum.get_str());
    return sum.get_num();
}

}  // namespace loopmod
