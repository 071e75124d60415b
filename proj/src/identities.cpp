#include <functional>
#include <random>
#include <sstream>

#include "dihomol/cyclic_bar.hpp"

namespace dihomol {

std::string IdentityReport::to_string() const {
    std::ostringstream os;
    std::size_t total = 0;
    for (const auto& [name, n] : checks) total += n;
    if (ok()) {
        os << "all identities pass (" << words << " words, " << total << " checks"
           << (exhaustive ? ", exhaustive" : ", sampled") << ")";
        return os.str();
    }
    os << failures.size() << " identity failure(s) in " << total << " checks";
    for (const auto& f : failures) os << "\n  " << f.identity << " over " << f.field << ": " << f.witness;
    return os.str();
}

IdentityReport identity_suite(const InvolutiveDGA& a, int n_max, std::size_t trials, ReversalSign sign,
                              std::uint64_t seed) {
    if (n_max < 0) throw std::invalid_argument("identity suite needs n_max >= 0");
    const CyclicBar bar(a, sign);
    const Field& f = bar.field();
    using Element = ChainElement;

    // Images of one basis word shared by several identities.
    struct Images {
        Element x, Tx, Rx, bx, Bx, dx;
    };
    using Check = std::function<bool(const Images&)>;

    const std::vector<std::pair<std::string, Check>> group_checks = {
        {"T^{n+1}=id",
         [&](const Images& m) {
             Element y = m.Tx;
             for (std::size_t i = 1; i < m.x.terms().begin()->first.size(); ++i) y = bar.T(y);
             return y == m.x;
         }},
        {"T T^-1=id", [&](const Images& m) { return bar.T_inverse(m.Tx) == m.x; }},
        {"R^2=id", [&](const Images& m) { return bar.R(m.Rx) == m.x; }},
        {"RTR=T^-1", [&](const Images& m) { return bar.R(bar.T(m.Rx)) == bar.T_inverse(m.x); }},
        {"T d_int=d_int T", [&](const Images& m) { return bar.T(m.dx) == bar.internal_d(m.Tx); }},
        {"R d_int=d_int R", [&](const Images& m) { return bar.R(m.dx) == bar.internal_d(m.Rx); }},
    };
    const std::vector<std::pair<std::string, Check>> complex_checks = {
        {"b^2=0", [&](const Images& m) { return bar.b(m.bx).is_zero(); }},
        {"B^2=0", [&](const Images& m) { return bar.B(m.Bx).is_zero(); }},
        {"bB+Bb=0", [&](const Images& m) { return (bar.b(m.Bx) + bar.B(m.bx)).is_zero(); }},
        {"BR=-RB", [&](const Images& m) { return (bar.B(m.Rx) + bar.R(m.Bx)).is_zero(); }},
        {"Rb=bR", [&](const Images& m) { return bar.R(m.bx) == bar.b(m.Rx); }},
        {"B d_int=-d_int B",
         [&](const Images& m) {
             return (bar.B(bar.normalize(m.dx)) + bar.normalize(bar.internal_d(m.Bx))).is_zero();
         }},
        {"B composite=B shuffle", [&](const Images& m) { return m.Bx == bar.B_shuffle(m.x); }},
    };

    IdentityReport report;
    for (const auto& c : group_checks) report.identities.push_back(c.first);
    for (const auto& c : complex_checks) report.identities.push_back(c.first);

    std::mt19937_64 rng(seed);
    const auto run = [&](const BarWord& w) {
        ++report.words;
        const Element x(f, w);
        const Images images{x, bar.T(x), bar.R(x), bar.b(x), bar.B(x), bar.internal_d(x)};
        for (const auto* list : {&group_checks, &complex_checks}) {
            for (const auto& [name, check] : *list) {
                ++report.checks[name];
                if (!check(images)) report.failures.push_back({name, f.name(), bar.label(w)});
            }
        }
    };
    for (int n = 0; n <= n_max; ++n) {
        const std::size_t count = bar.count_words_of_length(n);
        if (count <= trials) {
            for (std::size_t i = 0; i < count; ++i) run(bar.word_of_length(n, i));
        } else {
            report.exhaustive = false;
            std::uniform_int_distribution<std::size_t> pick(0, count - 1);
            for (std::size_t i = 0; i < trials; ++i) run(bar.word_of_length(n, pick(rng)));
        }
    }
    return report;
}

}  // namespace dihomol
