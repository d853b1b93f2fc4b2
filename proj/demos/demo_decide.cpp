// Decides the vanishing-mean property for a weighted ternary pattern set
// and shows the empirical partial sums shrinking alongside the exact
// certificate.

#include "patseq/patseq.hpp"

#include <cstdio>
#include <string>

using namespace patseq;

int main() {
    WeightedSet s(3, 3);
    s.add(Word::parse("1", 3), BigInt(1));
    s.add(Word::parse("10", 3), BigInt(1));
    s.add(Word::parse("12", 3), BigInt(1));
    s.add(Word::parse("11", 3), BigInt(2));
    s.add(Word::parse("22", 3), BigInt(2));

    const StarDecision d = star_decide(s);
    std::printf("decision record:\n%s\n\n", decision_to_json(d, s).dump(2).c_str());

    std::printf("partial sums |S_N| / N at powers of 3:\n");
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t n = 3; n <= 531441; n *= 3) checkpoints.push_back(n);
    for (const TraceRow& row : partial_sum_trace(s, checkpoints, Method::substitution))
        std::printf("  N = %8llu   |S_N| = %10.3f   |S_N|/N = %.6f\n",
                    static_cast<unsigned long long>(row.n), row.abs_sum, row.mean_abs);

    std::printf("\nthe mean vanishes: %s\n", d.holds ? "yes" : "no");
    return d.holds ? 0 : 1;
}
