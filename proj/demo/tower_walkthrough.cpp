// Walks the dual tower of the maximal ideal over two small quotient rings
// and prints the exact length ratios, then classifies the residue field.

#include <iostream>

#include "reflexa/reflexa.hpp"

using namespace reflexa;

int main() {
    FieldCtx<Rat> ctx;
    std::vector<std::string> vars{"x", "y"};
    auto A = Algebra<Rat>::build({parse_poly<Rat>("x^2", vars, ctx), parse_poly<Rat>("x*y", vars, ctx),
                                  parse_poly<Rat>("y^3", vars, ctx)},
                                 vars);
    std::cout << "R = Q[x,y]/(x^2, x*y, y^3): length " << A->length() << ", type " << A->type()
              << "\n";

    auto m = max_ideal(A);
    TowerResult t = dual_tower(m, 8, kDefaultBudget);
    std::cout << "dual tower of m:\n";
    for (std::size_t i = 0; i < t.lengths.size(); ++i)
        std::cout << "  l(m^(" << i << "*)) = " << t.lengths[i] << "   ratio " << t.ratios[i].str()
                  << "\n";
    std::cout << "ratio trend: " << t.ratio_trend << "\n\n";

    auto k = residue_field(A);
    auto rep = classify(k, 6);
    std::cout << "k: reflexive " << rep.reflexive.status_str() << ", weakly Gorenstein "
              << rep.weakly_gorenstein.status_str() << " (rule " << rep.weakly_gorenstein.rule
              << ")\n";
    return 0;
}
