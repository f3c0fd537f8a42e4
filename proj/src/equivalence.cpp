#include "horn/equivalence.hpp"

#include "horn/horn_general.hpp"

namespace horn {

CeResult common_equivalent(const Formula& a, const Formula& b) {
    // The directional check degenerates to the plain definite-formula loop
    // (enumerate consequences over the common alphabet, entail-check each)
    // when the enumerated side has no negative clauses.
    DirectionalCheck ab = check_direction_horn(a, b);
    if (!ab.ok) return {false, CeWitness{*ab.counterexample, Direction::AtoB}};
    DirectionalCheck ba = check_direction_horn(b, a);
    if (!ba.ok) return {false, CeWitness{*ba.counterexample, Direction::BtoA}};
    return {true, std::nullopt};
}

}  // namespace horn
