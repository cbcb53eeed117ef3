#pragma once

#include "catmate/adjunction.hpp"
#include "catmate/category.hpp"
#include "catmate/localization.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace catmate::fixtures {

// Thin category on the given objects; leq(a, b) decides a -> b. Morphism
// ids come from name(a, b) and identities are id_<obj>.
CatPtr poset(const std::string& name, const std::vector<std::string>& objects,
             const std::function<bool(int, int)>& leq, const std::function<std::string(int, int)>& mor_name);

CatPtr one();          // object *
CatPtr arrow();        // 0 -i-> 1
CatPtr chain2();       // 0 -a-> 1 -b-> 2, ba : 0 -> 2
CatPtr span();         // a <-p- b -q-> c
CatPtr walking_iso();  // u : 0 -> 1, v : 1 -> 0 inverse
CatPtr fs2();          // sets of size 0, 1, 2 and all maps
CatPtr g1();           // one object, s o s = id
CatPtr g0();           // one object, identity only
CatPtr discrete(int n);

// Galois connection Arrow <-> Chain2: f(0)=0, f(1)=2; g(0)=g(1)=0, g(2)=1
Functor galois_left();
Functor galois_right();

RelCat rel_arrow();   // Arrow with i inverted
RelCat rel_g1();      // G1, everything a weak equivalence
RelCat rel_g0();

// F = ! : Arrow -> One left adjoint to the point 1.
Adjunction arrow_to_terminal();

// Regression square: top ! -| 1 between Arrow and One, bottom the identity
// on Arrow, X = id, Y = the point 1, tau = id. Its mate has sigma_0 = i.
MateSquare bc_counterexample();

// Functor by object and morphism ids.
Functor functor_from_ids(const std::string& name, const CatPtr& src, const CatPtr& tgt,
                         const std::vector<std::pair<std::string, std::string>>& obj,
                         const std::vector<std::pair<std::string, std::string>>& mor);

// The unique transformation between functors into a thin category.
NatTrans thin_nat(const std::string& name, const Functor& F, const Functor& G);

} // namespace catmate::fixtures
