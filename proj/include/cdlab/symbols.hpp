#pragma once

#include <string>
#include <vector>

#include "cdlab/operator.hpp"

namespace cdlab {

// Built-in symbol registry. Symbols are functions of the plane coordinate
// z = x + iy:
//   one, zero, const:<c>     constants
//   cos | x                  Re z   (cos theta on the unit circle)
//   sin                      Im z   (sin theta on the unit circle)
//   x2                       (Re z)^2
//   abs                      |Re z|
//   poly:c0,c1,...           sum_j c_j (Re z)^j
// Applied to a real eigenvalue t they act through z = t.
SymbolDesc make_symbol(const std::string& spec);

// The fixed registry members used by property and acceptance sweeps.
std::vector<SymbolDesc> shipped_symbols();

RealFunction as_real_function(const SymbolDesc& s);

SymbolDesc product(const SymbolDesc& f, const SymbolDesc& g);
SymbolDesc difference(const SymbolDesc& f, const SymbolDesc& g);
SymbolDesc compose_outer(const RealFunction& g, const std::string& gname,
                         const SymbolDesc& f);

}  // namespace cdlab
