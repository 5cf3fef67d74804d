#include "daha/ring/chebyshev.hpp"

namespace daha {

LaurentPoly chebyshev(ChebKind kind, int n) {
    return chebyshev_eval(kind, n, LaurentPoly::var(Var::x), LaurentPoly(1L));
}

}  // namespace daha
