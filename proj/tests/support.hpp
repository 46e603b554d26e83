#pragma once

#include <ostream>

#include "torigen/render.hpp"

namespace torigen {

inline std::ostream& operator<<(std::ostream& out, const MultiPoly& p) {
    return out << to_text(p);
}

inline std::ostream& operator<<(std::ostream& out, const Poly<CobordismPoly>& p) {
    return out << to_text(p);
}

}  // namespace torigen
