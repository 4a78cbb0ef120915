#include "nht/rational.hpp"

#include <sstream>

namespace nht {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im_part;
    if (z.im == 1)
        im_part = "i";
    else if (z.im == -1)
        im_part = "-i";
    else
        im_part = to_string(z.im) + "*i";
    if (z.re == 0) return im_part;
    if (z.im > 0) return to_string(z.re) + "+" + im_part;
    return to_string(z.re) + im_part;  // im_part already carries the minus
}

}  // namespace nht
