#include "ncwell/rational.hpp"

namespace ncwell {

std::string rational_string(const mpq_class& q) {
    return q.get_str();
}

std::string GaussianRational::to_string() const {
    if (im_ == 0) return rational_string(re_);
    std::string imag_part;
    if (im_ == 1) {
        imag_part = "i";
    } else if (im_ == -1) {
        imag_part = "-i";
    } else {
        imag_part = rational_string(im_) + "*i";
    }
    if (re_ == 0) return imag_part;
    std::string out = "(" + rational_string(re_);
    if (im_ > 0) {
        out += "+" + imag_part;
    } else {
        // imag_part already carries the minus sign
        out += imag_part;
    }
    out += ")";
    return out;
}

} // namespace ncwell
