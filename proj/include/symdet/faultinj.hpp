#ifndef SYMDET_FAULTINJ_HPP
#define SYMDET_FAULTINJ_HPP

namespace symdet::faultinj {

// Negative-control hooks: each fault perturbs exactly one volume rule so the
// cross-path agreement checks must fail. Never set outside tests and the
// verify command's --inject-fault option.
enum class Fault {
    None,
    DetRay,        // determinant-path volume of 1-faces
    DetType1,      // determinant-path volume of k>=2 faces containing ray 1
    DetType2,      // determinant-path volume of k>=2 faces not containing ray 1
    ClosedType1,   // closed-form 2^{k-1} d_1 d_{i_2}...d_{i_k}
    ClosedType2,   // closed-form 2^{k-1} d_{j_1}...d_{j_k}
    AffineAxis,    // affine chart: ray volumes d_1 / 2 d_i
    AffineType1,   // affine chart: 2^{k-1} d_1 d_{i_2}...d_{i_k}
    AffineType2,   // affine chart: 2^k d_{j_1}...d_{j_k}
};

void set(Fault f);
Fault active();

} // namespace symdet::faultinj

#endif
