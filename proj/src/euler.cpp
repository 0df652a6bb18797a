#include "symdet/euler.hpp"

#include <string>

#include "symdet/errors.hpp"
#include "symdet/faultinj.hpp"

namespace symdet {

std::vector<Int> elementary_symmetric(const std::vector<std::int64_t>& values) {
    std::vector<Int> e(values.size() + 1, 0);
    e[0] = 1;
    size_t used = 0;
    for (auto v : values) {
        ++used;
        for (size_t k = used; k >= 1; --k) e[k] += Int(v) * e[k - 1];
    }
    return e;
}

Int chi_face_sum(const VolumeEvaluator& ev, const DegreeVector& d) {
    if (d.n != ev.n()) throw DomainError("chi_face_sum: dimension mismatch");
    Int chi = 0;
    const auto& fs = ev.all_faces();
    for (size_t idx = 0; idx < fs.size(); ++idx) {
        Int vol = ev.normalized_volume(static_cast<int>(idx), d);
        chi += (fs[idx].k() % 2 == 1) ? vol : -vol;
    }
    return chi;
}

Int chi_face_sum(int n, const DegreeVector& d) {
    return chi_face_sum(VolumeEvaluator(n), d);
}

Int chi_closed_form(int n, const DegreeVector& d) {
    if (n < 2 || d.n != n) throw DomainError("chi_closed_form: dimension mismatch");
    const std::vector<Int> e = elementary_symmetric(d.d);
    Int chi = 0;
    Int coef = 1; // (-1)^{k-1} 2^{k-1}
    for (int k = 1; k <= n; ++k) {
        chi += coef * e[k];
        coef *= -2;
    }
    return chi;
}

Int chi_product_form(int n, const DegreeVector& d) {
    if (n < 2 || d.n != n) throw DomainError("chi_product_form: dimension mismatch");
    Int prod = 1;
    for (int i = 1; i <= n; ++i) prod *= 1 - 2 * Int(d.at(i));
    Int num = 1 - prod;
    if (num % 2 != 0) throw InternalError("chi_product_form: odd numerator"); // 1 - odd*...*odd is even
    return num / 2;
}

Int chi_linear(int n) {
    if (n < 2) throw DomainError("chi_linear: n must be >= 2");
    DegreeVector ones(n, std::vector<std::int64_t>(n, 1));
    Int chi = chi_closed_form(n, ones);
    Int expected = (n % 2 == 1) ? 1 : 0;
    if (chi != expected)
        throw InternalError("chi_linear: parity violated at n = " + std::to_string(n));
    return chi;
}

bool bernstein_identity_check(int n) {
    if (n < 1) throw DomainError("bernstein_identity_check: n must be >= 1");
    Int sum = 0;
    for (int i = 0; i <= n; ++i) {
        Int term = binomial(n, i) * pow2(i);
        sum += ((n - i) % 2 == 0) ? term : -term;
    }
    return sum == 1;
}

Int euler_obstruction(int n) {
    return chi_linear(n);
}

Int euler_obstruction_f(int n, const DegreeVector& d) {
    return euler_obstruction(n) - chi_face_sum(n, d);
}

Int euler_obstruction_f(const VolumeEvaluator& ev, const DegreeVector& d) {
    return euler_obstruction(ev.n()) - chi_face_sum(ev, d);
}

Int chi_affine_space(int n, const DegreeVector& d) {
    if (n < 2 || d.n != n) throw DomainError("chi_affine_space: dimension mismatch");
    if (n > 30) throw ResourceError("chi_affine_space: 2^n face enumeration is infeasible beyond n = 30");
    if (d.at(1) < 2) throw DomainError("chi_affine_space: requires d_1 >= 2");
    using faultinj::Fault;
    const Fault fault = faultinj::active();

    Int chi = 0;
    const unsigned full = (1u << n);
    for (unsigned mask = 1; mask < full; ++mask) {
        const int k = __builtin_popcount(mask);
        const bool has_axis1 = (mask & 1u) != 0;
        Int vol;
        if (k == 1) {
            int i = __builtin_ctz(mask) + 1;
            vol = (i == 1) ? Int(d.at(1)) : 2 * Int(d.at(i));
            if (fault == Fault::AffineAxis) vol += 1;
        } else {
            vol = has_axis1 ? pow2(k - 1) : pow2(k);
            for (int i = 1; i <= n; ++i)
                if (mask & (1u << (i - 1))) vol *= d.at(i);
            if (fault == Fault::AffineType1 && has_axis1) vol += 1;
            if (fault == Fault::AffineType2 && !has_axis1) vol += 1;
        }
        chi += (k % 2 == 1) ? vol : -vol;
    }
    return chi;
}

Int milnor_number(int n, const DegreeVector& d) {
    Int chi = chi_affine_space(n, d);
    Int mu = (n % 2 == 1) ? Int(chi - 1) : Int(1 - chi); // chi = 1 + (-1)^{n-1} mu
    if (mu < 0)
        throw InternalError("milnor_number: negative value signals a volume bug");
    return mu;
}

namespace {

Int obstruction_from_milnor(int n, const DegreeVector& d, const Int& direct) {
    if (n < 2 || d.n != n) throw DomainError("euler_obstruction_f_via_milnor: dimension mismatch");
    if (d.at(1) < 2) throw DomainError("euler_obstruction_f_via_milnor: requires d_1 >= 2");

    // tail = sum_{i>=2} d_i + sum_{k=2}^{n}(-1)^{k-1} 2^{k-1} e_k(d_2..d_n),
    // summed over k-element subsets of {2..n}.
    std::vector<std::int64_t> rest(d.d.begin() + 1, d.d.end());
    const std::vector<Int> e = elementary_symmetric(rest);
    Int tail = e.size() > 1 ? e[1] : Int(0);
    Int coef = -2; // (-1)^{k-1} 2^{k-1} at k = 2
    for (size_t k = 2; k < e.size(); ++k) {
        tail += coef * e[k];
        coef *= -2;
    }

    Int mu = milnor_number(n, d);
    Int value = (n % 2 == 1) ? Int(-mu + tail) : Int(-1 + mu + tail);
    if (value != direct)
        throw InternalError("euler_obstruction_f_via_milnor: identity violated");
    return value;
}

} // namespace

Int euler_obstruction_f_via_milnor(int n, const DegreeVector& d) {
    return obstruction_from_milnor(n, d, euler_obstruction_f(n, d));
}

Int euler_obstruction_f_via_milnor(const VolumeEvaluator& ev, const DegreeVector& d) {
    return obstruction_from_milnor(ev.n(), d, euler_obstruction_f(ev, d));
}

ChiReport make_chi_report(int n, const DegreeVector& d) {
    const VolumeEvaluator ev(n);
    ChiReport r;
    r.n = n;
    r.d = d;
    r.chi_face_sum = chi_face_sum(ev, d);
    r.chi_closed = chi_closed_form(n, d);
    r.chi_product = chi_product_form(n, d);
    r.chi_agreement = (r.chi_face_sum == r.chi_closed) && (r.chi_closed == r.chi_product);
    r.eu_variety = euler_obstruction(n);
    r.eu_function = r.eu_variety - r.chi_face_sum;
    if (d.at(1) >= 2) {
        r.chi_affine = chi_affine_space(n, d);
        r.milnor_g = milnor_number(n, d);
        try {
            euler_obstruction_f_via_milnor(ev, d);
            r.milnor_identity_ok = true;
        } catch (const InternalError&) {
            r.milnor_identity_ok = false;
        }
    }
    return r;
}

} // namespace symdet
