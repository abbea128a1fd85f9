#include "qlmor/fixtures.hpp"

namespace qlmor::fixtures
{

namespace
{

RMatrix rows(Index r, Index c, std::initializer_list<double> vals)
{
    RMatrix M(r, c);
    auto it = vals.begin();
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            M(i, j) = *it++;
    return M;
}

CVector vec2(cplx a, cplx b)
{
    CVector v(2);
    v << a, b;
    return v;
}

} // namespace

StateSpaceModel example1_model()
{
    RMatrix A = rows(6, 6, {
        2.0405,  -4.0202, 3.6597,  -3.0030, -1.3991, 0.0223,   //
        10.7565, -2.6355, 3.0279,  1.1415,  -2.8439, -11.4753, //
        0,       0,       -5.0713, -0.7836, 3.5921,  5.3577,   //
        0,       0,       0,       -0.7377, 0.4368,  2.0851,   //
        0,       0,       0,       0,       -2.4419, -0.5944,  //
        0,       0,       0,       0,       0,       -1.9241,  //
    });
    RMatrix B = rows(6, 3, {
        -1.9113, 0.5763,  1.6860,  //
        -1.3247, 4.8135,  9.5314,  //
        1.9909,  -3.7210, -5.1055, //
        -0.9923, 1.5222,  -1.5323, //
        -0.5533, 1.9860,  0.7948,  //
        1.0127,  1.3013,  3.4008,  //
    });
    RMatrix C = rows(2, 6, {
        0.0680, 0.2673,  0.0594, 0.4300, -0.0130, -0.1340, //
        0.1494, -0.1304, 0.2256, 0.5877, -0.0828, 0.1467,  //
    });
    return StateSpaceModel(std::move(A), std::move(B), std::move(C), Domain::Continuous);
}

TangentialData example1_data()
{
    std::vector<cplx> sigma{{5, 7}, {5, -7}, {3, 2}, {3, -2}};
    std::vector<cplx> mu{{0.1, 6}, {0.1, -6}, {0.5, 1}, {0.5, -1}};
    CMatrix b(3, 4);
    b << cplx(1, 2), cplx(1, -2), cplx(3, 4), cplx(3, -4),     //
        cplx(5, 6), cplx(5, -6), cplx(7, 8), cplx(7, -8),      //
        cplx(9, 10), cplx(9, -10), cplx(11, 12), cplx(11, -12);
    CMatrix c(4, 2);
    c << cplx(13, 14), cplx(15, 16), //
        cplx(13, -14), cplx(15, -16), //
        cplx(17, 18), cplx(19, 20),   //
        cplx(17, -18), cplx(19, -20);
    return TangentialData::two_sided(std::move(sigma), std::move(mu), std::move(b), std::move(c));
}

PrintedRom example1_lf_rom()
{
    return {rows(4, 4, {12.8203, 15.3845, 8.9487, 9.5128,      //
                        -21.7995, -11.3167, -17.8338, -19.3510, //
                        -2.8202, -3.1235, -0.4269, -1.7302,     //
                        -7.4980, -8.2729, -11.0477, -6.8226}),
            rows(4, 3, {0.0842, 0.5174, -1.1657, //
                        -0.4234, 0.5606, 1.3800, //
                        -0.1007, 0.1789, 0.2252, //
                        0.2188, -0.5686, 1.1247}),
            rows(2, 4, {-0.2705, 2.1923, -0.9447, -1.6136, //
                        -1.8891, -2.5726, 4.1727, -2.0704})};
}

PrintedRom example1_fqlf_rom()
{
    return {rows(4, 4, {12.7743, 15.3316, 8.8888, 9.4461,      //
                        -21.7762, -11.2899, -17.8035, -19.3172, //
                        -2.8162, -3.1189, -0.4216, -1.7244,     //
                        -7.4581, -8.2270, -10.9960, -6.7649}),
            rows(4, 3, {0.0885, 0.5128, -1.1585, //
                        -0.4256, 0.5629, 1.3764, //
                        -0.1011, 0.1793, 0.2245, //
                        0.2151, -0.5646, 1.1185}),
            rows(2, 4, {-0.2820, 2.1796, -0.9585, -1.6287, //
                        -1.8727, -2.5541, 4.1931, -2.0480})};
}

PrintedRom example2_tqlf_rom()
{
    return {rows(4, 4, {12.8218, 15.3862, 8.9506, 9.5149,      //
                        -21.8003, -11.3175, -17.8348, -19.3520, //
                        -2.8204, -3.1237, -0.4271, -1.7305,     //
                        -7.4992, -8.2742, -11.0493, -6.8244}),
            rows(4, 3, {0.0841, 0.5173, -1.1659, //
                        -0.4234, 0.5606, 1.3801, //
                        -0.1007, 0.1789, 0.2252, //
                        0.2188, -0.5686, 1.1248}),
            rows(2, 4, {-0.2704, 2.1926, -0.9445, -1.6134, //
                        -1.8892, -2.5730, 4.1727, -2.0708})};
}

PrintedDerivatives example1_exact_derivatives()
{
    return {vec2({-0.2523, 0.6019}, {-0.2884, -0.5045}), vec2({0.3699, -1.1534}, {2.3440, -0.7540})};
}

PrintedDerivatives example1_fqlf_derivatives()
{
    return {vec2({-0.2522, 0.6019}, {-0.2884, -0.5045}), vec2({0.3698, -1.1534}, {2.3439, -0.7540})};
}

PrintedDerivatives example2_tqlf_derivatives()
{
    return {vec2({-0.2522, 0.6019}, {-0.2884, -0.5045}), vec2({0.3698, -1.1534}, {2.3440, -0.7541})};
}

} // namespace qlmor::fixtures
