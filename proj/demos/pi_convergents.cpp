// Prints S_k(2) = R1 + R2 pi and how far R1/R2 agrees with pi.
#include <iostream>

#include <lehmer/lehmer.hpp>

int main()
{
    const lehmer::PrecisionContext ctx{60, 10};
    for (long k : {1, 2, 4, 10, 20, 50, 100}) {
        const lehmer::PiLinear s = lehmer::s_k_2(k);
        std::cout << "k=" << k << "  matched=" << lehmer::matched_digit_count(k, ctx) << "\n  S_k(2) = " << s.to_string()
                  << "\n  R1/R2  = " << lehmer::ratio_decimal(k, 40) << "\n";
    }
}
