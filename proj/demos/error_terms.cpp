// Compares the leading-order and seven-term error models with pi - R1/R2.
#include <iostream>

#include <lehmer/lehmer.hpp>

int main()
{
    using namespace lehmer;
    const PrecisionContext ctx{40, 10};
    std::cout << "phi = " << to_decimal(leading_phase(ctx), 12) << "  Q = " << to_decimal(leading_modulus(ctx), 12)
              << "\n";
    for (long k = 10; k <= 60; k += 10) {
        std::cout << "k=" << k << "  leading " << to_scientific(e_leading(k, ctx), 10) << "  seven-term "
                  << to_scientific(e_asymptotic(k, 7, ctx), 10) << "  exact " << to_scientific(exact_error(k, ctx), 10)
                  << "\n";
    }
}
