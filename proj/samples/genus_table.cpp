// Elliptic genus, signature and A-hat genus of CP^2, CP^4, ..., CP^12,
// followed by a string-bordism classification of the catalogue records.

#include <iostream>

#include <ellcob/ellcob.hpp>

int main()
{
    using namespace ellcob;
    for (int n = 1; n <= 6; ++n) {
        const auto v = PontryaginVector::complex_projective(n);
        std::cout << "CP^" << 2 * n << "  phi = " << elliptic_genus(v).pretty()
                  << "  sig = " << evaluate_genus(signature_polynomial(n), v)
                  << "  ahat = " << evaluate_genus(ahat_polynomial(n), v) << "\n";
    }

    const Matrix4 k = basis_matrix_K();
    for (std::size_t i = 0; i < 4; ++i) {
        const auto report = classify(k.column(i));
        std::cout << "M" << i + 1 << "  phi = " << report.phi.to_poly().pretty() << "\n"
                  << "    W = " << format_qseries(*report.witten_genus) << "\n";
    }
}
