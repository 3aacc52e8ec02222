#include "sta/algebra/blade.hpp"

namespace sta {

namespace {

struct TableSet {
    // Indexed by p * 5 + q; entries with p + q outside [1, 4] stay unused.
    std::array<ProductTable, 25> tables{};

    TableSet() {
        for (int p = 0; p <= Signature::kMaxDimension; ++p) {
            for (int q = 0; p + q <= Signature::kMaxDimension; ++q) {
                if (p + q == 0) continue;
                const Signature sig(p, q);
                auto& table = tables[static_cast<std::size_t>(p * 5 + q)];
                for (int a = 0; a < sig.blade_count(); ++a) {
                    for (int b = 0; b < sig.blade_count(); ++b) {
                        table.sign[a][b] = static_cast<std::int8_t>(
                            blade_product_sign(sig, static_cast<BladeMask>(a), static_cast<BladeMask>(b)));
                    }
                }
            }
        }
    }
};

}  // namespace

const ProductTable& product_table(const Signature& sig) {
    static const TableSet set;
    return set.tables[static_cast<std::size_t>(sig.p() * 5 + sig.q())];
}

std::string format_blade(const Signature& sig, BladeMask mask) {
    if (mask == 0) return "1";
    std::string out;
    for (int k = 0; k < sig.dimension(); ++k) {
        if (mask & (1U << k)) {
            if (!out.empty()) out += '^';
            out += sig.generator_prefix();
            out += static_cast<char>('0' + k);
        }
    }
    return out;
}

}  // namespace sta
