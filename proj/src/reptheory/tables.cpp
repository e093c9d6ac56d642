#include "qv/tables.hpp"

namespace qv {

CycNum Table1Row::u4_value(const FieldCtx& ctx) const {
    CycNum v(ctx, u4);
    if (u4_root_sign != 0) v += sqrt_rational(ctx, Rational(u4_root_arg)) * Rational(u4_root_sign);
    return v;
}

const std::vector<std::string>& table1_columns() {
    static const std::vector<std::string> cols = {"S6", "A6", "S5nst", "A5st", "A5nst", "S4nst", "A4nst", "F36", "F20", "D12nst"};
    return cols;
}

const std::vector<Table1Row>& table1() {
    // ord, type, central, W, W5, U4, counts (S6 A6 S5nst A5st A5nst S4nst A4nst F36 F20 D12nst)
    static const std::vector<Table1Row> rows = {
        {1, {}, false, 6, 5, 4, 0, 0, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {2, {}, true, 6, 5, -4, 0, 0, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {2, {2}, false, 4, -3, 0, 0, 0, {30, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {4, {2, 2}, false, 2, 1, 0, 0, 0, {90, 90, 30, 30, 30, 6, 6, 18, 10, 6}},
        {4, {2, 2, 2}, false, 0, 1, 0, 0, 0, {30, 0, 20, 0, 0, 12, 0, 0, 0, 8}},
        {6, {3}, false, 3, 2, 2, 0, 0, {40, 40, 0, 20, 0, 0, 0, 4, 0, 0}},
        {3, {3}, false, 3, 2, -2, 0, 0, {40, 40, 0, 20, 0, 0, 0, 4, 0, 0}},
        {6, {3, 2}, false, 1, 0, 0, 0, 0, {120, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {6, {3, 2}, false, 1, 0, 0, 0, 0, {120, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {6, {3, 3}, false, 0, -1, -1, 0, 0, {40, 40, 20, 0, 20, 8, 8, 4, 0, 2}},
        {3, {3, 3}, false, 0, -1, 1, 0, 0, {40, 40, 20, 0, 20, 8, 8, 4, 0, 2}},
        {8, {4}, false, 2, -1, 0, 0, 0, {180, 0, 60, 0, 0, 12, 0, 0, 20, 0}},
        {8, {4, 2}, false, 0, -1, 0, 0, 0, {180, 180, 0, 0, 0, 0, 0, 36, 0, 0}},
        {10, {5}, false, 1, 0, 1, 0, 0, {144, 144, 24, 24, 24, 0, 0, 0, 4, 0}},
        {5, {5}, false, 1, 0, -1, 0, 0, {144, 144, 24, 24, 24, 0, 0, 0, 4, 0}},
        {12, {6}, false, 0, 1, 0, 1, -3, {120, 0, 20, 0, 0, 0, 0, 0, 0, 2}},
        {12, {6}, false, 0, 1, 0, -1, -3, {120, 0, 20, 0, 0, 0, 0, 0, 0, 2}},
    };
    return rows;
}

const std::vector<std::string>& table2_columns() {
    static const std::vector<std::string> cols = {"D10", "S3'", "V4", "mu5"};
    return cols;
}

const std::vector<Table2Row>& table2() {
    static const std::vector<Table2Row> rows = {
        {1, {}, {1, 1, 1, 1}},          {2, {}, {1, 1, 1, 1}},       {4, {2, 2}, {10, 6, 6, 0}},
        {6, {3, 3}, {0, 2, 0, 0}},      {3, {3, 3}, {0, 2, 0, 0}},   {10, {5}, {4, 0, 0, 4}},
        {5, {5}, {4, 0, 0, 4}},
    };
    return rows;
}

}  // namespace qv
