#pragma once

#include "qv/cycnum.hpp"

#include <array>
#include <string>
#include <vector>

namespace qv {

// Character values and class counts of 2.S6, transcribed row by row.  The U4
// entry is u4 + u4_root_sign * sqrt(u4_root_arg).
struct Table1Row {
    int order;
    std::vector<int> cycle_type;
    bool central;
    int w, w5;
    long u4;
    int u4_root_sign;
    long u4_root_arg;
    std::array<int, 10> counts;

    CycNum u4_value(const FieldCtx& ctx) const;
};

const std::vector<std::string>& table1_columns();  // subgroup names, cover columns
const std::vector<Table1Row>& table1();

struct Table2Row {
    int order;
    std::vector<int> cycle_type;
    std::array<int, 4> counts;
};

const std::vector<std::string>& table2_columns();
const std::vector<Table2Row>& table2();

}  // namespace qv
