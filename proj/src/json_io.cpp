#include "kmh/json_io.hpp"

#include <limits>

namespace kmh {

namespace {

Integer entry_from_json(const OrderedJson& value, int row, int col) {
    const std::string where =
        " at (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
    if (value.is_number_integer() || value.is_number_unsigned())
        return Integer(value.get<long long>());
    if (value.is_string()) {
        try {
            return Integer(value.get<std::string>());
        } catch (const std::runtime_error&) {
            throw ParseError("entry string is not a decimal integer" + where);
        }
    }
    throw ParseError("matrix entry must be an integer or a decimal string" + where);
}

} // namespace

CartanMatrix matrix_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    if (!j.contains("n") || !j.contains("entries"))
        throw ParseError(R"(matrix JSON needs the fields "n" and "entries")");
    const OrderedJson& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() < 1)
        throw ParseError(R"("n" must be a positive integer)");
    const long long n = jn.get<long long>();
    const OrderedJson& rows = j.at("entries");
    if (!rows.is_array() || static_cast<long long>(rows.size()) != n)
        throw ParseError(R"("entries" must be an array of n rows)");
    std::vector<std::vector<Integer>> raw;
    raw.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const OrderedJson& row = rows[i];
        if (!row.is_array() || static_cast<long long>(row.size()) != n)
            throw ParseError("row " + std::to_string(i + 1) + " must be an array of n entries");
        std::vector<Integer> out;
        out.reserve(row.size());
        for (std::size_t c = 0; c < row.size(); ++c)
            out.push_back(entry_from_json(row[c], static_cast<int>(i), static_cast<int>(c)));
        raw.push_back(std::move(out));
    }
    return CartanMatrix::validate(std::move(raw));
}

OrderedJson integer_to_json(const Integer& value) {
    static const Integer lo(std::numeric_limits<long long>::min());
    static const Integer hi(std::numeric_limits<long long>::max());
    if (value >= lo && value <= hi) return OrderedJson(value.convert_to<long long>());
    return OrderedJson(to_string(value));
}

OrderedJson matrix_to_json(const CartanMatrix& a) {
    OrderedJson j;
    j["n"] = a.rank();
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < a.rank(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int c = 0; c < a.rank(); ++c) row.push_back(integer_to_json(a.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

OrderedJson series_to_json(const TruncatedSeries& s) {
    OrderedJson arr = OrderedJson::array();
    for (const std::string& c : to_coefficient_strings(s)) arr.push_back(c);
    return arr;
}

} // namespace kmh
