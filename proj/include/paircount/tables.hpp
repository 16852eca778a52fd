#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paircount/count.hpp"

namespace paircount {

enum class Adjacency { Linear, Circular };
enum class TableFormat { Csv, Tsv, Json };
enum class TriangleFormat { Csv, BFile };

/// Largest n accepted by make_z_table / render_z_table.
inline constexpr int kTableLimit = 128;

struct ZCell {
    int k = 0;
    int m = 0;
    Count count;

    friend bool operator==(const ZCell&, const ZCell&) = default;
};

/// Every (k, m) cell for one length, zero cells included, ordered by (k, m).
/// Linear tables span 0 <= k, m <= n - 1; circular tables span 0..n because
/// the constant strings have n wraparound pairs.
struct ZTable {
    int n = 0;
    Adjacency mode = Adjacency::Linear;
    std::vector<ZCell> cells;

    Count total() const;

    friend bool operator==(const ZTable&, const ZTable&) = default;
};

std::optional<TableFormat> parse_table_format(std::string_view name);
std::optional<TriangleFormat> parse_triangle_format(std::string_view name);

/// Throws DomainError naming the supported formats.
TableFormat require_table_format(std::string_view name);
TriangleFormat require_triangle_format(std::string_view name);

ZTable make_z_table(int n, Adjacency mode);

std::string render(const ZTable& table, TableFormat format);
std::string render_z_table(int n, Adjacency mode, TableFormat format);

/// Inverse of render(); the adjacency mode is not part of the text and is supplied.
ZTable parse_z_table(std::string_view text, TableFormat format, Adjacency mode);

/// Rows n = 0..rows-1 of C(floor((n + k) / 2), k), each row k = 0..n.
/// bfile lines are "index value" with a 1-based running index.
std::string render_terquem_triangle(int rows, TriangleFormat format);

}  // namespace paircount
