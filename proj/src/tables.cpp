#include "paircount/tables.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "paircount/counting.hpp"
#include "paircount/error.hpp"

namespace paircount {

namespace {

int parse_int(std::string_view field, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw DomainError("malformed table: bad " + std::string(what) + " '" + std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t begin = 0;
    while (true) {
        auto pos = line.find(sep, begin);
        out.push_back(line.substr(begin, pos == std::string_view::npos ? std::string_view::npos : pos - begin));
        if (pos == std::string_view::npos) break;
        begin = pos + 1;
    }
    return out;
}

void add_cell(ZTable& table, int n, int k, int m, Count count) {
    if (table.cells.empty()) {
        table.n = n;
    } else if (table.n != n) {
        throw DomainError("malformed table: mixed lengths");
    }
    table.cells.push_back(ZCell{k, m, std::move(count)});
}

ZTable parse_delimited(std::string_view text, char sep, Adjacency mode) {
    ZTable table;
    table.mode = mode;
    const std::string header = sep == ',' ? "n,k,m,count" : "n\tk\tm\tcount";
    bool seen_header = false;
    for (auto line : split(text, '\n')) {
        if (line.empty()) continue;
        if (!seen_header) {
            if (line != header) throw DomainError("malformed table: expected header '" + header + "'");
            seen_header = true;
            continue;
        }
        auto fields = split(line, sep);
        if (fields.size() != 4) throw DomainError("malformed table: expected 4 fields per row");
        add_cell(table, parse_int(fields[0], "n"), parse_int(fields[1], "k"), parse_int(fields[2], "m"),
                 parse_count(fields[3]));
    }
    if (!seen_header) throw DomainError("malformed table: missing header");
    return table;
}

// SAX handler so that counts beyond 64 bits keep their exact decimal text.
class CellCollector : public nlohmann::json_sax<nlohmann::json> {
public:
    explicit CellCollector(ZTable& table) : table_(table) {}

    bool null() override { return fail("null"); }
    bool boolean(bool) override { return fail("boolean"); }
    bool number_integer(number_integer_t v) override {
        if (v < 0) return fail("negative number");
        return value(std::to_string(v));
    }
    bool number_unsigned(number_unsigned_t v) override { return value(std::to_string(v)); }
    bool number_float(number_float_t, const string_t& raw) override { return value(raw); }
    bool string(string_t&) override { return fail("string"); }
    bool binary(binary_t&) override { return fail("binary"); }
    bool start_object(std::size_t) override {
        if (depth_ != 1) return fail("object");
        ++depth_;
        fields_ = {};
        return true;
    }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool end_object() override {
        --depth_;
        if (!fields_.n || !fields_.k || !fields_.m || !fields_.count) return fail("incomplete cell");
        add_cell(table_, parse_int(*fields_.n, "n"), parse_int(*fields_.k, "k"), parse_int(*fields_.m, "m"),
                 parse_count(*fields_.count));
        return true;
    }
    bool start_array(std::size_t) override {
        if (depth_ != 0) return fail("nested array");
        ++depth_;
        return true;
    }
    bool end_array() override {
        --depth_;
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
        throw DomainError(std::string("malformed table: ") + ex.what());
    }

private:
    struct Fields {
        std::optional<std::string> n, k, m, count;
    };

    bool value(std::string text) {
        if (depth_ != 2) return fail("bare number");
        if (key_ == "n") fields_.n = std::move(text);
        else if (key_ == "k") fields_.k = std::move(text);
        else if (key_ == "m") fields_.m = std::move(text);
        else if (key_ == "count") fields_.count = std::move(text);
        else return fail("unknown key '" + key_ + "'");
        return true;
    }

    [[noreturn]] bool fail(const std::string& what) { throw DomainError("malformed table: unexpected " + what); }

    ZTable& table_;
    int depth_ = 0;
    std::string key_;
    Fields fields_;
};

}  // namespace

Count ZTable::total() const {
    Count sum = 0;
    for (const auto& cell : cells) sum += cell.count;
    return sum;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "tsv") return TableFormat::Tsv;
    if (name == "json") return TableFormat::Json;
    return std::nullopt;
}

std::optional<TriangleFormat> parse_triangle_format(std::string_view name) {
    if (name == "csv") return TriangleFormat::Csv;
    if (name == "bfile") return TriangleFormat::BFile;
    return std::nullopt;
}

TableFormat require_table_format(std::string_view name) {
    if (auto f = parse_table_format(name)) return *f;
    throw DomainError("unsupported format '" + std::string(name) + "' (supported: csv, tsv, json)");
}

TriangleFormat require_triangle_format(std::string_view name) {
    if (auto f = parse_triangle_format(name)) return *f;
    throw DomainError("unsupported format '" + std::string(name) + "' (supported: csv, bfile)");
}

ZTable make_z_table(int n, Adjacency mode) {
    if (mode == Adjacency::Linear && n < 1) throw DomainError("linear table requires n >= 1");
    if (mode == Adjacency::Circular && n < 2) throw DomainError("circular adjacency undefined below length 2");
    if (n > kTableLimit) throw DomainError("table length above limit " + std::to_string(kTableLimit));

    ZTable table{n, mode, {}};
    const int top = mode == Adjacency::Linear ? n - 1 : n;
    table.cells.reserve(static_cast<std::size_t>(top + 1) * static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
        for (int m = 0; m <= top; ++m) {
            table.cells.push_back(ZCell{k, m, mode == Adjacency::Linear ? z_auto(n, k, m) : s_circular(n, k, m)});
        }
    }
    return table;
}

std::string render(const ZTable& table, TableFormat format) {
    std::ostringstream out;
    switch (format) {
        case TableFormat::Csv:
        case TableFormat::Tsv: {
            const char sep = format == TableFormat::Csv ? ',' : '\t';
            out << 'n' << sep << 'k' << sep << 'm' << sep << "count\n";
            for (const auto& c : table.cells) {
                out << table.n << sep << c.k << sep << c.m << sep << to_decimal(c.count) << '\n';
            }
            break;
        }
        case TableFormat::Json: {
            out << "[\n";
            for (std::size_t i = 0; i < table.cells.size(); ++i) {
                const auto& c = table.cells[i];
                out << "{\"n\":" << table.n << ",\"k\":" << c.k << ",\"m\":" << c.m
                    << ",\"count\":" << to_decimal(c.count) << '}' << (i + 1 < table.cells.size() ? ",\n" : "\n");
            }
            out << "]\n";
            break;
        }
    }
    return out.str();
}

std::string render_z_table(int n, Adjacency mode, TableFormat format) { return render(make_z_table(n, mode), format); }

ZTable parse_z_table(std::string_view text, TableFormat format, Adjacency mode) {
    switch (format) {
        case TableFormat::Csv: return parse_delimited(text, ',', mode);
        case TableFormat::Tsv: return parse_delimited(text, '\t', mode);
        case TableFormat::Json: {
            ZTable table;
            table.mode = mode;
            CellCollector collector(table);
            nlohmann::json::sax_parse(text, &collector);
            return table;
        }
    }
    throw DomainError("unsupported format");
}

std::string render_terquem_triangle(int rows, TriangleFormat format) {
    if (rows < 1) throw DomainError("triangle needs at least one row");
    std::ostringstream out;
    if (format == TriangleFormat::Csv) out << "n,k,T\n";
    long long index = 1;
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto value = to_decimal(terquem_T(n, k));
            if (format == TriangleFormat::Csv) {
                out << n << ',' << k << ',' << value << '\n';
            } else {
                out << index++ << ' ' << value << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace paircount
