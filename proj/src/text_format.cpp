#include "insep/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "insep/errors.hpp"

namespace insep {

namespace {

class ThetaParser {
public:
    explicit ThetaParser(std::string_view text) : text_(text) {}

    Theta parse() {
        expect('[');
        std::array<DiagonalList, 4> lists;
        for (auto& list : lists) list = parse_list();
        expect(']');
        skip_space();
        if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
        return Theta(std::move(lists));
    }

private:
    DiagonalList parse_list() {
        expect('(');
        std::vector<int> values{parse_int()};
        while (peek() == ',') {
            ++pos_;
            values.push_back(parse_int());
        }
        expect(')');
        return DiagonalList(std::move(values));
    }

    int parse_int() {
        skip_space();
        const std::size_t begin = pos_;
        int value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", begin);
        if (ec != std::errc{}) throw ParseError("expected integer", begin);
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Theta parse_theta(std::string_view text) { return ThetaParser(text).parse(); }

std::string format_theta(const Theta& theta) {
    std::string out = "[";
    for (const auto& list : theta.lists()) {
        out += '(';
        bool first = true;
        for (int d : list) {
            if (!first) out += ',';
            out += std::to_string(d);
            first = false;
        }
        out += ')';
    }
    out += ']';
    return out;
}

PointSet parse_points_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON", e.byte);
    }
    if (!doc.is_array()) throw ValidationError("points document must be a JSON array");
    std::vector<Point> pts;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
            throw ValidationError("each point must be an [x, y] integer pair");
        }
        const auto x = item[0].get<std::int64_t>();
        const auto y = item[1].get<std::int64_t>();
        constexpr std::int64_t lim = std::numeric_limits<int>::max() / 4;
        if (x < -lim || x > lim || y < -lim || y > lim) throw ValidationError("coordinate out of range");
        pts.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
    return PointSet(std::move(pts));
}

PointSet read_points_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot open " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_points_json(buf.str());
}

std::string format_points_json(const PointSet& set) {
    nlohmann::json doc = nlohmann::json::array();
    for (Point p : set) doc.push_back({p.x, p.y});
    return doc.dump();
}

std::string format_path(const MonotonePath& path) {
    std::string out = path.direction == Direction::Uphill ? "uphill " : "downhill ";
    out += std::to_string(path.start.x) + " " + std::to_string(path.start.y);
    if (!path.steps.empty()) out += " " + path.step_string();
    return out;
}

std::optional<CountFormat> parse_count_format(std::string_view name) {
    if (name == "table") return CountFormat::Table;
    if (name == "csv") return CountFormat::Csv;
    if (name == "bfile-c") return CountFormat::BFileC;
    if (name == "bfile-chat") return CountFormat::BFileChat;
    return std::nullopt;
}

std::string emit_counts(std::span<const CountRow> rows, CountFormat format) {
    std::ostringstream out;
    switch (format) {
        case CountFormat::Csv:
            out << "n,c,chat\n";
            for (const auto& r : rows) out << r.n << ',' << r.c << ',' << r.chat << '\n';
            break;
        case CountFormat::BFileC:
            for (const auto& r : rows) out << r.n << ' ' << r.c << '\n';
            break;
        case CountFormat::BFileChat:
            for (const auto& r : rows) out << r.n << ' ' << r.chat << '\n';
            break;
        case CountFormat::Table: {
            char line[64];
            std::snprintf(line, sizeof line, "%4s %8s %8s\n", "n", "c(n)", "chat(n)");
            out << line;
            for (const auto& r : rows) {
                std::snprintf(line, sizeof line, "%4d %8lld %8lld\n", r.n, static_cast<long long>(r.c),
                              static_cast<long long>(r.chat));
                out << line;
            }
            break;
        }
    }
    return out.str();
}

}  // namespace insep
