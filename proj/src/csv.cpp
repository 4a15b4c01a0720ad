#include "polydirich/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace polydirich {

namespace {

double parse_double(const std::string& s, const std::string& line) {
    double v;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw std::runtime_error("malformed CSV field '" + s + "' in row: " + line);
    return v;
}

long parse_index(const std::string& s, const std::string& line) {
    long v;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end || v < 0)
        throw std::runtime_error("malformed CSV index '" + s + "' in row: " + line);
    return v;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

void write_csv(std::ostream& os, const TruncatedSeries& f) {
    os << "k,l,re,im\n";
    os.precision(17);
    for (long k = 0; k <= f.deg_z(); ++k)
        for (long l = 0; l <= f.deg_w(); ++l) {
            const Complex c = f.at(k, l);
            os << k << ',' << l << ',' << c.real() << ',' << c.imag() << '\n';
        }
}

void write_csv_file(const std::string& path, const TruncatedSeries& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_csv(os, f);
}

TruncatedSeries read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "k,l,re,im") throw std::runtime_error("expected CSV header k,l,re,im");

    struct Entry {
        long k, l;
        Complex value;
    };
    std::vector<Entry> entries;
    long max_k = 0, max_l = 0;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 4) throw std::runtime_error("malformed CSV row: " + line);
        Entry e;
        e.k = parse_index(fields[0], line);
        e.l = parse_index(fields[1], line);
        e.value = {parse_double(fields[2], line), parse_double(fields[3], line)};
        max_k = std::max(max_k, e.k);
        max_l = std::max(max_l, e.l);
        entries.push_back(e);
    }
    TruncatedSeries f(max_k, max_l);
    for (const auto& e : entries) f(e.k, e.l) = e.value;
    return f;
}

TruncatedSeries read_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_csv(is);
}

}  // namespace polydirich
