#include "oriseq/seqfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oriseq::seqfile {

std::string compact(const Symbols& symbols) {
    std::string out;
    out.reserve(symbols.size());
    for (int v : symbols) {
        if (v < 0 || v > 9) throw std::invalid_argument("compact form requires q <= 10");
        out.push_back(static_cast<char>('0' + v));
    }
    return out;
}

std::string comma_joined(const Symbols& symbols) {
    std::string out;
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(symbols[i]);
    }
    return out;
}

std::string write(const SequenceFile& f) {
    std::ostringstream out;
    out << "q=" << f.sequence.q() << " n=" << f.n << " period=" << f.sequence.period() << '\n';
    out << comma_joined(f.sequence.symbols()) << '\n';
    if (f.sequence.q() <= 10) out << "compact=" << compact(f.sequence.symbols()) << '\n';
    out << "canonical=" << comma_joined(canonical_rotation(f.sequence).symbols()) << '\n';
    return out.str();
}

namespace {

long long parse_int(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("sequence file: malformed ") + what + " '" +
                                    text + "'");
    }
}

Symbols parse_symbols(const std::string& line) {
    Symbols out;
    std::string token;
    std::istringstream in(line);
    while (std::getline(in, token, ','))
        out.push_back(static_cast<int>(parse_int(token, "symbol")));
    return out;
}

}  // namespace

SequenceFile read(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("sequence file: empty input");

    long long q = -1, n = -1, period = -1;
    std::istringstream header(line);
    std::string field;
    while (header >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("sequence file: malformed header field '" + field + "'");
        const std::string key = field.substr(0, eq);
        const long long value = parse_int(field.substr(eq + 1), key.c_str());
        if (key == "q") q = value;
        else if (key == "n") n = value;
        else if (key == "period") period = value;
        else throw std::invalid_argument("sequence file: unknown header field '" + key + "'");
    }
    if (q < 2 || n < 1 || period < 1)
        throw std::invalid_argument("sequence file: header must set q>=2, n>=1, period>=1");

    if (!std::getline(in, line)) throw std::invalid_argument("sequence file: missing symbol line");
    Symbols symbols = parse_symbols(line);
    if (static_cast<long long>(symbols.size()) != period)
        throw std::invalid_argument("sequence file: period does not match the symbol count");

    RingSequence seq(static_cast<int>(q), std::move(symbols));  // validates the symbol range

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("sequence file: malformed line '" + line + "'");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "compact") {
            if (value != compact(seq.symbols()))
                throw std::invalid_argument("sequence file: compact line disagrees with symbols");
        } else if (key == "canonical") {
            if (value != comma_joined(canonical_rotation(seq).symbols()))
                throw std::invalid_argument(
                    "sequence file: canonical line is not the least rotation");
        } else {
            throw std::invalid_argument("sequence file: unknown line '" + key + "'");
        }
    }
    return SequenceFile{std::move(seq), static_cast<int>(n)};
}

SequenceFile read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open sequence file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read(buffer.str());
}

void write_file(const std::string& path, const SequenceFile& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write sequence file '" + path + "'");
    out << write(f);
}

}  // namespace oriseq::seqfile
