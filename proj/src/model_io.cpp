#include <istream>
#include <sstream>

#include "polydom/errors.hpp"
#include "polydom/io_util.hpp"
#include "polydom/model.hpp"

namespace polydom {

namespace {

// Re-raise model validation errors with the line of the offending chord.
ChordModel build_checked(LineReader& lr, std::vector<Chord> chords,
                         std::optional<std::vector<int>> sides,
                         const std::vector<int>& chord_lines) {
    try {
        return ChordModel::create(std::move(chords), std::move(sides));
    } catch (const ModelError& e) {
        int line = chord_lines.empty() ? lr.last_line() : chord_lines.front();
        std::string what = e.what();
        // Attribute duplicate/same-side errors to the chord list region.
        if (!chord_lines.empty()) line = chord_lines.back();
        throw ParseError(line, what);
    }
}

}  // namespace

ChordModel parse_model(std::istream& in) {
    LineReader lr(in);
    auto [header, hline] = lr.next("header");
    if (header == "poly v1") {
        auto [counts_line, cline] = lr.next("`k m` line");
        std::istringstream ss(counts_line);
        int k = 0, m = 0;
        if (!(ss >> k >> m) || !lr.at_end(ss)) throw ParseError(cline, "expected `k m`");
        if (k < 3) throw ParseError(cline, "polygon model needs k >= 3");
        if (m < 0) throw ParseError(cline, "negative chord count");
        auto [sides_line, sline] = lr.next("side sizes line");
        std::istringstream sss(sides_line);
        std::vector<int> sizes(k);
        for (int i = 0; i < k; ++i) {
            if (!(sss >> sizes[i])) throw ParseError(sline, "expected " + std::to_string(k) + " side sizes");
        }
        if (!lr.at_end(sss)) throw ParseError(sline, "trailing tokens after side sizes");
        int total = 0;
        for (int s : sizes) total += s;
        if (total != 2 * m) throw ParseError(sline, "side sizes must sum to 2m");
        std::vector<int> chord_lines;
        std::vector<Chord> chords(m);
        for (int i = 0; i < m; ++i) {
            auto [line, ln] = lr.next("chord line");
            std::istringstream cs(line);
            int p = 0, q = 0;
            if (!(cs >> p >> q) || !lr.at_end(cs)) throw ParseError(ln, "expected two integers `p q`");
            chords[i] = Chord{p, q};
            chord_lines.push_back(ln);
        }
        lr.expect_eof();
        return build_checked(lr, std::move(chords), sizes, chord_lines);
    }
    if (header == "circle v1") {
        auto [m_line, mline] = lr.next("`m` line");
        std::istringstream ss(m_line);
        int m = 0;
        if (!(ss >> m) || !lr.at_end(ss)) throw ParseError(mline, "expected `m`");
        if (m < 0) throw ParseError(mline, "negative chord count");
        std::vector<int> chord_lines;
        std::vector<Chord> chords(m);
        for (int i = 0; i < m; ++i) {
            auto [line, ln] = lr.next("chord line");
            std::istringstream cs(line);
            int p = 0, q = 0;
            if (!(cs >> p >> q) || !lr.at_end(cs)) throw ParseError(ln, "expected two integers `p q`");
            chords[i] = Chord{p, q};
            chord_lines.push_back(ln);
        }
        lr.expect_eof();
        return build_checked(lr, std::move(chords), std::nullopt, chord_lines);
    }
    throw ParseError(hline, "expected header `poly v1` or `circle v1`");
}

ChordModel parse_model_string(const std::string& text) {
    std::istringstream in(text);
    return parse_model(in);
}

std::string serialize_model(const ChordModel& model) {
    std::ostringstream out;
    if (model.has_sides()) {
        out << "poly v1\n" << model.side_count() << ' ' << model.chord_count() << '\n';
        const auto& sizes = model.side_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? " " : "") << sizes[i];
        out << '\n';
    } else {
        out << "circle v1\n" << model.chord_count() << '\n';
    }
    for (const Chord& c : model.chords()) out << c.p << ' ' << c.q << '\n';
    return out.str();
}

}  // namespace polydom
