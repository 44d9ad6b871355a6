#include "ccrgraph/family_io.hpp"

#include "text_util.hpp"

#include <istream>
#include <iterator>

namespace ccrgraph::setfam {

SetFamily parse_family(std::string_view text)
{
    const auto lines = detail::split_lines(text, true);
    auto it = lines.begin();
    while (it != lines.end() && it->text.empty())
        ++it;
    if (it == lines.end())
        throw ParseError("family text is empty; expected 'm=<int>'");
    const std::size_t m = detail::parse_header(*it, "m");
    SetFamily fam(m);
    for (++it; it != lines.end(); ++it) {
        BitVector member(m);
        std::string_view rest = it->text;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::size_t e = detail::parse_index(rest.substr(0, comma), it->number);
            if (e >= m)
                throw ParseError("line " + std::to_string(it->number) + ": element " + std::to_string(e) +
                                 " outside universe of size " + std::to_string(m));
            member.set(e);
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
            if (detail::trim(rest).empty())
                throw ParseError("line " + std::to_string(it->number) + ": trailing comma");
        }
        fam.add(std::move(member));
    }
    return fam;
}

SetFamily read_family(std::istream& in)
{
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_family(text);
}

std::string format_family(const SetFamily& fam)
{
    std::string out = "m=" + std::to_string(fam.universe_size()) + "\n";
    for (const auto& x : fam.members()) {
        bool first = true;
        x.for_each_set([&](std::size_t e) {
            if (!first)
                out += ',';
            out += std::to_string(e);
            first = false;
        });
        out += '\n';
    }
    return out;
}

} // namespace ccrgraph::setfam
