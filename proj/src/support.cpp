#include "disc/support.hpp"

#include "disc/errors.hpp"

namespace disc
{

std::string to_bitstring(Support s, int width)
{
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if (s.contains(i)) {
            out[static_cast<std::size_t>(i)] = '1';
        }
    }
    return out;
}

Support parse_bitstring(std::string_view text)
{
    if (text.size() > static_cast<std::size_t>(kMaxSupportWidth)) {
        throw ScaleGuardError("support wider than 64 circuits");
    }
    Support s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            s.bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw PreconditionError("support bitstring may contain only '0' and '1'");
        }
    }
    return s;
}

}  // namespace disc
