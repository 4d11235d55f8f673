#pragma once

#include <iop/errors.hh>

#include <istream>
#include <sstream>
#include <string>

namespace iop::detail {

// Yields data lines, skipping blanks and comments, and remembers line numbers.
class LineReader {
public:
    explicit LineReader(std::istream & in) : in_(in) {}

    bool next(std::istringstream & fields)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            fields.clear();
            fields.str(line);
            return true;
        }
        return false;
    }

    int number() const { return number_; }

    [[noreturn]] void fail(const std::string & message) const
    {
        throw FormatError("line " + std::to_string(number_) + ": " + message);
    }

private:
    std::istream & in_;
    int number_ = 0;
};

inline bool at_end(std::istringstream & fields)
{
    fields >> std::ws;
    return fields.eof();
}

}  // namespace iop::detail
