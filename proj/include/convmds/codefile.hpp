#ifndef CONVMDS_CODEFILE_HPP
#define CONVMDS_CODEFILE_HPP

#include <string>
#include <vector>

#include "convmds/convcode.hpp"

namespace convmds {

// On-disk description of a code: JSON with the field, the dimensions and the
// generator grid as ascending integer coefficient lists. Coefficients are
// packed canonical representatives in [0, q); for prime fields that is just
// [0, p). The modulus is present exactly when m > 1.
//
//   {
//     "field": {"p": 11, "m": 1},
//     "k": 1,
//     "n": 2,
//     "generator": [[[8,5,1,1,5,8], [8,6,1,1,6,8]]]
//   }
//
// parse -> serialize -> parse is the identity.
struct CodeFile {
    uint32_t p = 0;
    uint32_t m = 1;
    std::vector<uint32_t> modulus;  // ascending, empty when m == 1
    int k = 0;
    int n = 0;
    std::vector<std::vector<std::vector<int64_t>>> generator;

    static CodeFile from_code(const ConvCode& code);
    static CodeFile parse(const std::string& json_text);  // throws CodeFileError
    static CodeFile load(const std::string& path);        // throws CodeFileError

    std::string serialize() const;
    void save(const std::string& path) const;

    // Validates everything and builds the code. Throws CodeFileError with a
    // message naming the violated invariant.
    ConvCode to_code() const;
};

}  // namespace convmds

#endif
