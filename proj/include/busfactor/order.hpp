#ifndef BUSFACTOR_ORDER_HPP
#define BUSFACTOR_ORDER_HPP

#include <string>
#include <vector>

namespace busfactor {

// An ordered sequence of person identifiers. A full order is a permutation
// of P; a partial one (partial == true) covers only a prefix of the people.
struct RemovalOrder {
    std::vector<std::string> people;
    bool partial = false;
};

}  // namespace busfactor

#endif
