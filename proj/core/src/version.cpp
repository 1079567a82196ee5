#include "qhall/version.hpp"

namespace qhall {
const char* versionString() { return "0.1.0"; }
}
