#pragma once

namespace qhall {
const char* versionString();
}
