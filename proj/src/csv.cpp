#include "msy/csv.hpp"

#include <ctime>

namespace msy {

void CsvWriter::timestamp(bool enabled) {
    if (!enabled) return;
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    metadata("generated", buf);
}

}  // namespace msy
