#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msy {

/// Minimal writer for the tool's CSV dialect: comma separator, '.' decimal
/// point, LF line endings, '#'-prefixed metadata lines before the column
/// header. Data lines carry no timestamps so identical runs produce
/// byte-identical files; an optional timestamp goes into the metadata block.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void metadata(const std::string& key, const std::string& value) {
        out_ << "# " << key << ": " << value << "\n";
    }

    /// Emits "# generated: <UTC ISO-8601>" unless suppressed.
    void timestamp(bool enabled);

    void header(const std::vector<std::string>& columns) { line(columns); }

    void row(const std::vector<std::string>& cells) { line(cells); }

  private:
    void line(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::ostream& out_;
};

}  // namespace msy
