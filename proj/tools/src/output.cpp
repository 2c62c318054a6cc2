// Copyright 2026 The qsci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <iostream>
#include <sstream>

#include "commands.hpp"

namespace qsci::cli {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const Result &result, const OutputOptions &out) {
    std::ostringstream text;
    if (out.csv) {
        if (result.csv_header.empty()) {
            fail(ErrorKind::kInvalidInput, "this command has no tabular output; drop --csv");
        }
        for (std::size_t i = 0; i < result.csv_header.size(); ++i) {
            text << (i ? "," : "") << result.csv_header[i];
        }
        text << "\n";
        for (const auto &row : result.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                text << (i ? "," : "") << row[i];
            }
            text << "\n";
        }
    } else {
        text << result.json.dump(2) << "\n";
    }
    if (out.path.empty()) {
        std::cout << text.str();
    } else {
        io::write_text_atomic(out.path, text.str());
    }
}

} // namespace qsci::cli
