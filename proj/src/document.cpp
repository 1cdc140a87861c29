#include "tiedbraid/document.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace tiedbraid {

  namespace {
    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }
  }  // namespace

  Document load_document(std::string_view text, std::optional<Context> override_ctx) {
    std::optional<Context> ctx = override_ctx;
    std::vector<TiedWord>  words;
    std::size_t            line_no = 0;

    while (!text.empty()) {
      auto const eol  = text.find('\n');
      auto       line = text.substr(0, eol);
      text            = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
      ++line_no;

      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      if (line.starts_with("%ctx")) {
        if (!override_ctx) {
          if (!words.empty()) {
            throw Error(ErrorCode::InvalidContext,
                        "line " + std::to_string(line_no) + ": second context header");
          }
          ctx = Context::parse(line);
        }
        continue;
      }
      if (!ctx) {
        throw Error(ErrorCode::InvalidContext,
                    "line " + std::to_string(line_no) + ": word before any %ctx header");
      }
      try {
        words.push_back(line == "e" ? TiedWord(*ctx) : parse(line, *ctx));
      } catch (Error const& e) {
        throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (!ctx) {
      throw Error(ErrorCode::InvalidContext, "no %ctx header and no context given");
    }
    return Document{*ctx, std::move(words)};
  }

}  // namespace tiedbraid
