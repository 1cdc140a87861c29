#include "tiedbraid/draw.hpp"

#include <sstream>
#include <vector>

namespace tiedbraid {

  namespace {
    constexpr int kCell = 4;   // ascii columns per strand
    constexpr int kGrid = 40;  // svg pixels per strand / row
    constexpr int kPad  = 30;

    // Columns (0-based over fixed then moving strands) a letter joins.
    std::pair<int, int> endpoints(Token const& t, int g) {
      switch (t.kind) {
        case TokenKind::Sigma: return {g + t.first - 1, g + t.first};
        case TokenKind::Loop: return {t.first - 1, g};
        case TokenKind::Tie: return {g + t.first - 1, g + t.first};
        case TokenKind::GenTie: return {g + t.first - 1, g + t.second - 1};
        case TokenKind::FixedTie: return {t.first - 1, g};
        case TokenKind::GenFixedTie: return {t.first - 1, g + t.second - 1};
      }
      return {0, 0};
    }

    std::string label(int column, int g) {
      return column < g ? "F" + std::to_string(column + 1) : "M" + std::to_string(column - g + 1);
    }

    std::string rstrip(std::string s) {
      while (!s.empty() && s.back() == ' ') {
        s.pop_back();
      }
      return s;
    }

    std::string ascii(TiedWord const& w) {
      int const   g = w.context().g(), columns = g + w.context().n();
      std::size_t width = static_cast<std::size_t>(kCell * (columns - 1) + 1);

      std::string blank(width, ' ');
      for (int c = 0; c < columns; ++c) {
        blank[kCell * c] = '|';
      }

      std::ostringstream out;
      std::string        header(width + 3, ' ');
      for (int c = 0; c < columns; ++c) {
        header.replace(kCell * c, label(c, g).size(), label(c, g));
      }
      out << rstrip(header) << '\n' << blank << '\n';

      for (auto const& t : w.letters()) {
        std::string row    = blank;
        auto [a, b]        = endpoints(t, g);
        std::size_t const xa = kCell * a, xb = kCell * b;
        switch (t.kind) {
          case TokenKind::Sigma:
            row.replace(xa, 5, t.exponent > 0 ? "\\ X /" : "/ X \\");
            break;
          case TokenKind::Loop:
            row[xa] = 'O';
            for (auto x = xa + 1; x < xb; ++x) {
              row[x] = '=';
            }
            row[xb] = t.exponent > 0 ? '>' : '<';
            break;
          default:
            row[xa] = '*';
            row[xb] = '*';
            for (auto x = xa + 1; x < xb; ++x) {
              if (row[x] == ' ') {
                row[x] = '~';
              }
            }
            break;
        }
        out << row << '\n';
      }
      out << blank << '\n';
      return out.str();
    }

    std::string svg(TiedWord const& w) {
      int const g = w.context().g(), columns = g + w.context().n();
      int const rows   = static_cast<int>(w.size()) + 1;
      int const width  = 2 * kPad + kGrid * (columns - 1);
      int const height = 2 * kPad + kGrid * rows;
      auto      x      = [](int c) { return kPad + kGrid * c; };
      auto      y      = [](int r) { return kPad + kGrid * r; };

      std::ostringstream out;
      out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
          << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
          << "<style>.fixed{stroke:#888;stroke-width:4}.moving{stroke:#000;stroke-width:2}"
             ".tie{stroke:#c00;stroke-width:1.5;fill:none}"
             ".loop{stroke:#000;stroke-width:2;fill:none}"
             "text{font:10px monospace}</style>\n";
      for (int c = 0; c < columns; ++c) {
        out << "<text x=\"" << x(c) - 6 << "\" y=\"" << kPad - 12 << "\">" << label(c, g)
            << "</text>\n";
      }
      auto segment = [&](int c0, int r0, int c1, int r1, char const* cls, double from = 0,
                         double to = 1) {
        double const x0 = x(c0), y0 = y(r0), x1 = x(c1), y1 = y(r1);
        out << "<line class=\"" << cls << "\" x1=\"" << x0 + from * (x1 - x0) << "\" y1=\""
            << y0 + from * (y1 - y0) << "\" x2=\"" << x0 + to * (x1 - x0) << "\" y2=\""
            << y0 + to * (y1 - y0) << "\"/>\n";
      };

      // Row 0 is a plain stretch above the first letter.
      for (int c = 0; c < columns; ++c) {
        segment(c, 0, c, 1, c < g ? "fixed" : "moving");
      }
      for (std::size_t k = 0; k < w.size(); ++k) {
        auto const& t   = w[k];
        int const   r   = static_cast<int>(k) + 1;
        auto [a, b]     = endpoints(t, g);
        bool const swap = t.kind == TokenKind::Sigma;
        for (int c = 0; c < columns; ++c) {
          if (!swap || (c != a && c != b)) {
            segment(c, r, c, r + 1, c < g ? "fixed" : "moving");
          }
        }
        switch (t.kind) {
          case TokenKind::Sigma: {
            out << "<g class=\"crossing\" data-sign=\"" << t.exponent << "\">\n";
            // Over strand drawn whole, under strand broken around the middle.
            int const over_from = t.exponent > 0 ? a : b, over_to = t.exponent > 0 ? b : a;
            segment(over_from, r, over_to, r + 1, "moving");
            segment(over_to, r, over_from, r + 1, "moving", 0, 0.4);
            segment(over_to, r, over_from, r + 1, "moving", 0.6, 1);
            out << "</g>\n";
            break;
          }
          case TokenKind::Loop: {
            int const ym = y(r) + kGrid / 2;
            out << "<g class=\"loop\" data-sign=\"" << t.exponent << "\">\n"
                << "<path class=\"loop\" d=\"M " << x(b) << ' ' << y(r) + 8 << " C " << x(a) - 14
                << ' ' << y(r) + 4 << ", " << x(a) - 14 << ' ' << y(r + 1) - 4 << ", " << x(b)
                << ' ' << y(r + 1) - 8 << "\"/>\n"
                << "<text x=\"" << x(b) + 4 << "\" y=\"" << ym << "\">" << render(t)
                << "</text>\n</g>\n";
            break;
          }
          default: {
            int const ym = y(r) + kGrid / 2;
            out << "<g class=\"tie\">\n<polyline class=\"tie\" points=\"";
            int const steps = 4 * (b - a);
            for (int s = 0; s <= steps; ++s) {
              double const px = x(a) + (x(b) - x(a)) * static_cast<double>(s) / steps;
              int const    py = ym + (s == 0 || s == steps ? 0 : (s % 2 ? -4 : 4));
              out << (s ? " " : "") << px << ',' << py;
            }
            out << "\"/>\n</g>\n";
            break;
          }
        }
      }
      out << "</svg>\n";
      return out.str();
    }
  }  // namespace

  std::string draw(TiedWord const& w, DrawFormat format) {
    require_valid(w);
    return format == DrawFormat::Ascii ? ascii(w) : svg(w);
  }

}  // namespace tiedbraid
