#include "swbeam/plotdata.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "swbeam/metrics.hpp"

namespace swbeam {

namespace {

struct Series {
  std::vector<double> xs;
  std::vector<double> means;
  std::vector<double> stds;
};

std::pair<double, double> mean_std(const std::vector<double>& values) {
  double mean = 0.0;
  for (double v : values) {
    mean += v;
  }
  mean /= static_cast<double>(values.size());
  if (values.size() < 2) {
    return {mean, 0.0};
  }
  double ss = 0.0;
  for (double v : values) {
    ss += (v - mean) * (v - mean);
  }
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

double cell(const CsvTable& t, std::size_t row, std::size_t col) {
  return std::stod(t.rows[row][col]);
}

// Groups rows by a key column and reduces a derived value per group,
// x = group key (or mean of x column when given).
Series grouped_series(const CsvTable& t, std::size_t key_col,
                      std::size_t x_col, bool x_is_key,
                      const std::function<double(std::size_t)>& value) {
  std::map<double, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    groups[cell(t, i, key_col)].push_back(i);
  }
  Series s;
  for (const auto& [key, rows] : groups) {
    std::vector<double> values;
    values.reserve(rows.size());
    for (std::size_t i : rows) {
      values.push_back(value(i));
    }
    const auto [mean, sd] = mean_std(values);
    double x = key;
    if (!x_is_key) {
      std::vector<double> xs;
      xs.reserve(rows.size());
      for (std::size_t i : rows) {
        xs.push_back(cell(t, i, x_col));
      }
      x = mean_std(xs).first;
    }
    s.xs.push_back(x);
    s.means.push_back(mean);
    s.stds.push_back(sd);
  }
  return s;
}

std::filesystem::path write_series(const Series& s, const std::string& figure,
                                   const std::string& name,
                                   const std::filesystem::path& out_dir) {
  std::string text = "# x " + name + " stddev\n";
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    text += format_plot(s.xs[i]);
    text += ' ';
    text += format_plot(s.means[i]);
    text += ' ';
    text += format_plot(s.stds[i]);
    text += '\n';
  }
  const auto path = out_dir / (figure + "_" + name + ".dat");
  write_text_file(path, text);
  return path;
}

std::filesystem::path write_fit_curve(const Series& s,
                                      const std::filesystem::path& out_dir) {
  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    points.emplace_back(s.xs[i], s.means[i]);
  }
  const FitResult fit = log_growth_fit(points);
  double lo = s.xs.front(), hi = s.xs.front();
  for (double x : s.xs) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  std::string text = "# x fitted_apl\n";
  constexpr int kSamples = 100;
  for (int i = 0; i < kSamples; ++i) {
    const double x = lo + (hi - lo) * i / (kSamples - 1);
    text += format_plot(x);
    text += ' ';
    text += format_plot(fit.slope * std::log(x) + fit.intercept);
    text += '\n';
  }
  const auto path = out_dir / "fig3_fit.dat";
  write_text_file(path, text);
  return path;
}

}  // namespace

std::vector<std::string> known_figures() {
  return {"fig2a", "fig2b", "fig3", "fig5a", "fig5b"};
}

std::vector<std::filesystem::path> emit_plotdata(
    const CsvTable& results, const std::string& figure,
    const std::filesystem::path& out_dir) {
  if (results.rows.empty()) {
    throw std::invalid_argument("emit_plotdata: empty results table");
  }
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;

  if (figure == "fig2a") {
    const auto p = results.column_index("p");
    const auto apl = results.column_index("apl");
    const auto apl0 = results.column_index("apl0");
    const auto c = results.column_index("c");
    const auto c0 = results.column_index("c0");
    const Series l = grouped_series(results, p, p, true, [&](std::size_t i) {
      return cell(results, i, apl) / cell(results, i, apl0);
    });
    const Series cr = grouped_series(results, p, p, true, [&](std::size_t i) {
      return cell(results, i, c) / cell(results, i, c0);
    });
    written.push_back(write_series(l, figure, "L_ratio", out_dir));
    written.push_back(write_series(cr, figure, "C_ratio", out_dir));
  } else if (figure == "fig2b") {
    const auto p = results.column_index("p");
    const auto uni = results.column_index("uni_frac");
    const Series s = grouped_series(results, p, p, true, [&](std::size_t i) {
      return cell(results, i, uni);
    });
    written.push_back(write_series(s, figure, "uni_frac", out_dir));
  } else if (figure == "fig3") {
    const auto width = results.column_index("width");
    const auto d = results.column_index("d");
    const auto apl = results.column_index("apl");
    const Series s = grouped_series(results, width, d, false, [&](std::size_t i) {
      return cell(results, i, apl);
    });
    written.push_back(write_series(s, figure, "apl", out_dir));
    written.push_back(write_fit_curve(s, out_dir));
  } else if (figure == "fig5a") {
    const auto width = results.column_index("width");
    const auto d = results.column_index("d");
    const auto apl = results.column_index("apl");
    const auto apl0 = results.column_index("apl0");
    const Series s = grouped_series(results, width, d, false, [&](std::size_t i) {
      return cell(results, i, apl) / cell(results, i, apl0);
    });
    written.push_back(write_series(s, figure, "L_ratio", out_dir));
  } else if (figure == "fig5b") {
    const auto width = results.column_index("width");
    const auto d = results.column_index("d");
    const auto uni = results.column_index("uni_frac");
    const Series s = grouped_series(results, width, d, false, [&](std::size_t i) {
      return cell(results, i, uni);
    });
    written.push_back(write_series(s, figure, "uni_frac", out_dir));
  } else {
    throw std::invalid_argument("emit_plotdata: unknown figure '" + figure + "'");
  }
  return written;
}

}  // namespace swbeam
