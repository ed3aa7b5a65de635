#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "cdlab/basis.hpp"
#include "cdlab/kernel.hpp"
#include "cdlab/measure.hpp"
#include "cdlab/operator.hpp"

namespace cdlab {

// {"nodes": [[re, im], ...], "weights": [...], "support_tag": "...",
//  "exactness": n}
nlohmann::json to_json(const QuadratureMeasure& mu);
QuadratureMeasure measure_from_json(const nlohmann::json& j);

// Coefficients row-major as [re, im] pairs.
nlohmann::json to_json(const OrthonormalBasis& basis);

// Leading columns carried by every export so files from a sweep can be
// concatenated.
struct ExportTags {
  int k = 0;
  std::string symbol = "-";
  std::string measure = "-";
};

std::string format_double(double v);

// k,symbol,measure,a,b,re,im,abs2
void write_kernel_csv(std::ostream& os, const KernelTable& table,
                      const ExportTags& tags);
// k,symbol,measure,re,im,weight,density
void write_density_csv(std::ostream& os, const KernelTable& table,
                       const QuadratureMeasure& mu, const ExportTags& tags);
// k,symbol,measure,i,j,re,im
void write_matrix_csv(std::ostream& os, const CMatrix& m,
                      const ExportTags& tags);
// k,symbol,measure,index,eigenvalue
void write_spectrum_csv(std::ostream& os, const SpectralMeasure& s,
                        const ExportTags& tags);

}  // namespace cdlab
