#include <fstream>

#include "cyclicdd/error.hpp"
#include "cyclicdd/parity_matrix.hpp"

namespace cyclicdd {

SparseParityMatrix load_alist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path.string());
  return read_alist(in);
}

void save_alist(const std::filesystem::path& path, const SparseParityMatrix& h) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
  write_alist(out, h);
  if (!out) fail(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace cyclicdd
