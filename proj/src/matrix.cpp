#include "crsym/matrix.hpp"

#include <sstream>

namespace crsym {

PMat to_poly(const SMat& m) {
  PMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Poly(m(r, c));
  return out;
}

SMat to_scalar(const PMat& m) {
  SMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_scalar();
  return out;
}

SMat evaluate(const PMat& m, const Assignment& a) {
  SMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval(a);
  return out;
}

PMat substitute(const PMat& m, const std::map<std::string, Poly>& subs) {
  PMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).substitute(subs);
  return out;
}

SMat unit(std::size_t n, std::size_t r, std::size_t c, const Scalar& v) {
  SMat m(n, n);
  m(r, c) = v;
  return m;
}

namespace {

template <class T>
std::string render(const Mat<T>& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).str();
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string to_string(const SMat& m) { return render(m); }
std::string to_string(const PMat& m) { return render(m); }

}  // namespace crsym
