#pragma once

#include <string>

#include "fintop/homotopy.hpp"
#include "fintop/qsym.hpp"
#include "fintop/space_algebra.hpp"

namespace fintop {

// Line-oriented plain-text forms. parse(print(x)) == x for every value.
//
//   Preorder      PRE n=<n> rel=<row-major 0/1 string>
//   FiniteSpace   FS k=<k> w=<w1,...,wk> cov=<(i,j);...>   (i below j, 1-based)
//   Scalar        integer polynomial, e.g. "1 + 2*q - q^3"
//   FVector       (<scalar>) * <FS ...> [ + ...]
//   FTensor       (<scalar>) * <FS ...> (x) <FS ...> [ + ...]
//   QSymElement   (<scalar>)*M[a1,a2,...] [ + ...]
//   zero elements of any kind print as "0"

std::string to_text(const Preorder& p);
std::string to_text(const FiniteSpace& x);
std::string to_text(const Scalar& s);
std::string to_text(const FVector& v);
std::string to_text(const FTensor& t);
std::string to_text(const QSymElement& e);
std::string to_text(const Rational& r);

/// QSym element with coefficients evaluated at a rational q.
std::string to_text_eval(const QSymElement& e, const Rational& q);

/// One facet per line: space-separated 1-based vertex indices.
std::string to_text(const SimplicialComplex& c);

Preorder parse_preorder(const std::string& text);
/// Accepts an FS form (canonicalizing whatever labeling it describes).
FiniteSpace parse_space(const std::string& text);
/// Accepts either an FS or a PRE form; preorders are canonicalized.
FiniteSpace parse_space_or_preorder(const std::string& text);
Scalar parse_scalar(const std::string& text);
FVector parse_fvector(const std::string& text);
QSymElement parse_qsym(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace fintop
