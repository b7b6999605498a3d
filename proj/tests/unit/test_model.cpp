#include <doctest.h>

#include <cmath>

#include "aptsim/errors.hpp"
#include "aptsim/model.hpp"
#include "oracles.hpp"

using namespace aptsim;

TEST_CASE("hamiltonian entries") {
  CHECK(oracle::max_abs(hamiltonian(AptParams::apt(1.2)), oracle::apt_hamiltonian(1.2)) == 0.0);
  CHECK(oracle::max_abs(hamiltonian(AptParams::apt(0.8, 2.5)), oracle::apt_hamiltonian(0.8, 2.5)) == 0.0);
  CHECK(oracle::max_abs(hamiltonian(AptParams::pt(0.7)), oracle::pt_hamiltonian(0.7)) == 0.0);
}

TEST_CASE("APT is i times PT") {
  for (double a : {0.3, 1.0, 1.7}) {
    const ComplexMatrix2 apt = hamiltonian(AptParams::apt(a));
    const ComplexMatrix2 pt = hamiltonian(AptParams::pt(a));
    CHECK(max_abs_diff(apt, kI * pt) < 1e-15);
  }
}

TEST_CASE("APT anticommutes with PT operator") {
  // (PT) H (PT)^-1 = sx H* sx = -H for the APT family.
  for (double a : {0.5, 1.0, 1.3}) {
    const ComplexMatrix2 h = hamiltonian(AptParams::apt(a));
    const ComplexMatrix2 mapped = pauli::x() * h.conjugate() * pauli::x();
    CHECK(max_abs_diff(mapped, -h) < 1e-15);
  }
}

TEST_CASE("hamiltonian is traceless with eigenvalues +/- sqrt(a^2 - 1)") {
  for (double a : {0.6, 1.0, 2.0}) {
    const ComplexMatrix2 h = hamiltonian(AptParams::apt(a));
    CHECK(std::abs(h.trace()) == 0.0);
    const Complex lambda2 = -h.determinant();
    CHECK(std::abs(lambda2 - Complex(a * a - 1.0)) < 1e-14);
  }
}

TEST_CASE("classify") {
  CHECK(classify(AptParams::apt(1.2)) == Regime::Unbroken);
  CHECK(classify(AptParams::apt(0.8)) == Regime::Broken);
  CHECK(classify(AptParams::apt(1.0)) == Regime::ExceptionalPoint);
  CHECK(classify(AptParams::apt(1.0 + 1e-10)) == Regime::ExceptionalPoint);
  CHECK(classify(AptParams::apt(1.0 + 1e-10), 0.0) == Regime::Unbroken);
  CHECK(classify(AptParams::apt(1.01)) == Regime::Unbroken);
  CHECK(classify(AptParams::pt(0.8)) == Regime::Unbroken);
  CHECK(classify(AptParams::pt(1.2)) == Regime::Broken);
  CHECK_THROWS_AS(classify(AptParams::apt(1.2), -1.0), ValidationError);
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(AptParams::apt(1.2).validate());
  CHECK_THROWS_AS(AptParams::apt(0.0).validate(), ValidationError);
  CHECK_THROWS_AS(AptParams::apt(-1.0).validate(), ValidationError);
  CHECK_THROWS_AS(AptParams::apt(std::nan("")).validate(), ValidationError);
  CHECK_THROWS_AS(AptParams::apt(1.2, 0.0).validate(), ValidationError);
  CHECK_THROWS_AS(AptParams::apt(INFINITY).validate(), ValidationError);
}

TEST_CASE("to_string") {
  CHECK(to_string(Regime::Broken) == "broken");
  CHECK(to_string(Family::PT) == "PT");
}
