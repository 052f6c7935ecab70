//! Published constants used as golden data.
//!
//! Each entry carries a short tag naming where the value is printed. All
//! polynomials are in real orbit-space coordinates unless the entry says
//! otherwise.

use crate::error::Result;
use crate::exactnum::{int, parse_rational, Rational};
use crate::mpoly::{MPoly, Matrix};
use crate::rootdata::{Family, RootSystemType};

/// Coordinates a golden polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinates {
    Real,
    /// `z_i = θ_i`, before the real embedding.
    Complex,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GoldenValue {
    /// Product of the listed factors (each a plain-text polynomial).
    Poly { factors: &'static [&'static str], coordinates: Coordinates },
    /// Scalar times a matrix of plain-text polynomials.
    Matrix { scalar: &'static str, rows: &'static [&'static [&'static str]] },
    /// Hermitian matrix given by real and imaginary parts.
    HermitianMatrix {
        scalar: &'static str,
        re: &'static [&'static [&'static str]],
        im: &'static [&'static [&'static str]],
    },
    /// Points with the rank of `H` there; irrational coordinates are given as floats.
    Vertices(&'static [([f64; 2], usize)]),
    /// `det H = factor · det(−M)`.
    Quotient { factor: &'static str },
    /// `φ = ratio · det M` as printed.
    PhiRatio { printed: &'static str },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenEntry {
    pub name: &'static str,
    /// Neutral description of where the value is printed.
    pub location: &'static str,
    pub family: Family,
    pub rank: usize,
    pub value: GoldenValue,
}

impl GoldenEntry {
    pub fn kind(&self) -> RootSystemType {
        RootSystemType { family: self.family, rank: self.rank }
    }

    fn nvars(&self) -> usize {
        self.rank
    }

    /// The polynomial of a [`GoldenValue::Poly`] or [`GoldenValue::Quotient`] entry.
    pub fn poly(&self) -> Result<MPoly> {
        let parse = |s: &str| -> Result<MPoly> { Ok(s.parse::<MPoly>()?.lift(self.nvars())) };
        match &self.value {
            GoldenValue::Poly { factors, .. } => {
                factors.iter().try_fold(MPoly::constant(self.nvars(), int(1)), |acc, f| Ok(&acc * &parse(f)?))
            }
            GoldenValue::Quotient { factor } => parse(factor),
            _ => Err(crate::Error::Invalid(format!("{} is not a polynomial entry", self.name))),
        }
    }

    /// Matrix entries with the printed scalar applied.
    pub fn matrix(&self) -> Result<Matrix<MPoly>> {
        match &self.value {
            GoldenValue::Matrix { scalar, rows } => self.parse_rows(scalar, rows),
            GoldenValue::HermitianMatrix { scalar, re, .. } => self.parse_rows(scalar, re),
            _ => Err(crate::Error::Invalid(format!("{} is not a matrix entry", self.name))),
        }
    }

    /// Imaginary part of a [`GoldenValue::HermitianMatrix`], scalar applied.
    pub fn matrix_imaginary(&self) -> Result<Matrix<MPoly>> {
        match &self.value {
            GoldenValue::HermitianMatrix { scalar, im, .. } => self.parse_rows(scalar, im),
            _ => Err(crate::Error::Invalid(format!("{} is not a Hermitian entry", self.name))),
        }
    }

    fn parse_rows(&self, scalar: &str, rows: &[&[&str]]) -> Result<Matrix<MPoly>> {
        let s = parse_rational(scalar)?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|e| Ok(e.parse::<MPoly>()?.lift(self.nvars()).scale(&s))).collect())
            .collect::<Result<Vec<Vec<MPoly>>>>()?;
        Ok(Matrix::from_rows(rows))
    }

    pub fn scalar(&self) -> Result<Rational> {
        match &self.value {
            GoldenValue::Matrix { scalar, .. } | GoldenValue::HermitianMatrix { scalar, .. } => parse_rational(scalar),
            GoldenValue::PhiRatio { printed } => parse_rational(printed),
            _ => Err(crate::Error::Invalid(format!("{} has no scalar", self.name))),
        }
    }
}

const C2_H_ROWS: &[&[&str]] = &[
    &["-2 z1^2 + z2 + 1", "-8 z1^3 + 6 z1 z2 + 2 z1"],
    &["-8 z1^3 + 6 z1 z2 + 2 z1", "-32 z1^4 + 8 z1^2 + 32 z1^2 z2 - 4 z2^2 - 4 z2"],
];

const B2_H_ROWS: &[&[&str]] = &[
    &["-z1^2 + 2 z2^2 - z1", "-4 z1^3 + 12 z1 z2^2 - 6 z1^2 - 2 z1"],
    &[
        "-4 z1^3 + 12 z1 z2^2 - 6 z1^2 - 2 z1",
        "-16 z1^4 + 64 z1^2 z2^2 - 32 z2^4 - 32 z1^3 + 32 z1 z2^2 - 20 z1^2 + 8 z2^2 - 4 z1",
    ],
];

const D4_DET: &str = "-512 z1^3 z3^3 z4^3 - 432 z1^4 z3^4 - 96 z1^4 z3^2 z4^2 - 432 z1^4 z4^4 + 864 z1^3 z2 z3^3 z4 \
+ 864 z1^3 z2 z3 z4^3 + 144 z1^2 z2^2 z3^2 z4^2 - 96 z1^2 z3^4 z4^2 - 96 z1^2 z3^2 z4^4 + 864 z1 z2 z3^3 z4^3 \
- 432 z3^4 z4^4 - 384 z1^5 z3 z4 + 864 z1^4 z2 z3^2 + 864 z1^4 z2 z4^2 - 1440 z1^3 z2^2 z3 z4 + 96 z1^3 z3^3 z4 \
+ 96 z1^3 z3 z4^3 - 216 z1^2 z2^3 z3^2 - 216 z1^2 z2^3 z4^2 + 864 z1^2 z2 z3^4 + 576 z1^2 z2 z3^2 z4^2 \
+ 864 z1^2 z2 z4^4 - 1440 z1 z2^2 z3^3 z4 - 1440 z1 z2^2 z3 z4^3 - 384 z1 z3^5 z4 + 96 z1 z3^3 z4^3 \
- 384 z1 z3 z4^5 - 216 z2^3 z3^2 z4^2 + 864 z2 z3^4 z4^2 + 864 z2 z3^2 z4^4 + 64 z1^6 - 288 z1^4 z2^2 \
+ 192 z1^4 z3^2 + 192 z1^4 z4^2 + 288 z1^3 z2 z3 z4 + 324 z1^2 z2^4 - 1872 z1^2 z2^2 z3^2 - 1872 z1^2 z2^2 z4^2 \
+ 192 z1^2 z3^4 - 240 z1^2 z3^2 z4^2 + 192 z1^2 z4^4 + 2376 z1 z2^3 z3 z4 + 288 z1 z2 z3^3 z4 + 288 z1 z2 z3 z4^3 \
+ 324 z2^4 z3^2 + 324 z2^4 z4^2 - 288 z2^2 z3^4 - 1872 z2^2 z3^2 z4^2 - 288 z2^2 z4^4 + 64 z3^6 + 192 z3^4 z4^2 \
+ 192 z3^2 z4^4 + 64 z4^6 - 288 z1^4 z2 + 192 z1^3 z3 z4 + 864 z1^2 z2^3 - 792 z1^2 z2 z3^2 - 792 z1^2 z2 z4^2 \
+ 792 z1 z2^2 z3 z4 + 192 z1 z3^3 z4 + 192 z1 z3 z4^3 - 486 z2^5 + 864 z2^3 z3^2 + 864 z2^3 z4^2 - 288 z2 z3^4 \
- 792 z2 z3^2 z4^2 - 288 z2 z4^4 - 48 z1^4 + 576 z1^2 z2^2 - 96 z1^2 z3^2 - 96 z1^2 z4^2 - 72 z1 z2 z3 z4 \
- 729 z2^4 + 576 z2^2 z3^2 + 576 z2^2 z4^2 - 48 z3^4 - 96 z3^2 z4^2 - 48 z4^4 + 144 z1^2 z2 - 24 z1 z3 z4 \
- 432 z2^3 + 144 z2 z3^2 + 144 z2 z4^2 + 12 z1^2 - 126 z2^2 + 12 z3^2 + 12 z4^2 - 18 z2 - 1";

/// Computed minus printed `h1`. The printed bracket carries `+404 z1 z2^2`;
/// both the characteristic polynomial and the sum of principal 2x2 minors
/// give `-404`.
pub const A2_H1_ERRATUM: &str = "-24543/32 z1 z2^4";

const A2_H1: &str = "-243 z1^8 - 972 z1^6 z2^2 - 1458 z1^4 z2^4 - 972 z1^2 z2^6 - 243 z2^8 + 324 z1^7 \
- 1620 z1^5 z2^2 - 4212 z1^3 z2^4 - 2268 z1 z2^6 - 432 z1^6 - 2052 z1^4 z2^2 - 5400 z1^2 z2^4 - 324 z2^6 \
+ 180 z1^5 - 3384 z1^3 z2^2 - 684 z1 z2^4 + 18 z1^4 - 804 z1^2 z2^2 + 42 z2^4 + 76 z1^3 + 404 z1 z2^2 \
- 8 z1^2 - 108 z2^2 + 60 z1 + 25";

const A2_H2: &str = "-729 z1^6 + 1458 z1^5 + (10935 z2^2 - 1215) z1^4 + (-2916 z2^2 + 540) z1^3 + 351 z2^2 + 63 \
+ (-10935 z2^4 + 1458 z2^2 - 135) z1^2 + (-4374 z2^4 + 972 z2^2 + 18) z1 + 729 z2^6 - 1215 z2^4";

const S3: f64 = 0.866_025_403_784_438_6;

/// Every golden entry.
pub fn registry() -> Vec<GoldenEntry> {
    use Coordinates::*;
    use Family::*;
    use GoldenValue::*;
    let e = |name, location, family, rank, value| GoldenEntry { name, location, family, rank, value };
    vec![
        e("c2_hermite_intro", "introductory example, matrix H(z)", C, 2, Matrix { scalar: "1", rows: C2_H_ROWS }),
        e("c2_hermite", "type C worked example, H(z) = 8[...]", C, 2, Matrix { scalar: "8", rows: C2_H_ROWS }),
        e("b2_hermite", "type B worked example, H(z) = 16[...]", B, 2, Matrix { scalar: "16", rows: B2_H_ROWS }),
        e(
            "c2_companion",
            "type C worked example, matrix C(z)",
            C,
            2,
            Matrix { scalar: "1", rows: &[&["0", "-4 z2"], &["1", "4 z1"]] },
        ),
        e(
            "b2_companion",
            "type B worked example, matrix C(z)",
            B,
            2,
            Matrix { scalar: "1", rows: &[&["0", "-16 z2^2 + 8 z1 + 4"], &["1", "4 z1"]] },
        ),
        e(
            "a2_companion",
            "type A worked example, matrix C(z)",
            A,
            2,
            Matrix {
                scalar: "1",
                rows: &[
                    &["0", "1/2", "1/2 (1 + 9 z1^2 - 9 z2^2)"],
                    &["1", "0", "1/2 (1 - 9 z1^2 - 9 z2^2 - 6 z1)"],
                    &["0", "1/2", "3 z1"],
                ],
            },
        ),
        e(
            "c2_det",
            "type C worked example, det H(z)",
            C,
            2,
            Poly {
                factors: &["256", "-4 z1^4 + z1^2 z2^2 + 6 z1^2 z2 - z2^3 + z1^2 - 2 z2^2 - z2"],
                coordinates: Real,
            },
        ),
        e(
            "c2_trace",
            "type C worked example, trace H(z)",
            C,
            2,
            Poly { factors: &["8", "-32 z1^4 + 32 z1^2 z2 + 6 z1^2 - 4 z2^2 - 3 z2 + 1"], coordinates: Real },
        ),
        e(
            "b2_det",
            "type B worked example, det H(z)",
            B,
            2,
            Poly {
                factors: &["4096", "z1^2 z2^4 - 4 z2^6 - z1^3 z2^2 + 6 z1 z2^4 - 2 z1^2 z2^2 + z2^4 - z1 z2^2"],
                coordinates: Real,
            },
        ),
        e(
            "b2_trace",
            "type B worked example, trace H(z)",
            B,
            2,
            Poly {
                factors: &["16", "-16 z1^4 + 64 z1^2 z2^2 - 32 z2^4 - 32 z1^3 + 32 z1 z2^2 - 21 z1^2 + 10 z2^2 - 5 z1"],
                coordinates: Real,
            },
        ),
        e(
            "a2_h0",
            "type A worked example, coefficient h0",
            A,
            2,
            Poly {
                factors: &[
                    "2187/64",
                    "z2^4",
                    "(3 z1 + 1)^2",
                    "-3 z1^4 - 6 z1^2 z2^2 - 3 z2^4 + 8 z1^3 - 24 z1 z2^2 - 6 z1^2 - 6 z2^2 + 1",
                ],
                coordinates: Real,
            },
        ),
        e(
            "a2_h1",
            "type A worked example, coefficient h1",
            A,
            2,
            Poly { factors: &["243/256", "z2^2", A2_H1], coordinates: Real },
        ),
        e(
            "a2_h2",
            "type A worked example, coefficient h2",
            A,
            2,
            Poly { factors: &["1/32", A2_H2], coordinates: Real },
        ),
        e(
            "d4_det",
            "type D four-dimensional example, det H(z)",
            D,
            4,
            Poly { factors: &["4294967296", "(z3 - z4)^2", "(z3 + z4)^2", D4_DET], coordinates: Real },
        ),
        e(
            "a2_vertices",
            "type A worked example, vertex list and rank discussion",
            A,
            2,
            Vertices(&[([-0.5, S3], 1), ([-0.5, -S3], 1), ([1.0, 0.0], 0), ([-1.0 / 3.0, 0.0], 0)]),
        ),
        e(
            "c2_vertices",
            "type C worked example, vertex list",
            C,
            2,
            Vertices(&[([0.0, -1.0], 0), ([-1.0, 1.0], 0), ([1.0, 1.0], 0)]),
        ),
        e(
            "a2_m",
            "comparison example, Hermitian matrix M(z)",
            A,
            2,
            HermitianMatrix {
                scalar: "2/3",
                re: &[&["z1^2 + z2^2 - 1", "2 z1^2 - 2 z2^2 - 2 z1"], &["2 z1^2 - 2 z2^2 - 2 z1", "z1^2 + z2^2 - 1"]],
                im: &[&["0", "4 z1 z2 + 2 z2"], &["-4 z1 z2 - 2 z2", "0"]],
            },
        ),
        e(
            "a2_det_neg_m",
            "comparison example, det(-M(z))",
            A,
            2,
            Poly {
                factors: &["1/9", "-12 z1^4 - 24 z1^2 z2^2 - 12 z2^4 + 32 z1^3 - 96 z1 z2^2 - 24 z1^2 - 24 z2^2 + 4"],
                coordinates: Real,
            },
        ),
        e(
            "a2_quotient",
            "comparison example, det H versus det(-M)",
            A,
            2,
            Quotient { factor: "19683/256 (3 z1 + 1)^2 z2^4" },
        ),
        e("b2_quotient", "comparison example, det H versus det(-M)", B, 2, Quotient { factor: "16384/9 z2^2" }),
        e("c2_quotient", "comparison example, det H versus det(-M)", C, 2, Quotient { factor: "1024/9" }),
        e(
            "a1_phi",
            "orthogonality examples, univariate case",
            A,
            1,
            Poly { factors: &["4", "z1^2 - 1"], coordinates: Complex },
        ),
        e(
            "a2_phi",
            "orthogonality examples, type A2",
            A,
            2,
            Poly { factors: &["81 z1^2 z2^2 - 108 z1^3 - 108 z2^3 + 162 z1 z2 - 27"], coordinates: Complex },
        ),
        e(
            "b2_phi",
            "orthogonality examples, type B2",
            B,
            2,
            Poly {
                factors: &["256 z1^2 z2^2 - 1024 z2^4 - 256 z1^3 + 1536 z1 z2^2 - 512 z1^2 + 256 z2^2 - 256 z1"],
                coordinates: Complex,
            },
        ),
        e(
            "c2_phi",
            "orthogonality examples, type C2",
            C,
            2,
            Poly {
                factors: &["-1024 z1^4 + 256 z1^2 z2^2 + 1536 z1^2 z2 - 256 z2^3 + 256 z1^2 - 512 z2^2 - 256 z2"],
                coordinates: Complex,
            },
        ),
        e("a2_phi_ratio", "orthogonality examples, type A2", A, 2, PhiRatio { printed: "243/3" }),
        e("b2_phi_ratio", "orthogonality examples, type B2", B, 2, PhiRatio { printed: "1024/9" }),
        e("c2_phi_ratio", "orthogonality examples, type C2", C, 2, PhiRatio { printed: "256" }),
    ]
}

pub fn get(name: &str) -> Option<GoldenEntry> {
    registry().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_parse() {
        for e in registry() {
            match &e.value {
                GoldenValue::Poly { .. } | GoldenValue::Quotient { .. } => {
                    e.poly().unwrap();
                }
                GoldenValue::Matrix { .. } => {
                    e.matrix().unwrap();
                }
                GoldenValue::HermitianMatrix { .. } => {
                    e.matrix().unwrap();
                    e.matrix_imaginary().unwrap();
                }
                GoldenValue::PhiRatio { .. } => {
                    e.scalar().unwrap();
                }
                GoldenValue::Vertices(_) => {}
            }
            assert!(!e.location.is_empty());
        }
    }

    #[test]
    fn names_are_unique() {
        let r = registry();
        let mut names: Vec<_> = r.iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), r.len());
        assert!(get("d4_det").is_some());
    }

    #[test]
    fn d4_determinant_degree() {
        assert_eq!(get("d4_det").unwrap().poly().unwrap().total_degree(), Some(13));
    }
}
