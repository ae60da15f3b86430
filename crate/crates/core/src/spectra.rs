//! Exact characteristic polynomials and cospectrality certificates.
//!
//! Characteristic polynomials are computed with Berkowitz's algorithm over
//! arbitrary-precision integers: no division, no floating point. Two graphs
//! are cospectral for a matrix kind exactly when these polynomials agree
//! coefficient for coefficient.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "A")]
    Adjacency,
    /// `D - A`.
    #[serde(rename = "L")]
    Laplacian,
    /// `D + A`.
    #[serde(rename = "Q")]
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" | "adjacency" => Ok(MatrixKind::Adjacency),
            "L" | "l" | "laplacian" => Ok(MatrixKind::Laplacian),
            "Q" | "q" | "signless" | "signless_laplacian" => Ok(MatrixKind::SignlessLaplacian),
            _ => Err(Error::Parse(format!("unknown matrix kind `{s}` (expected A, L or Q)"))),
        }
    }
}

/// The integer matrix of `kind` associated with `g`.
pub fn graph_matrix(g: &Graph, kind: MatrixKind) -> Vec<Vec<i64>> {
    let mut m = g.adjacency_matrix();
    let sign = match kind {
        MatrixKind::Adjacency => return m,
        MatrixKind::Laplacian => -1,
        MatrixKind::SignlessLaplacian => 1,
    };
    for (v, row) in m.iter_mut().enumerate() {
        for x in row.iter_mut() {
            *x *= sign;
        }
        row[v] = g.degree(v) as i64;
    }
    m
}

/// Monic characteristic polynomial `det(xI - M)` of a graph matrix.
///
/// Serialises as a JSON array of decimal coefficient strings, highest
/// degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly(Poly);

impl CharPoly {
    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    /// Coefficients from `x^n` down to the constant term; length `n + 1`.
    pub fn coeffs(&self) -> Vec<BigInt> {
        self.0.descending()
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap_or(0)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.coeff(k)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for CharPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs().iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        let p = Poly::from_descending(coeffs);
        if !p.is_monic() {
            return Err(serde::de::Error::custom("characteristic polynomial must be monic"));
        }
        Ok(CharPoly(p))
    }
}

pub fn char_poly(g: &Graph, kind: MatrixKind) -> CharPoly {
    CharPoly(berkowitz(&graph_matrix(g, kind)))
}

/// `det(xI - M)` for a square integer matrix, by Berkowitz's algorithm.
///
/// Step `r` extends the characteristic polynomial of the leading
/// `(r-1) x (r-1)` block by multiplying with a lower-triangular Toeplitz
/// matrix whose first column is `1, -a, -R S, -R M S, …, -R M^(r-2) S`,
/// where `M` is the leading block, `S` the new column above the diagonal,
/// `R` the new row left of it and `a` the new diagonal entry.
pub fn berkowitz(m: &[Vec<i64>]) -> Poly {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    // descending coefficients of the current leading block
    let mut c: Vec<BigInt> = vec![BigInt::from(1)];
    for r in 0..n {
        // new index r; leading block is 0..r
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::from(1));
        col.push(BigInt::from(-m[r][r]));
        let mut v: Vec<BigInt> = (0..r).map(|i| BigInt::from(m[i][r])).collect();
        for k in 0..r {
            if k > 0 {
                v = (0..r)
                    .map(|i| {
                        (0..r)
                            .filter(|&j| m[i][j] != 0)
                            .fold(BigInt::zero(), |acc, j| acc + &v[j] * m[i][j])
                    })
                    .collect();
            }
            let rs = (0..r)
                .filter(|&j| m[r][j] != 0)
                .fold(BigInt::zero(), |acc, j| acc + &v[j] * m[r][j]);
            col.push(-rs);
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .filter(|&j| i - j < col.len())
                    .fold(BigInt::zero(), |acc, j| acc + &col[i - j] * &c[j])
            })
            .collect();
        c = next;
    }
    Poly::from_descending(c)
}

pub fn cospectral(g: &Graph, h: &Graph, kind: MatrixKind) -> bool {
    g.order() == h.order() && char_poly(g, kind) == char_poly(h, kind)
}

/// Cospectrality of a pair under several matrices at once.
///
/// For two `k`-regular graphs, `L = kI - A`, `Q = kI + A` and the
/// normalised Laplacian `I - A/k` are all determined by `A`, so adjacency
/// cospectrality carries over. `L` and `Q` are nevertheless recomputed
/// directly; the normalised Laplacian is only ever reported as derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularCospectralReport {
    /// Both graphs regular of the same degree.
    pub regular: bool,
    pub degree: Option<usize>,
    pub adjacency: bool,
    pub laplacian: bool,
    pub signless_laplacian: bool,
    /// Set only when the regular derivation applies; never computed directly.
    pub normalized_laplacian_derived: Option<bool>,
    /// `L` and `Q` agree with what regularity predicts.
    pub consistent: bool,
}

pub fn regular_cospectral_report(g: &Graph, h: &Graph) -> RegularCospectralReport {
    let degree = match (g.regular_degree(), h.regular_degree()) {
        (Some(a), Some(b)) if a == b && g.order() == h.order() => Some(a),
        _ => None,
    };
    let regular = degree.is_some();
    let adjacency = cospectral(g, h, MatrixKind::Adjacency);
    let laplacian = cospectral(g, h, MatrixKind::Laplacian);
    let signless_laplacian = cospectral(g, h, MatrixKind::SignlessLaplacian);
    let derived = regular && adjacency;
    RegularCospectralReport {
        regular,
        degree,
        adjacency,
        laplacian,
        signless_laplacian,
        normalized_laplacian_derived: derived.then_some(true),
        consistent: !derived || (laplacian && signless_laplacian),
    }
}

/// Checks the Laplacian spectrum of a join exactly:
///
/// `L_{g∨h}(x) (x-n')(x-n) = x (x-n-n') L_g(x-n') L_h(x-n)`,
///
/// and additionally that `(x-n')` divides `L_g(x-n')` and `(x-n)` divides
/// `L_h(x-n)` with the quotients reproducing `L_{g∨h}`.
pub fn laplacian_join_identity_check(g: &Graph, h: &Graph) -> Result<bool> {
    let (n, m) = (g.order() as i64, h.order() as i64);
    if n == 0 || m == 0 {
        return Err(Error::precondition("join identity needs two non-empty graphs"));
    }
    let joined = char_poly(&g.join(h)?, MatrixKind::Laplacian).into_poly();
    let lg = char_poly(g, MatrixKind::Laplacian).into_poly().shift(-m);
    let lh = char_poly(h, MatrixKind::Laplacian).into_poly().shift(-n);

    let lhs = &(&joined * &Poly::linear(m)) * &Poly::linear(n);
    let rhs = &(&(&Poly::x() * &Poly::linear(n + m)) * &lg) * &lh;
    if lhs != rhs {
        return Ok(false);
    }
    let (Some(qg), Some(qh)) = (lg.exact_div(&Poly::linear(m)), lh.exact_div(&Poly::linear(n))) else {
        return Ok(false);
    };
    Ok(&(&(&Poly::x() * &Poly::linear(n + m)) * &qg) * &qh == joined)
}

/// For an `r`-regular `g` and `r'`-regular `h`:
///
/// `A_{g∨h}(x) (x-r)(x-r') = A_g(x) A_h(x) (x² - (r+r')x + rr' - nn')`.
pub fn regular_join_adjacency_check(g: &Graph, h: &Graph) -> Result<bool> {
    let (Some(r), Some(s)) = (g.regular_degree(), h.regular_degree()) else {
        return Err(Error::precondition("both graphs must be regular"));
    };
    let (r, s) = (r as i64, s as i64);
    let (n, m) = (g.order() as i64, h.order() as i64);
    let joined = char_poly(&g.join(h)?, MatrixKind::Adjacency).into_poly();
    let ag = char_poly(g, MatrixKind::Adjacency).into_poly();
    let ah = char_poly(h, MatrixKind::Adjacency).into_poly();
    let quad = Poly::from_i64s(&[r * s - n * m, -(r + s), 1]);
    let lhs = &(&joined * &Poly::linear(r)) * &Poly::linear(s);
    let rhs = &(&ag * &ah) * &quad;
    Ok(lhs == rhs)
}
