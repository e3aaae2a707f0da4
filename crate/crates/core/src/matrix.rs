//! Symmetric matrices over exact scalars and eigenvalue sign counting.
//!
//! The production inertia path is a fraction-free symmetric Gaussian
//! elimination (congruence) over the integers: pivoting on nonzero diagonal
//! entries when available, and counting zero-diagonal hyperbolic 2×2 blocks
//! as one positive plus one negative eigenvalue. A characteristic-polynomial
//! route (Faddeev–LeVerrier + Sturm counting on square-free factors) is kept
//! as an independent cross-check for small matrices.

#![allow(clippy::needless_range_loop)] // index pairs read clearer in elimination code

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::unipoly::{real_root_count_endpoints, square_free_decomposition, Endpoint, UniPoly};
use crate::{Int, Rational};

/// A symmetric n×n matrix; only the upper triangle is stored, so symmetry
/// holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix<T> {
    n: usize,
    upper: Vec<T>,
}

impl<T: Coeff> SymMatrix<T> {
    pub fn zero(n: usize) -> Self {
        SymMatrix {
            n,
            upper: vec![T::zero(); n * (n + 1) / 2],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build from dense rows, checking symmetry.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::AsymmetricMatrix);
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j].clone()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + j
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.upper[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        let k = self.idx(i, j);
        self.upper[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let mut out = self.clone();
        for (a, b) in out.upper.iter_mut().zip(rhs.upper.iter()) {
            *a += b.clone();
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = self.clone();
        for a in out.upper.iter_mut() {
            *a *= c.clone();
        }
        out
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> SymMatrix<U> {
        SymMatrix {
            n: self.n,
            upper: self.upper.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

impl SymMatrix<Rational> {
    /// Scale by the least common positive denominator; inertia is unchanged.
    pub fn clear_denominators(&self) -> (SymMatrix<Int>, Int) {
        let mut lcm = Int::one();
        for v in &self.upper {
            lcm = lcm.lcm(v.denom());
        }
        let m = self.map_coeffs(|v| v.numer() * (&lcm / v.denom()));
        (m, lcm)
    }
}

impl<T: Coeff> fmt::Display for SymMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl Inertia {
    pub fn total(&self) -> usize {
        self.n_pos + self.n_zero + self.n_neg
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+, {}0, {}-)", self.n_pos, self.n_zero, self.n_neg)
    }
}

/// Eigenvalue sign counts, exactly, by congruence elimination.
pub fn inertia(a: &SymMatrix<Rational>) -> Inertia {
    let (m, _) = a.clear_denominators();
    inertia_int(&m)
}

fn exact_div(num: Int, d: &Int) -> Int {
    debug_assert!(
        (&num % d).is_zero(),
        "non-exact division in fraction-free elimination"
    );
    num / d
}

/// Fraction-free congruence inertia over the integers.
///
/// Invariant maintained: the active trailing block of `m`, divided by `div`,
/// is congruent to the corresponding block of the input, and all stored
/// entries are integers (they are bordered minors of the input, up to
/// unimodular congruence).
pub fn inertia_int(a: &SymMatrix<Int>) -> Inertia {
    let n = a.n();
    let mut m: Vec<Vec<Int>> = a.to_rows();
    let mut div = Int::one();
    let mut inertia = Inertia {
        n_pos: 0,
        n_zero: 0,
        n_neg: 0,
    };
    let mut r = 0;
    while r < n {
        // prefer a nonzero diagonal pivot
        if let Some(p) = (r..n).find(|&i| !m[i][i].is_zero()) {
            sym_swap(&mut m, r, p);
            let pivot = m[r][r].clone();
            if pivot.is_negative() == div.is_negative() {
                inertia.n_pos += 1;
            } else {
                inertia.n_neg += 1;
            }
            for i in r + 1..n {
                for j in i..n {
                    let num = &pivot * &m[i][j] - &m[i][r] * &m[r][j];
                    let v = exact_div(num, &div);
                    m[i][j] = v.clone();
                    m[j][i] = v;
                }
            }
            div = pivot;
            r += 1;
            continue;
        }
        // all remaining diagonal entries vanish: find an off-diagonal entry
        let mut block = None;
        'scan: for i in r..n {
            for j in i + 1..n {
                if !m[i][j].is_zero() {
                    block = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((i, j)) = block else {
            inertia.n_zero += n - r;
            break;
        };
        // bring the hyperbolic block to (r, r+1); it contributes one positive
        // and one negative eigenvalue regardless of the divisor sign
        sym_swap(&mut m, r, i);
        let j = if j == r { i } else { j };
        sym_swap(&mut m, r + 1, j);
        let b = m[r][r + 1].clone();
        inertia.n_pos += 1;
        inertia.n_neg += 1;
        let d2 = &div * &div;
        for k in r + 2..n {
            for l in k..n {
                let num = &b * &(&m[k][r] * &m[l][r + 1] + &m[k][r + 1] * &m[l][r])
                    - &(&b * &b) * &m[k][l];
                let v = exact_div(num, &d2);
                m[k][l] = v.clone();
                m[l][k] = v;
            }
        }
        div = exact_div(-(&b * &b), &div);
        r += 2;
    }
    inertia
}

fn sym_swap(m: &mut [Vec<Int>], a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Textbook rational congruence elimination; the slow reference used by the
/// test suite to validate the fraction-free path.
pub fn inertia_naive(a: &SymMatrix<Rational>) -> Inertia {
    let n = a.n();
    let mut m: Vec<Vec<Rational>> = a.to_rows();
    let mut out = Inertia {
        n_pos: 0,
        n_zero: 0,
        n_neg: 0,
    };
    let mut r = 0;
    while r < n {
        if m[r][r].is_zero() {
            if let Some(p) = (r + 1..n).find(|&i| !m[i][i].is_zero()) {
                m.swap(r, p);
                for row in m.iter_mut() {
                    row.swap(r, p);
                }
            } else if let Some((i, j)) = (r..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_zero())
            {
                // congruence: add row/col j into row/col i, making the
                // diagonal entry 2·m[i][j] ≠ 0
                for k in 0..n {
                    let v = m[j][k].clone();
                    m[i][k] += v;
                }
                for row in m.iter_mut() {
                    let v = row[j].clone();
                    row[i] += v;
                }
                continue;
            } else {
                out.n_zero += n - r;
                break;
            }
        }
        let pivot = m[r][r].clone();
        if pivot.is_negative() {
            out.n_neg += 1;
        } else {
            out.n_pos += 1;
        }
        for i in r + 1..n {
            let factor = &m[i][r] / &pivot;
            for j in r..n {
                let sub = &factor * &m[r][j];
                m[i][j] = &m[i][j] - &sub;
            }
        }
        // mirror the row operation on columns to preserve symmetry
        for j in r + 1..n {
            m[j][r] = Rational::zero();
            m[r][j] = Rational::zero();
        }
        r += 1;
    }
    out
}

/// Monic characteristic polynomial det(tI − A) by the Faddeev–LeVerrier
/// recurrence (exact over the rationals).
pub fn char_poly(a: &SymMatrix<Rational>) -> UniPoly<Rational> {
    let n = a.n();
    let rows = a.to_rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    // M starts as the identity
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 1..=n {
        // AM = A * M
        let am: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = Rational::zero();
                        for l in 0..n {
                            acc += &rows[i][l] * &m[l][j];
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let mut trace = Rational::zero();
        for (i, row) in am.iter().enumerate() {
            trace += &row[i];
        }
        let c = -trace / Rational::from_integer(Int::from(k as i64));
        coeffs[n - k] = c.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    UniPoly::from_coeffs(coeffs)
}

/// Inertia through the characteristic polynomial: strip the zero root, then
/// count positive and negative roots of each square-free factor (Sturm) with
/// its multiplicity. Independent of the congruence path.
pub fn inertia_via_char_poly(a: &SymMatrix<Rational>) -> Result<Inertia> {
    let n = a.n();
    if n == 0 {
        return Ok(Inertia {
            n_pos: 0,
            n_zero: 0,
            n_neg: 0,
        });
    }
    let p = char_poly(a);
    let coeffs = p.coeffs();
    let n_zero = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("char poly is monic, hence nonzero");
    let reduced = UniPoly::from_coeffs(coeffs[n_zero..].to_vec());
    let mut n_pos = 0usize;
    let mut n_neg = 0usize;
    if reduced.degree().is_some_and(|d| d > 0) {
        let zero = Rational::zero();
        for (factor, mult) in square_free_decomposition(&reduced)? {
            let pos = real_root_count_endpoints(&factor, Endpoint::Value(&zero), Endpoint::PosInf)?;
            let neg = real_root_count_endpoints(&factor, Endpoint::NegInf, Endpoint::Value(&zero))?;
            n_pos += mult as usize * pos;
            n_neg += mult as usize * neg;
        }
    }
    debug_assert_eq!(n_pos + n_neg + n_zero, n, "symmetric spectrum is real");
    Ok(Inertia {
        n_pos,
        n_zero,
        n_neg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn qmat(rows: &[&[i64]]) -> SymMatrix<Rational> {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect();
        SymMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn from_rows_rejects_asymmetric() {
        let rows = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ];
        assert_eq!(
            SymMatrix::from_rows(&rows).unwrap_err(),
            Error::AsymmetricMatrix
        );
    }

    #[test]
    fn inertia_hyperbolic_block() {
        // [[0,1],[1,0]] has eigenvalues ±1
        let m = qmat(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            inertia(&m),
            Inertia {
                n_pos: 1,
                n_zero: 0,
                n_neg: 1
            }
        );
    }

    #[test]
    fn inertia_diag() {
        let m = qmat(&[&[2, 0], &[0, 2]]);
        assert_eq!(
            inertia(&m),
            Inertia {
                n_pos: 2,
                n_zero: 0,
                n_neg: 0
            }
        );
    }

    #[test]
    fn inertia_all_ones_offdiag() {
        // Hessian of x1x2 + x1x3 + x2x3: eigenvalues 2, -1, -1
        let m = qmat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let expect = Inertia {
            n_pos: 1,
            n_zero: 0,
            n_neg: 2,
        };
        assert_eq!(inertia(&m), expect);
        // cross-check against the characteristic polynomial route, as well
        // as the naive rational elimination
        assert_eq!(inertia_via_char_poly(&m).unwrap(), expect);
        assert_eq!(inertia_naive(&m), expect);
    }

    #[test]
    fn inertia_with_zero_rows() {
        let m = qmat(&[&[0, 0, 0], &[0, 5, 0], &[0, 0, -1]]);
        assert_eq!(
            inertia(&m),
            Inertia {
                n_pos: 1,
                n_zero: 1,
                n_neg: 1
            }
        );
    }

    #[test]
    fn inertia_rational_entries() {
        let rows = vec![
            vec![rat(1, 3), rat(1, 2)],
            vec![rat(1, 2), rat(-2, 5)],
        ];
        let m = SymMatrix::from_rows(&rows).unwrap();
        let got = inertia(&m);
        assert_eq!(got, inertia_via_char_poly(&m).unwrap());
        assert_eq!(got, inertia_naive(&m));
    }

    #[test]
    fn char_poly_of_diag() {
        // diag(1, -2): (t-1)(t+2) = t^2 + t - 2
        let m = qmat(&[&[1, 0], &[0, -2]]);
        let p = char_poly(&m);
        assert_eq!(
            p,
            UniPoly::from_coeffs(vec![rat_int(-2), rat_int(1), rat_int(1)])
        );
    }

    #[test]
    fn hyperbolic_chain_4x4() {
        let m = qmat(&[
            &[0, 1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
        ]);
        assert_eq!(
            inertia(&m),
            Inertia {
                n_pos: 2,
                n_zero: 0,
                n_neg: 2
            }
        );
    }
}
