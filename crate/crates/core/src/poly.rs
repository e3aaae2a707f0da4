//! Sparse multivariate polynomial arithmetic over an arbitrary signed scalar.
//!
//! Polynomials are maps from monomials to coefficients; monomials are sparse
//! sorted exponent lists. Terms are kept in graded-lexicographic order so
//! iteration and serialization are deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::scalar::Coeff;
use crate::unipoly::UniPoly;
use crate::{Int, Rational};

/// A monomial as a sparse list of `(variable, exponent)` pairs, sorted by
/// variable index, with no zero exponents stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pairs: Vec<(u32, u32)>,
}

impl Monomial {
    /// The empty product (the constant monomial).
    pub fn one() -> Self {
        Monomial { pairs: Vec::new() }
    }

    /// Build from arbitrary `(variable, exponent)` pairs; duplicates are
    /// merged and zero exponents dropped.
    pub fn new(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            pairs: map.into_iter().collect(),
        }
    }

    /// Build from a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial::new(
            exps.iter()
                .enumerate()
                .map(|(v, &e)| (v as u32, e)),
        )
    }

    pub fn variable(v: u32) -> Self {
        Monomial {
            pairs: vec![(v, 1)],
        }
    }

    pub fn degree(&self) -> u32 {
        self.pairs.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.pairs
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.pairs[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.pairs.iter().copied()
    }

    /// Largest variable index present, if any.
    pub fn max_var(&self) -> Option<u32> {
        self.pairs.last().map(|&(v, _)| v)
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.iter().chain(other.iter()))
    }

    /// Divide by `other` if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut pairs = Vec::with_capacity(self.pairs.len());
        let mut rhs = other.pairs.iter().peekable();
        for &(v, e) in &self.pairs {
            let mut e = e;
            if let Some(&&(vo, eo)) = rhs.peek() {
                if vo == v {
                    if eo > e {
                        return None;
                    }
                    e -= eo;
                    rhs.next();
                }
            }
            if e > 0 {
                pairs.push((v, e));
            }
        }
        if rhs.next().is_some() {
            return None; // divisor mentions a variable self lacks
        }
        Some(Monomial { pairs })
    }

    /// Dense exponent vector of length `n`.
    pub fn to_dense(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0u32; n];
        for (v, e) in self.iter() {
            if (v as usize) < n {
                out[v as usize] = e;
            }
        }
        out
    }

    /// All monomials dividing `self` with total degree exactly `deg`.
    pub fn divisors_of_degree(&self, deg: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur: Vec<(u32, u32)> = Vec::new();
        fn rec(
            pairs: &[(u32, u32)],
            idx: usize,
            left: u32,
            cur: &mut Vec<(u32, u32)>,
            out: &mut Vec<Monomial>,
        ) {
            if left == 0 {
                out.push(Monomial { pairs: cur.clone() });
                return;
            }
            if idx == pairs.len() {
                return;
            }
            let (v, e) = pairs[idx];
            for take in 0..=e.min(left) {
                if take > 0 {
                    cur.push((v, take));
                }
                rec(pairs, idx + 1, left - take, cur, out);
                if take > 0 {
                    cur.pop();
                }
            }
        }
        rec(&self.pairs, 0, deg, &mut cur, &mut out);
        out
    }
}

impl Ord for Monomial {
    /// Graded-lexicographic order: total degree first, then lexicographic
    /// with lower-indexed variables weighing more.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.pairs.iter();
            let mut b = other.pairs.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            return if va < vb {
                                Ordering::Greater
                            } else {
                                Ordering::Less
                            };
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse multivariate polynomial with coefficients in `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<T> {
    num_vars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Coeff> Polynomial<T> {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: T) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn variable(num_vars: usize, v: u32) -> Self {
        assert!((v as usize) < num_vars, "variable out of range");
        let mut p = Self::zero(num_vars);
        p.add_term(Monomial::variable(v), T::one());
        p
    }

    /// The linear form `Σ coeffs[i]·x_i`.
    pub fn linear_form(coeffs: &[T]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (v, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::variable(v as u32), c.clone());
        }
        p
    }

    pub fn from_terms(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Monomial, T)>,
    ) -> Result<Self> {
        let mut p = Self::zero(num_vars);
        for (m, c) in terms {
            if let Some(v) = m.max_var() {
                if v as usize >= num_vars {
                    return Err(Error::VariableOutOfRange {
                        var: v as usize,
                        num_vars,
                    });
                }
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Accumulate a term, keeping the no-zero-coefficients invariant.
    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// The zero polynomial is homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when every variable occurs with exponent at most one.
    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|(_, e)| e <= 1))
    }

    /// Variables that actually occur (equivalently, those with ∂_i f ≠ 0).
    pub fn support_vars(&self) -> BTreeSet<u32> {
        let mut vars = BTreeSet::new();
        for m in self.terms.keys() {
            vars.extend(m.iter().map(|(v, _)| v));
        }
        vars
    }

    pub fn max_abs_coeff(&self) -> Option<T> {
        self.terms
            .values()
            .map(|c| c.abs())
            .fold(None, |acc, c| match acc {
                None => Some(c),
                Some(a) => Some(if c > a { c } else { a }),
            })
    }

    pub fn max_coeff(&self) -> Option<T> {
        self.terms.values().cloned().fold(None, |acc, c| match acc {
            None => Some(c),
            Some(a) => Some(if c > a { c } else { a }),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        let mut out = Self::zero(self.num_vars);
        for (m, a) in self.terms() {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        let mut out = Polynomial::zero(self.num_vars);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(self.num_vars, T::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// ∂^α f with exact coefficients.
    pub fn differentiate(&self, alpha: &Monomial) -> Result<Self> {
        if let Some(v) = alpha.max_var() {
            if v as usize >= self.num_vars {
                return Err(Error::VariableOutOfRange {
                    var: v as usize,
                    num_vars: self.num_vars,
                });
            }
        }
        let mut out = Self::zero(self.num_vars);
        'term: for (m, c) in self.terms() {
            let mut coeff = c.clone();
            for (v, k) in alpha.iter() {
                let e = m.exponent(v);
                if e < k {
                    continue 'term;
                }
                for j in 0..k {
                    coeff *= T::from_u32(e - j).expect("small integer fits scalar");
                }
            }
            let reduced = m.try_div(alpha).expect("divisibility checked above");
            out.add_term(reduced, coeff);
        }
        Ok(out)
    }

    /// ∂_i f.
    pub fn partial(&self, var: u32) -> Result<Self> {
        self.differentiate(&Monomial::variable(var))
    }

    /// Directional derivative Σ v_i ∂_i f; the direction may have entries of
    /// any sign.
    pub fn directional_derivative(&self, v: &[T]) -> Result<Self> {
        if v.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: v.len(),
            });
        }
        let mut out = Self::zero(self.num_vars);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let d = self.partial(i as u32)?;
            for (m, c) in d.terms() {
                out.add_term(m.clone(), c.clone() * vi.clone());
            }
        }
        Ok(out)
    }

    /// The product of directional derivatives along the (nonnegative) columns
    /// of `directions`, applied left to right. The empty list returns `f`.
    pub fn dv_derivative(&self, directions: &[Vec<T>]) -> Result<Self> {
        for d in directions {
            if d.len() != self.num_vars {
                return Err(Error::DimensionMismatch {
                    expected: self.num_vars,
                    found: d.len(),
                });
            }
            if d.iter().any(|c| c.is_negative()) {
                return Err(Error::NegativeDirection);
            }
        }
        let mut out = self.clone();
        for d in directions {
            out = out.directional_derivative(d)?;
        }
        Ok(out)
    }

    /// Exact value of `f` at `point`.
    pub fn evaluate(&self, point: &[T]) -> Result<T> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: point.len(),
            });
        }
        let mut acc = T::zero();
        for (m, c) in self.terms() {
            let mut v = c.clone();
            for (var, e) in m.iter() {
                for _ in 0..e {
                    v *= point[var as usize].clone();
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Gradient evaluated at `point`.
    pub fn gradient_at(&self, point: &[T]) -> Result<Vec<T>> {
        (0..self.num_vars)
            .map(|i| self.partial(i as u32)?.evaluate(point))
            .collect()
    }

    /// The substitution f ∘ M: variable `i` is replaced by the linear form
    /// given by row `i` of `map`; the result lives in `map.cols` variables.
    pub fn substitute_linear(&self, map: &LinearMap<T>) -> Result<Self> {
        if map.rows != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: map.rows,
            });
        }
        let rows: Vec<Polynomial<T>> = (0..map.rows)
            .map(|i| Polynomial::linear_form(&map.row(i)))
            .collect();
        // memoized powers of each row form, indexed by (var, exponent)
        let mut powers: BTreeMap<(u32, u32), Polynomial<T>> = BTreeMap::new();
        let mut out = Self::zero(map.cols);
        for (m, c) in self.terms() {
            let mut prod = Polynomial::constant(map.cols, c.clone());
            for (v, e) in m.iter() {
                let key = (v, e);
                powers.entry(key).or_insert_with(|| {
                    let mut acc = rows[v as usize].clone();
                    for _ in 1..e {
                        acc = &acc * &rows[v as usize];
                    }
                    acc
                });
                prod = &prod * &powers[&key];
            }
            for (m2, c2) in prod.terms() {
                out.add_term(m2.clone(), c2.clone());
            }
        }
        Ok(out)
    }

    /// The symmetric matrix `[∂_i ∂_j f](point)`.
    pub fn hessian_at(&self, point: &[T]) -> Result<SymMatrix<T>> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: point.len(),
            });
        }
        let n = self.num_vars;
        let mut h: SymMatrix<T> = SymMatrix::zero(n);
        for (m, c) in self.terms() {
            let pairs: Vec<(u32, u32)> = m.iter().collect();
            for (ai, &(vi, ei)) in pairs.iter().enumerate() {
                for &(vj, ej) in pairs.iter().skip(ai) {
                    let (factor, mi, mj) = if vi == vj {
                        if ei < 2 {
                            continue;
                        }
                        (ei * (ei - 1), vi, vi)
                    } else {
                        (ei * ej, vi, vj)
                    };
                    let mut val = c.clone() * T::from_u32(factor).expect("fits scalar");
                    for (v, e) in m.iter() {
                        let mut e = e;
                        if v == mi {
                            e -= 1;
                        }
                        if v == mj {
                            e -= 1;
                        }
                        for _ in 0..e {
                            val *= point[v as usize].clone();
                        }
                    }
                    let (i, j) = (mi as usize, mj as usize);
                    let cur = h.get(i, j).clone();
                    h.set(i, j, cur + val);
                }
            }
        }
        Ok(h)
    }

    /// The constant Hessian of a quadratic, read directly off the
    /// coefficients.
    pub fn quadratic_hessian(&self) -> Result<SymMatrix<T>> {
        if self.degree().is_some_and(|d| d > 2) {
            return Err(Error::WrongDegree { expected: 2 });
        }
        let n = self.num_vars;
        let mut h: SymMatrix<T> = SymMatrix::zero(n);
        for (m, c) in self.terms() {
            if m.degree() < 2 {
                continue;
            }
            let pairs: Vec<(u32, u32)> = m.iter().collect();
            match pairs.as_slice() {
                [(v, 2)] => {
                    let two = T::from_u32(2).unwrap();
                    h.set(*v as usize, *v as usize, c.clone() * two);
                }
                [(v, 1), (w, 1)] => {
                    h.set(*v as usize, *w as usize, c.clone());
                }
                _ => unreachable!("degree-2 monomial shapes"),
            }
        }
        Ok(h)
    }

    /// The univariate polynomial t ↦ f(base + t·dir).
    pub fn univariate_restriction(&self, base: &[T], dir: &[T]) -> Result<UniPoly<T>> {
        if base.len() != self.num_vars || dir.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: base.len().max(dir.len()),
            });
        }
        let cap = self.degree().unwrap_or(0) as usize + 1;
        let mut acc = vec![T::zero(); cap];
        let mut buf = vec![T::zero(); cap];
        for (m, c) in self.terms() {
            // buf holds c·Π(b_v + d_v t), multiplied in place one linear
            // factor at a time
            buf[0] = c.clone();
            let mut len = 1;
            for (v, e) in m.iter() {
                let b = &base[v as usize];
                let d = &dir[v as usize];
                for _ in 0..e {
                    buf[len] = T::zero();
                    for i in (0..len).rev() {
                        let hi = buf[i].clone() * d.clone();
                        buf[i + 1] += hi;
                        buf[i] *= b.clone();
                    }
                    len += 1;
                }
            }
            for (a, v) in acc.iter_mut().zip(buf.iter_mut().take(len)) {
                *a += std::mem::replace(v, T::zero());
            }
        }
        Ok(UniPoly::from_coeffs(acc))
    }
}

impl Polynomial<Int> {
    /// Same output as `univariate_restriction`, using reference arithmetic
    /// and a reused scratch buffer; this is the samplers' hot path.
    pub fn univariate_restriction_int(&self, base: &[Int], dir: &[Int]) -> Result<UniPoly<Int>> {
        if base.len() != self.num_vars || dir.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: base.len().max(dir.len()),
            });
        }
        let cap = self.degree().unwrap_or(0) as usize + 1;
        let mut acc = vec![Int::zero(); cap];
        let mut buf = vec![Int::zero(); cap];
        for (m, c) in self.terms() {
            buf[0].clone_from(c);
            let mut len = 1;
            for (v, e) in m.iter() {
                let b = &base[v as usize];
                let d = &dir[v as usize];
                for _ in 0..e {
                    buf[len] = Int::zero();
                    for i in (0..len).rev() {
                        let hi = &buf[i] * d;
                        buf[i + 1] += hi;
                        buf[i] = &buf[i] * b;
                    }
                    len += 1;
                }
            }
            for (a, v) in acc.iter_mut().zip(buf.iter().take(len)) {
                *a += v;
            }
        }
        Ok(UniPoly::from_coeffs(acc))
    }
}

impl Polynomial<Rational> {
    /// Smallest positive integer multiplier clearing all denominators,
    /// together with the scaled integer polynomial. Scaling by a positive
    /// constant preserves every sign-based decision made downstream.
    pub fn clear_denominators(&self) -> (Polynomial<Int>, Int) {
        let mut lcm = Int::one();
        for (_, c) in self.terms() {
            lcm = lcm.lcm(c.denom());
        }
        let mut out = Polynomial::zero(self.num_vars);
        for (m, c) in self.terms() {
            let v = c.numer() * (&lcm / c.denom());
            out.add_term(m.clone(), v);
        }
        (out, lcm)
    }

    pub fn to_f64(&self) -> Polynomial<f64> {
        self.map_coeffs(crate::scalar::rat_to_f64)
    }
}

impl<T: Coeff> std::ops::Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<T: Coeff> std::ops::Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<T: Coeff> std::ops::Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = Polynomial::zero(self.num_vars);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Coeff> std::ops::Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        let mut out = Polynomial::zero(self.num_vars);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<T: Coeff> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

/// A dense rows×cols matrix defining a linear change of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Coeff> LinearMap<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
        }
        Ok(LinearMap {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    #[allow(clippy::needless_range_loop)]
    pub fn matvec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j).clone() * x[j].clone();
                }
                acc
            })
            .collect())
    }
}

impl LinearMap<Rational> {
    /// Rank over the rationals by Gaussian elimination.
    #[allow(clippy::needless_range_loop)]
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut rank = 0;
        let mut col = 0;
        while rank < self.rows && col < self.cols {
            let pivot = (rank..self.rows).find(|&i| !m[i][col].is_zero());
            match pivot {
                None => {
                    col += 1;
                    continue;
                }
                Some(p) => {
                    m.swap(rank, p);
                    let inv = m[rank][col].clone();
                    for i in rank + 1..self.rows {
                        if m[i][col].is_zero() {
                            continue;
                        }
                        let factor = &m[i][col] / &inv;
                        for j in col..self.cols {
                            let sub = &factor * &m[rank][j];
                            m[i][j] = &m[i][j] - &sub;
                        }
                    }
                    rank += 1;
                    col += 1;
                }
            }
        }
        rank
    }
}
