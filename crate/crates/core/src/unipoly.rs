//! Univariate polynomials and exact real-root counting.
//!
//! Sturm chains are computed over the integers with signed pseudo-remainders
//! and content stripping, which keeps coefficient growth polynomial and
//! avoids per-step rational normalization.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::{Int, Rational};

/// Coefficients in ascending powers of t; the leading coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> UniPoly<T> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("small integer fits scalar"))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coeff> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                1 if one => write!(f, "t")?,
                1 => write!(f, "{abs} t")?,
                _ if one => write!(f, "t^{k}")?,
                _ => write!(f, "{abs} t^{k}")?,
            }
        }
        Ok(())
    }
}

impl UniPoly<Rational> {
    /// Exact division; `None` when `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let drhs = rhs.degree().unwrap();
        let lead = rhs.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len()];
        while let Some(dr) = rem.degree() {
            if dr < drhs {
                return None;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = dr - drhs;
            q[shift] = factor.clone();
            let mut sub = vec![Rational::zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&Self::from_coeffs(sub));
            if rem.is_zero() {
                return Some(Self::from_coeffs(q));
            }
        }
        None
    }

    /// Clear denominators and strip content: the unique positive-leading
    /// primitive integer polynomial that is a positive rational multiple of
    /// `self`, except the sign of the leading coefficient is preserved.
    pub fn to_int_primitive(&self) -> UniPoly<Int> {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut lcm = Int::from(1);
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        UniPoly::from_coeffs(ints).primitive_part()
    }

    pub fn to_f64(&self) -> UniPoly<f64> {
        self.map_coeffs(crate::scalar::rat_to_f64)
    }
}

impl UniPoly<Int> {
    /// Gcd of the coefficients (positive).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide out the content, preserving the leading sign.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn to_rational(&self) -> UniPoly<Rational> {
        self.map_coeffs(|c| Rational::from_integer(c.clone()))
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Pseudo-remainder scaled so that it is a *positive* rational multiple
    /// of the true remainder of `self / rhs`. Sign variations downstream are
    /// therefore unaffected by the scaling.
    fn signed_pseudo_rem(&self, rhs: &Self) -> Self {
        let da = self.degree().expect("nonzero dividend");
        let db = rhs.degree().expect("nonzero divisor");
        debug_assert!(da >= db);
        let lb = rhs.leading().unwrap().clone();
        let total_pow = (da - db + 1) as u32;
        let mut applied = 0u32;
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let lr = rem.leading().unwrap().clone();
            let shift = dr - db;
            let mut next = vec![Int::zero(); dr]; // degree drops by at least 1
            for (i, c) in rem.coeffs.iter().enumerate().take(dr) {
                next[i] = c * &lb;
            }
            for (j, c) in rhs.coeffs.iter().enumerate().take(db) {
                next[j + shift] -= c * &lr;
            }
            rem = UniPoly::from_coeffs(next);
            applied += 1;
        }
        for _ in applied..total_pow {
            rem = rem.scale(&lb);
        }
        // rem == lb^total_pow * (self mod rhs); fix the sign if the scalar
        // was negative
        if lb.is_negative() && total_pow % 2 == 1 {
            rem = rem.neg();
        }
        rem.primitive_part()
    }

    /// Polynomial gcd via the primitive pseudo-remainder sequence; the result
    /// is primitive with positive leading coefficient.
    pub fn gcd_poly(&self, rhs: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = rhs.primitive_part();
        if a.is_zero() {
            return normalize_sign(b);
        }
        while !b.is_zero() {
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let r = a.signed_pseudo_rem(&b);
            a = b;
            b = r;
        }
        normalize_sign(a)
    }

    /// The square-free part `self / gcd(self, self')`, primitive over ℤ.
    pub fn square_free_part(&self) -> Self {
        let d = self.derivative();
        if d.is_zero() {
            // constant, or zero
            return self.primitive_part();
        }
        let g = self.gcd_poly(&d);
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        let q = self
            .to_rational()
            .div_exact(&g.to_rational())
            .expect("gcd divides");
        q.to_int_primitive()
    }

    /// Sturm chain starting from the primitive part of `self`.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let p0 = self.primitive_part();
        let p1 = p0.derivative().primitive_part();
        let mut chain = vec![p0];
        if p1.is_zero() {
            return chain;
        }
        chain.push(p1);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            if b.degree().is_none() || a.degree() < b.degree() {
                break;
            }
            let r = a.signed_pseudo_rem(b).neg().primitive_part();
            if r.is_zero() {
                break;
            }
            let stop = r.degree() == Some(0);
            chain.push(r);
            if stop {
                break;
            }
        }
        chain
    }
}

fn normalize_sign(p: UniPoly<Int>) -> UniPoly<Int> {
    match p.leading() {
        Some(l) if l.is_negative() => p.neg(),
        _ => p,
    }
}

/// Where a sign-variation count is taken.
#[derive(Debug, Clone, Copy)]
pub enum Endpoint<'a> {
    NegInf,
    Value(&'a Rational),
    PosInf,
}

fn sign_at(p: &UniPoly<Int>, at: Endpoint<'_>) -> i8 {
    let Some(deg) = p.degree() else { return 0 };
    let lead = p.leading().unwrap();
    match at {
        Endpoint::PosInf => sign_of(lead),
        Endpoint::NegInf => {
            let s = sign_of(lead);
            if deg % 2 == 1 {
                -s
            } else {
                s
            }
        }
        Endpoint::Value(x) => {
            let v = p.eval_rational(x);
            if v.is_zero() {
                0
            } else if v.is_negative() {
                -1
            } else {
                1
            }
        }
    }
}

fn sign_of(x: &Int) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_variations(chain: &[UniPoly<Int>], at: Endpoint<'_>) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for p in chain {
        let s = sign_at(p, at);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`,
/// or on the whole line when no interval is given. Exact, via a Sturm chain
/// on the square-free part.
pub fn real_root_count(
    p: &UniPoly<Rational>,
    interval: Option<(&Rational, &Rational)>,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (lo, hi) = match interval {
        None => (Endpoint::NegInf, Endpoint::PosInf),
        Some((a, b)) => {
            if a >= b {
                return Ok(0);
            }
            (Endpoint::Value(a), Endpoint::Value(b))
        }
    };
    Ok(root_count_endpoints(p, lo, hi))
}

/// As `real_root_count` but with explicit, possibly infinite endpoints.
pub fn real_root_count_endpoints(
    p: &UniPoly<Rational>,
    lo: Endpoint<'_>,
    hi: Endpoint<'_>,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(root_count_endpoints(p, lo, hi))
}

fn root_count_endpoints(p: &UniPoly<Rational>, lo: Endpoint<'_>, hi: Endpoint<'_>) -> usize {
    let sf = p.to_int_primitive().square_free_part();
    if sf.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    let chain = sf.sturm_chain();
    let va = sign_variations(&chain, lo);
    let vb = sign_variations(&chain, hi);
    va.saturating_sub(vb)
}

/// True iff all complex roots of `p` are real (with multiplicity): the
/// square-free part must have as many distinct real roots as its degree.
pub fn is_real_rooted(p: &UniPoly<Rational>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.to_int_primitive().square_free_part();
    match sf.degree() {
        None | Some(0) => Ok(true),
        Some(d) => {
            let chain = sf.sturm_chain();
            let count = sign_variations(&chain, Endpoint::NegInf)
                - sign_variations(&chain, Endpoint::PosInf);
            Ok(count == d)
        }
    }
}

/// Integer-level twin of `is_real_rooted` for hot sampling loops. A single
/// remainder sequence suffices: the chain of p itself counts distinct real
/// roots at ±∞ even with multiplicities, and its last element is (a positive
/// multiple of) gcd(p, p'), whose degree gives the square-free degree.
pub fn is_real_rooted_int(p: &UniPoly<Int>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match p.degree() {
        None | Some(0) => Ok(true),
        Some(d) => {
            let chain = p.sturm_chain();
            let gcd_deg = chain.last().and_then(|g| g.degree()).unwrap_or(0);
            let count = sign_variations(&chain, Endpoint::NegInf)
                - sign_variations(&chain, Endpoint::PosInf);
            Ok(count == d - gcd_deg)
        }
    }
}

/// Yun's square-free decomposition over the rationals: returns pairwise
/// coprime square-free factors with their multiplicities, so that up to a
/// constant `p = Π factor_i ^ mult_i`.
pub fn square_free_decomposition(p: &UniPoly<Rational>) -> Result<Vec<(UniPoly<Rational>, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let gcd_q = |a: &UniPoly<Rational>, b: &UniPoly<Rational>| -> UniPoly<Rational> {
        a.to_int_primitive()
            .gcd_poly(&b.to_int_primitive())
            .to_rational()
    };
    let dp = p.derivative();
    let g = gcd_q(p, &dp);
    let mut factors = Vec::new();
    if g.degree() == Some(0) {
        factors.push((p.clone(), 1));
        return Ok(factors);
    }
    let mut w = p.div_exact(&g).expect("gcd divides p");
    let y = dp.div_exact(&g).expect("gcd divides p'");
    let mut z = y.sub(&w.derivative());
    let mut mult = 1u32;
    while w.degree().is_some_and(|d| d > 0) {
        let a = gcd_q(&w, &z);
        if a.degree().is_some_and(|d| d > 0) {
            factors.push((a.clone(), mult));
        }
        w = w.div_exact(&a).expect("factor divides w");
        let y2 = z.div_exact(&a).expect("factor divides z");
        z = y2.sub(&w.derivative());
        mult += 1;
    }
    Ok(factors)
}
