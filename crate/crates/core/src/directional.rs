//! Directional log-concavity: the exact depressed-cubic criterion, the
//! z-direction gadget z³ + 3‖x‖²z + 2q(x), and pointwise checks.
//!
//! Everything is decided through the polynomial numerator
//! g = f·D_v²f − (D_v f)², which has the sign of D_v² log f wherever f > 0;
//! no logarithms, no floating point.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::sqrt::compare_to_sqrt;
use crate::{Int, QPoly, Rational};

/// The family z³ + bz + c with nonnegative b, c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepressedCubic {
    pub b: Rational,
    pub c: Rational,
}

impl DepressedCubic {
    pub fn new(b: Rational, c: Rational) -> Result<Self> {
        if b.is_negative() || c.is_negative() {
            return Err(Error::NegativeValue);
        }
        Ok(DepressedCubic { b, c })
    }

    pub fn is_log_concave(&self) -> bool {
        let four_b3 = Rational::from_integer(4.into()) * &self.b * &self.b * &self.b;
        let twenty_seven_c2 = Rational::from_integer(27.into()) * &self.c * &self.c;
        four_b3 >= twenty_seven_c2
    }
}

/// z³ + bz + c is log concave on the nonnegative ray iff 4b³ ≥ 27c².
pub fn depressed_cubic_log_concave(b: &Rational, c: &Rational) -> Result<bool> {
    Ok(DepressedCubic::new(b.clone(), c.clone())?.is_log_concave())
}

/// The z-direction gadget built from a homogeneous cubic q ≥ 0 in n
/// variables: f(x, z) = z³ + 3‖x‖²z + 2q(x) in n+1 variables, z last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionalGadget {
    pub q: QPoly,
    pub assembled: QPoly,
}

pub fn build_directional_gadget(q: &QPoly) -> Result<DirectionalGadget> {
    if !q.is_homogeneous() || !(q.is_zero() || q.degree() == Some(3)) {
        return Err(Error::WrongDegree { expected: 3 });
    }
    if !q.has_nonneg_coeffs() {
        return Err(Error::NegativeCoefficient);
    }
    let n = q.num_vars();
    let z = n as u32;
    let mut f = Polynomial::zero(n + 1);
    f.add_term(Monomial::new([(z, 3)]), Rational::from_integer(1.into()));
    for i in 0..n as u32 {
        f.add_term(
            Monomial::new([(i, 2), (z, 1)]),
            Rational::from_integer(3.into()),
        );
    }
    for (m, c) in q.terms() {
        f.add_term(m.clone(), Rational::from_integer(2.into()) * c);
    }
    Ok(DirectionalGadget {
        q: q.clone(),
        assembled: f,
    })
}

/// Pointwise log-concavity of f in direction v at a nonnegative base point
/// with f(base) > 0: sign of (f·D_v²f − (D_v f)²)(base).
pub fn directional_lc_at(f: &QPoly, base: &[Rational], v: &[Rational]) -> Result<bool> {
    if base.iter().any(|x| x.is_negative()) {
        return Err(Error::NegativeValue);
    }
    let value = f.evaluate(base)?;
    if !value.is_positive() {
        return Err(Error::NonPositiveAtPoint);
    }
    let df = f.directional_derivative(v)?;
    let ddf = df.directional_derivative(v)?;
    let g = &(f * &ddf) - &(&df * &df);
    Ok(!g.evaluate(base)?.is_positive())
}

/// Exact max information for gadgets of the form q = q_G / ℓ: the clique
/// number of G pins max_{‖x‖=1} q_G at √((2/27)(1 − 1/ω)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMaxInfo {
    pub omega: usize,
    pub ell: Rational,
}

/// a(k)² = (2/27)(1 − 1/k); the square of the sphere maximum of q_G when
/// ω(G) = k.
pub fn a_squared(k: usize) -> Rational {
    assert!(k >= 1, "clique numbers start at 1");
    let k = Rational::from_integer(Int::from(k as i64));
    crate::rat(2, 27) * (Rational::from_integer(1.into()) - Rational::from_integer(1.into()) / k)
}

/// The exact verdict for a graph-derived gadget: z-direction log-concavity
/// holds iff a(ω) ≤ ℓ. Valid for every k ≥ 1 including ℓ = 0.
pub fn directional_exact_verdict(ell: &Rational, omega: usize) -> bool {
    compare_to_sqrt(ell, &a_squared(omega)).expect("a(k)² is nonnegative") != Ordering::Less
}

/// Result of a directional gadget check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectionalVerdict {
    /// Decided exactly through the clique oracle data.
    Exact { log_concave: bool },
    /// A grid point where the depressed-cubic criterion fails, with its
    /// simplex grid coordinates.
    Falsified {
        x: Vec<Rational>,
        grid_coords: Vec<u32>,
    },
    /// No violation found on the scanned grid: a semi-decision only.
    NotFalsified { points_checked: u64 },
}

impl DirectionalVerdict {
    pub fn as_bool(&self) -> bool {
        match self {
            DirectionalVerdict::Exact { log_concave } => *log_concave,
            DirectionalVerdict::Falsified { .. } => false,
            DirectionalVerdict::NotFalsified { .. } => true,
        }
    }
}

/// Decide whether the gadget is log concave in the z direction on the
/// nonnegative orthant.
///
/// With exact clique data the verdict is exact (a(ω) vs ℓ). Otherwise the
/// nonnegative part of the sphere is scanned through simplex grid points
/// (q ≥ 0 puts the maximizer there), applying the depressed-cubic criterion
/// with b = 3‖x‖², c = 2q(x) at each point. Points are visited in
/// lexicographic grid order and the first violation is reported.
pub fn gadget_directional_verdict(
    gadget: &DirectionalGadget,
    clique_data: Option<&ExactMaxInfo>,
    grid: u32,
) -> Result<DirectionalVerdict> {
    if let Some(info) = clique_data {
        return Ok(DirectionalVerdict::Exact {
            log_concave: directional_exact_verdict(&info.ell, info.omega),
        });
    }
    if gadget.q.is_zero() {
        // max of q is 0 ≤ 1
        return Ok(DirectionalVerdict::Exact { log_concave: true });
    }
    let n = gadget.q.num_vars();
    let mut checked = 0u64;
    let mut coords = vec![0u32; n];
    let mut found: Option<Vec<u32>> = None;
    enumerate_compositions(grid, n, &mut coords, 0, &mut |c| {
        if found.is_some() {
            return;
        }
        checked += 1;
        let x: Vec<Rational> = c
            .iter()
            .map(|&k| crate::rat(k as i64, grid as i64))
            .collect();
        let norm2: Rational = x.iter().map(|v| v * v).sum();
        let b = Rational::from_integer(3.into()) * norm2;
        let cval = Rational::from_integer(2.into())
            * gadget.q.evaluate(&x).expect("dimension matches");
        let ok = DepressedCubic::new(b, cval)
            .expect("b, c nonnegative on the nonneg orthant")
            .is_log_concave();
        if !ok {
            found = Some(c.to_vec());
        }
    });
    match found {
        Some(c) => {
            let x: Vec<Rational> = c
                .iter()
                .map(|&k| crate::rat(k as i64, grid as i64))
                .collect();
            Ok(DirectionalVerdict::Falsified { x, grid_coords: c })
        }
        None => Ok(DirectionalVerdict::NotFalsified {
            points_checked: checked,
        }),
    }
}

/// All (k_1, …, k_n) with Σk_i = total, in lexicographic order.
fn enumerate_compositions(
    total: u32,
    n: usize,
    coords: &mut Vec<u32>,
    idx: usize,
    visit: &mut impl FnMut(&[u32]),
) {
    if idx == n - 1 {
        coords[idx] = total;
        visit(coords);
        return;
    }
    for k in 0..=total {
        coords[idx] = k;
        enumerate_compositions(total - k, n, coords, idx + 1, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn qpoly(n: usize, terms: &[(&[(u32, u32)], i64)]) -> QPoly {
        Polynomial::from_terms(
            n,
            terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.iter().copied()), rat_int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn depressed_cubic_examples() {
        // boundary: 4·27 = 27·4
        assert!(depressed_cubic_log_concave(&rat_int(3), &rat_int(2)).unwrap());
        assert!(!depressed_cubic_log_concave(&rat_int(0), &rat_int(1)).unwrap());
        assert!(depressed_cubic_log_concave(&rat_int(1), &rat_int(0)).unwrap());
        assert!(depressed_cubic_log_concave(&rat_int(-1), &rat_int(0)).is_err());
    }

    #[test]
    fn gadget_assembly() {
        // q = 0 in one variable: z³ + 3x²z
        let g = build_directional_gadget(&QPoly::zero(1)).unwrap();
        let expect = qpoly(2, &[(&[(1, 3)], 1), (&[(0, 2), (1, 1)], 3)]);
        assert_eq!(g.assembled, expect);

        // q = x³: z³ + 3x²z + 2x³
        let q = qpoly(1, &[(&[(0, 3)], 1)]);
        let g = build_directional_gadget(&q).unwrap();
        let expect = qpoly(
            2,
            &[(&[(1, 3)], 1), (&[(0, 2), (1, 1)], 3), (&[(0, 3)], 2)],
        );
        assert_eq!(g.assembled, expect);

        // invariant: assembled = z³ + 3‖x‖²z + 2q
        assert!(build_directional_gadget(&qpoly(1, &[(&[(0, 2)], 1)])).is_err());
        assert!(build_directional_gadget(&qpoly(1, &[(&[(0, 3)], -1)])).is_err());
    }

    #[test]
    fn pointwise_directional_checks() {
        // f = x0 x1, base (1,1), v = e0: g = -x1² so -1 ≤ 0
        let f = qpoly(2, &[(&[(0, 1), (1, 1)], 1)]);
        assert!(directional_lc_at(&f, &[rat_int(1), rat_int(1)], &[rat_int(1), rat_int(0)])
            .unwrap());

        // f = x0² + x1², base (1,1), v = (1,-1): g(base) = 8 > 0
        let f = qpoly(2, &[(&[(0, 2)], 1), (&[(1, 2)], 1)]);
        assert!(!directional_lc_at(
            &f,
            &[rat_int(1), rat_int(1)],
            &[rat_int(1), rat_int(-1)]
        )
        .unwrap());

        // gadget z³ + 3x²z + 2x³ at (1,1) along e_z: the (b,c) = (3,2)
        // boundary case
        let q = qpoly(1, &[(&[(0, 3)], 1)]);
        let g = build_directional_gadget(&q).unwrap();
        assert!(directional_lc_at(
            &g.assembled,
            &[rat_int(1), rat_int(1)],
            &[rat_int(0), rat_int(1)]
        )
        .unwrap());

        // preconditions
        assert_eq!(
            directional_lc_at(&f, &[rat_int(0), rat_int(0)], &[rat_int(1), rat_int(0)]),
            Err(Error::NonPositiveAtPoint)
        );
        assert_eq!(
            directional_lc_at(&f, &[rat(-1, 2), rat_int(1)], &[rat_int(1), rat_int(0)]),
            Err(Error::NegativeValue)
        );
    }

    #[test]
    fn exact_verdict_thresholds() {
        // a(1) = 0: ℓ = 0 accepts only ω = 1
        assert!(directional_exact_verdict(&rat_int(0), 1));
        assert!(!directional_exact_verdict(&rat_int(0), 3));
        // ℓ(3) for m = 6 variables is exactly a(3) = 2/9
        assert!(directional_exact_verdict(&rat(2, 9), 3));
        assert!(!directional_exact_verdict(&rat(2, 9), 4));
    }

    #[test]
    fn grid_scan_finds_violation() {
        // q = x³ scaled up is clearly too large somewhere on the simplex
        let q = qpoly(1, &[(&[(0, 3)], 3)]);
        let g = build_directional_gadget(&q).unwrap();
        match gadget_directional_verdict(&g, None, 8).unwrap() {
            DirectionalVerdict::Falsified { x, grid_coords } => {
                assert_eq!(grid_coords, vec![8]);
                assert_eq!(x, vec![rat_int(1)]);
            }
            other => panic!("expected falsification, got {other:?}"),
        }

        // q = x³ itself sits exactly on the boundary: max q = 1 on the
        // sphere, so no grid point violates
        let q = qpoly(1, &[(&[(0, 3)], 1)]);
        let g = build_directional_gadget(&q).unwrap();
        assert!(matches!(
            gadget_directional_verdict(&g, None, 8).unwrap(),
            DirectionalVerdict::NotFalsified { .. }
        ));

        // zero q is always fine
        let g = build_directional_gadget(&QPoly::zero(2)).unwrap();
        assert_eq!(
            gadget_directional_verdict(&g, None, 8).unwrap(),
            DirectionalVerdict::Exact { log_concave: true }
        );
    }
}
