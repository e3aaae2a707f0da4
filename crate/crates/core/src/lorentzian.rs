//! Polynomial-time decision of the Lorentzian (completely log-concave)
//! property, and the derived log-concavity tests for homogeneous cubics and
//! for single points.
//!
//! A homogeneous f ≥ 0 of degree d is Lorentzian iff every partial
//! derivative ∂^α f with |α| ≤ d−2 is indecomposable (its variable
//! co-occurrence graph is connected) and every quadratic ∂^α f with
//! |α| = d−2 has a Hessian with exactly one positive eigenvalue. Zero
//! derivatives are skipped; see `FailureKind::Decomposable` for the zero
//! polynomial convention.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{inertia, Inertia};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Coeff;
use crate::{QPoly, Rational};

/// The variable co-occurrence graph of a polynomial: vertices are variables
/// that occur (equivalently, those with ∂_i f ≠ 0), and (i, j) is an edge
/// iff some monomial contains both x_i and x_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportGraph {
    pub active_vars: BTreeSet<u32>,
    pub edges: BTreeSet<(u32, u32)>,
}

impl SupportGraph {
    pub fn of<T: Coeff>(f: &Polynomial<T>) -> Self {
        let mut active = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for (m, _) in f.terms() {
            let vars: Vec<u32> = m.iter().map(|(v, _)| v).collect();
            active.extend(vars.iter().copied());
            for (i, &a) in vars.iter().enumerate() {
                for &b in vars.iter().skip(i + 1) {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
        SupportGraph {
            active_vars: active,
            edges,
        }
    }

    /// Connectivity over the active vertices (union-find). The empty and
    /// single-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        if self.active_vars.len() <= 1 {
            return true;
        }
        let index: BTreeMap<u32, usize> = self
            .active_vars
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut uf = UnionFind::new(index.len());
        for &(a, b) in &self.edges {
            uf.union(index[&a], index[&b]);
        }
        let root = uf.find(0);
        (1..index.len()).all(|i| uf.find(i) == root)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]]; // path halving
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Why a polynomial failed the Lorentzian test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FailureKind {
    Decomposable,
    BadInertia { inertia: Inertia },
    NegativeCoefficient,
    NotHomogeneous,
}

impl FailureKind {
    pub fn name(&self) -> &'static str {
        match self {
            FailureKind::Decomposable => "decomposable",
            FailureKind::BadInertia { .. } => "bad-inertia",
            FailureKind::NegativeCoefficient => "negative-coefficient",
            FailureKind::NotHomogeneous => "not-homogeneous",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzianFailure {
    /// The graded-lex-least multi-index at which the test failed (for
    /// negative coefficients, the offending monomial).
    pub alpha: Monomial,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzianVerdict {
    pub is_lorentzian: bool,
    pub failure_witness: Option<LorentzianFailure>,
}

impl LorentzianVerdict {
    fn pass() -> Self {
        LorentzianVerdict {
            is_lorentzian: true,
            failure_witness: None,
        }
    }

    fn fail(alpha: Monomial, kind: FailureKind) -> Self {
        LorentzianVerdict {
            is_lorentzian: false,
            failure_witness: Some(LorentzianFailure { alpha, kind }),
        }
    }
}

/// Whether f cannot be split as a sum of two nonzero polynomials in disjoint
/// variable sets; equivalently, whether its support graph is connected.
pub fn is_indecomposable<T: Coeff>(f: &Polynomial<T>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(SupportGraph::of(f).is_connected())
}

/// Log-concavity of a nonzero quadratic with nonnegative coefficients: the
/// (constant) Hessian must have exactly one positive eigenvalue.
pub fn quadratic_is_log_concave(f: &QPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() || f.degree() != Some(2) {
        return Err(Error::WrongDegree { expected: 2 });
    }
    if !f.has_nonneg_coeffs() {
        return Err(Error::NegativeCoefficient);
    }
    let h = f.quadratic_hessian()?;
    Ok(inertia(&h).n_pos == 1)
}

/// The Lorentzian decision. Never errors: malformed inputs produce a failing
/// verdict with a witness.
pub fn is_lorentzian(f: &QPoly) -> LorentzianVerdict {
    // negative coefficient: report the graded-lex-least offending monomial
    let zero = Rational::from_integer(0.into());
    if let Some((m, _)) = f.terms().find(|(_, c)| **c < zero) {
        return LorentzianVerdict::fail(m.clone(), FailureKind::NegativeCoefficient);
    }
    if !f.is_homogeneous() {
        return LorentzianVerdict::fail(Monomial::one(), FailureKind::NotHomogeneous);
    }
    let Some(d) = f.degree() else {
        // zero polynomial: reported as decomposable at α = 0 by convention
        return LorentzianVerdict::fail(Monomial::one(), FailureKind::Decomposable);
    };
    if d <= 1 {
        return LorentzianVerdict::pass();
    }

    // walk derivative levels in ascending graded-lex order; each α is
    // reached once, by differentiating along its largest variable
    let mut level: BTreeMap<Monomial, QPoly> = BTreeMap::new();
    level.insert(Monomial::one(), f.clone());
    for k in 0..=(d - 2) {
        for (alpha, g) in &level {
            let support = SupportGraph::of(g);
            let connected = support.is_connected();
            if !connected && (k < d - 2 || !support.edges.is_empty()) {
                return LorentzianVerdict::fail(alpha.clone(), FailureKind::Decomposable);
            }
            if k == d - 2 {
                // a disconnected edgeless quadratic is a sum of pure
                // squares; its inertia count (≥ 2 positives) is the more
                // informative witness, so it is reported instead of the
                // decomposition
                let h = g.quadratic_hessian().expect("derivative is quadratic");
                let ine = inertia(&h);
                if ine.n_pos != 1 {
                    return LorentzianVerdict::fail(
                        alpha.clone(),
                        FailureKind::BadInertia { inertia: ine },
                    );
                }
                if !connected {
                    return LorentzianVerdict::fail(alpha.clone(), FailureKind::Decomposable);
                }
            }
        }
        if k == d - 2 {
            break;
        }
        let mut next: BTreeMap<Monomial, QPoly> = BTreeMap::new();
        for (alpha, g) in &level {
            let start = alpha.max_var().unwrap_or(0);
            for v in start..f.num_vars() as u32 {
                let child = alpha.mul(&Monomial::variable(v));
                if next.contains_key(&child) {
                    continue;
                }
                let dg = g.partial(v).expect("variable in range");
                if !dg.is_zero() {
                    next.insert(child, dg);
                }
            }
        }
        level = next;
    }
    LorentzianVerdict::pass()
}

/// Log-concavity of a homogeneous cubic with nonnegative coefficients on the
/// positive orthant: for cubics this coincides with being Lorentzian, so the
/// polynomial-time test decides it.
pub fn cubic_is_log_concave(f: &QPoly) -> Result<bool> {
    if !f.is_homogeneous() || f.degree() != Some(3) {
        return Err(Error::WrongDegree { expected: 3 });
    }
    if !f.has_nonneg_coeffs() {
        return Err(Error::NegativeCoefficient);
    }
    Ok(is_lorentzian(f).is_lorentzian)
}

/// Pointwise log-concavity of a homogeneous polynomial at a point where it
/// is positive: the Hessian there must have exactly one positive eigenvalue.
pub fn log_concave_at(f: &QPoly, w: &[Rational]) -> Result<bool> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if f.degree().is_none_or(|d| d < 2) {
        return Err(Error::WrongDegree { expected: 2 });
    }
    if f.num_vars() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: f.num_vars(),
        });
    }
    let value = f.evaluate(w)?;
    if value <= Rational::from_integer(0.into()) {
        return Err(Error::NonPositiveAtPoint);
    }
    let h = f.hessian_at(w)?;
    Ok(inertia(&h).n_pos == 1)
}
